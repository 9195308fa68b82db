// SPDX-License-Identifier: Apache-2.0
//
// radioprop - propagation measurement analysis toolkit
// Copyright (C) 2026 radioprop contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "radioprop/smallscale.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "radioprop/errors.hpp"
#include "radioprop/measurements.hpp"
#include "radioprop/pathloss.hpp"
#include "radioprop/shadowing.hpp"
#include "stat_util.hpp"

namespace radioprop {

namespace {

// Uniform [0, 1) straight from the generator bits. std::uniform_real_distribution
// is implementation-defined, which would break bit-identical streams across
// standard libraries.
double next_uniform(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void require_positive(double v, const char *name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be positive");
}

void require_non_negative(double v, const char *name) {
    if (!(v >= 0.0) || !std::isfinite(v))
        throw std::invalid_argument(std::string(name) + " must be non-negative");
}

} // namespace

double doppler_shift_hz(double velocity_mps, double fc_hz, double theta_rad) {
    require_non_negative(velocity_mps, "velocity_mps");
    require_positive(fc_hz, "fc_hz");
    if (!std::isfinite(theta_rad))
        throw std::invalid_argument("theta_rad must be finite");
    return velocity_mps * fc_hz / speed_of_light_mps * std::cos(theta_rad);
}

double max_doppler_hz(double velocity_mps, double fc_hz) {
    require_non_negative(velocity_mps, "velocity_mps");
    require_positive(fc_hz, "fc_hz");
    return velocity_mps * fc_hz / speed_of_light_mps;
}

IqStream simulate_envelope(const MultipathConfig &cfg, double duration_s, double sample_rate_hz) {
    if (cfg.n_paths < 1)
        throw std::invalid_argument("n_paths must be at least 1");
    require_non_negative(cfg.velocity_mps, "velocity_mps");
    require_positive(cfg.fc_hz, "fc_hz");
    require_positive(cfg.omega, "omega");
    require_non_negative(cfg.max_delay_s, "max_delay_s");
    require_positive(sample_rate_hz, "sample_rate_hz");
    require_positive(duration_s, "duration_s");
    const auto n_samples = static_cast<std::size_t>(std::llround(duration_s * sample_rate_hz));
    if (n_samples < 1)
        throw std::invalid_argument("duration * sample rate must be at least 1 sample");

    const auto n_paths = static_cast<std::size_t>(cfg.n_paths);
    const double amplitude = std::sqrt(cfg.omega / static_cast<double>(cfg.n_paths));
    const double two_pi = 2.0 * std::numbers::pi;

    // Draw order is part of the stream contract: per path, angle then delay.
    std::mt19937_64 rng(cfg.seed);
    std::vector<double> phase0(n_paths);  // 2pi * (fc + f_D) * tau, constant per path
    std::vector<double> omega_d(n_paths); // 2pi * f_D
    for (std::size_t k = 0; k < n_paths; ++k) {
        const double theta = two_pi * next_uniform(rng);
        const double tau = cfg.max_delay_s * next_uniform(rng);
        const double fd = max_doppler_hz(std::max(cfg.velocity_mps, 0.0), cfg.fc_hz) *
                          std::cos(theta);
        phase0[k] = two_pi * (cfg.fc_hz + fd) * tau;
        omega_d[k] = two_pi * fd;
    }

    IqStream stream;
    stream.sample_rate_hz = sample_rate_hz;
    stream.samples.resize(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = static_cast<double>(i) / sample_rate_hz;
        double re = 0.0;
        double im = 0.0;
        for (std::size_t k = 0; k < n_paths; ++k) {
            const double phi = phase0[k] - omega_d[k] * t;
            re += std::cos(phi);
            im -= std::sin(phi);
        }
        stream.samples[i] = {static_cast<float>(amplitude * re),
                             static_cast<float>(amplitude * im)};
    }
    return stream;
}

std::vector<double> envelope(const IqStream &stream) {
    std::vector<double> env;
    env.reserve(stream.samples.size());
    for (const auto &s : stream.samples)
        env.push_back(std::hypot(static_cast<double>(s.real()), static_cast<double>(s.imag())));
    return env;
}

RayleighFit estimate_rayleigh_scale(std::span<const double> env) {
    if (env.size() < 2)
        throw std::invalid_argument("rayleigh fit needs at least 2 envelope samples");
    bool any_positive = false;
    detail::CompensatedSum sq;
    for (double r : env) {
        if (!std::isfinite(r) || r < 0.0)
            throw std::invalid_argument("envelope values must be finite and non-negative");
        any_positive |= r > 0.0;
        sq.add(r * r);
    }
    if (!any_positive)
        throw std::invalid_argument("envelope is identically zero");

    RayleighFit fit;
    fit.n = env.size();
    fit.sigma_scale = std::sqrt(sq.value() / (2.0 * static_cast<double>(env.size())));
    fit.omega_power = 2.0 * fit.sigma_scale * fit.sigma_scale;

    std::vector<double> sorted(env.begin(), env.end());
    std::sort(sorted.begin(), sorted.end());
    const double omega = fit.omega_power;
    fit.ks = detail::ks_statistic_sorted(
        sorted, [omega](double x) { return -std::expm1(-x * x / omega); });
    return fit;
}

double rayleigh_pdf(double x, double omega_power) {
    require_positive(omega_power, "omega_power");
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("rayleigh density is defined for x >= 0");
    return 2.0 * x / omega_power * std::exp(-x * x / omega_power);
}

IqStream parse_iq_dat(std::span<const std::byte> bytes, double sample_rate_hz) {
    require_positive(sample_rate_hz, "sample_rate_hz");
    if (bytes.size() % 8 != 0)
        throw dat_error(bytes.size() - bytes.size() % 8,
                        "file length " + std::to_string(bytes.size()) +
                            " is not a whole number of float32 I/Q pairs");

    auto read_f32 = [&bytes](std::size_t offset) {
        std::uint32_t u = static_cast<std::uint32_t>(std::to_integer<std::uint8_t>(bytes[offset])) |
                          static_cast<std::uint32_t>(std::to_integer<std::uint8_t>(bytes[offset + 1]))
                              << 8 |
                          static_cast<std::uint32_t>(std::to_integer<std::uint8_t>(bytes[offset + 2]))
                              << 16 |
                          static_cast<std::uint32_t>(std::to_integer<std::uint8_t>(bytes[offset + 3]))
                              << 24;
        return std::bit_cast<float>(u);
    };

    IqStream stream;
    stream.sample_rate_hz = sample_rate_hz;
    stream.samples.resize(bytes.size() / 8);
    for (std::size_t i = 0; i < stream.samples.size(); ++i) {
        const float re = read_f32(8 * i);
        const float im = read_f32(8 * i + 4);
        if (!std::isfinite(re) || !std::isfinite(im))
            throw dat_error(8 * i, "non-finite IQ value at sample " + std::to_string(i));
        stream.samples[i] = {re, im};
    }
    return stream;
}

std::vector<std::byte> write_iq_dat(const IqStream &stream) {
    std::vector<std::byte> bytes;
    bytes.reserve(stream.samples.size() * 8);
    auto put_f32 = [&bytes](float v) {
        const auto u = std::bit_cast<std::uint32_t>(v);
        bytes.push_back(static_cast<std::byte>(u & 0xFF));
        bytes.push_back(static_cast<std::byte>((u >> 8) & 0xFF));
        bytes.push_back(static_cast<std::byte>((u >> 16) & 0xFF));
        bytes.push_back(static_cast<std::byte>((u >> 24) & 0xFF));
    };
    for (const auto &s : stream.samples) {
        put_f32(s.real());
        put_f32(s.imag());
    }
    return bytes;
}

SlotEstimate detect_slots(std::span<const double> env, double sample_rate_hz,
                          double threshold_fraction) {
    require_positive(sample_rate_hz, "sample_rate_hz");
    if (!(threshold_fraction > 0.0) || !(threshold_fraction < 1.0))
        throw std::invalid_argument("threshold_fraction must be in (0, 1)");
    if (env.size() < 2)
        throw std::invalid_argument("envelope too short for slot detection");

    std::vector<double> scratch(env.begin(), env.end());
    const double threshold = threshold_fraction * detail::median_inplace(scratch);

    // Null regions: maximal runs below the threshold, located at their midpoint.
    std::vector<double> midpoints;
    std::size_t run_start = 0;
    bool in_run = false;
    for (std::size_t i = 0; i <= env.size(); ++i) {
        const bool below = i < env.size() && env[i] < threshold;
        if (below && !in_run) {
            run_start = i;
            in_run = true;
        } else if (!below && in_run) {
            midpoints.push_back(0.5 * static_cast<double>(run_start + (i - 1)));
            in_run = false;
        }
    }
    if (midpoints.size() < 2)
        throw detection_error("found " + std::to_string(midpoints.size()) +
                              " null region(s); slot timing needs at least 2");

    std::vector<double> gaps(midpoints.size() - 1);
    for (std::size_t i = 0; i + 1 < midpoints.size(); ++i)
        gaps[i] = midpoints[i + 1] - midpoints[i];

    SlotEstimate est;
    est.slot_duration_s = detail::median_inplace(gaps) / sample_rate_hz;
    est.null_positions = std::move(midpoints);
    return est;
}

std::string write_envelope_csv(const IqStream &stream) {
    std::string out = "t_s,magnitude\n";
    const auto env = envelope(stream);
    for (std::size_t i = 0; i < env.size(); ++i) {
        out += to_decimal_string(static_cast<double>(i) / stream.sample_rate_hz);
        out += ',';
        out += to_decimal_string(env[i]);
        out += '\n';
    }
    return out;
}

std::string write_rayleigh_report(const RayleighFit &fit) {
    std::string out;
    out += "n = " + std::to_string(fit.n) + "\n";
    out += "sigma_scale = " + to_decimal_string(fit.sigma_scale) + "\n";
    out += "omega_power = " + to_decimal_string(fit.omega_power) + "\n";
    out += "ks = " + to_decimal_string(fit.ks) + "\n";
    return out;
}

std::string write_pdf_comparison_csv(std::span<const double> env, const RayleighFit &fit,
                                     double bin_width) {
    if (env.empty())
        throw std::invalid_argument("empty envelope");
    if (bin_width <= 0.0) {
        const double mx = *std::max_element(env.begin(), env.end());
        if (mx <= 0.0)
            throw std::invalid_argument("envelope is identically zero");
        bin_width = mx / 50.0;
    }
    const auto hist = build_histogram(env, bin_width);
    std::string out = "x,empirical_density,model_density\n";
    for (std::size_t i = 0; i < hist.size(); ++i) {
        const double center = hist.center(i);
        out += to_decimal_string(center);
        out += ',';
        out += to_decimal_string(hist.densities[i]);
        out += ',';
        out += to_decimal_string(rayleigh_pdf(std::max(center, 0.0), fit.omega_power));
        out += '\n';
    }
    return out;
}

} // namespace radioprop
