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

#ifndef RADIOPROP_SMALLSCALE_HPP
#define RADIOPROP_SMALLSCALE_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace radioprop {

// Complex baseband capture. Samples are 32-bit floats, matching the on-disk
// `.dat` layout, so file round trips are bit-exact.
struct IqStream {
    std::vector<std::complex<float>> samples;
    double sample_rate_hz = 0.0;
};

// Sum-of-paths fading simulation setup. Path amplitudes are equal,
// a_n = sqrt(omega / n_paths), arrival angles are iid uniform over [0, 2pi)
// and delays iid uniform over [0, max_delay_s]; identical configs (seed
// included) produce bit-identical streams.
struct MultipathConfig {
    int n_paths = 1;
    double velocity_mps = 0.0;
    double fc_hz = 0.0;
    double omega = 1.0;       // total envelope power, sum of squared path amplitudes
    double max_delay_s = 1e-6;
    std::uint64_t seed = 0;
};

// Rayleigh envelope fit. Two parameter conventions circulate for this
// distribution, so the fit carries both and keeps them locked together:
// sigma_scale is the canonical scale (the per-quadrature Gaussian sigma) and
// omega_power is the mean envelope power, omega_power == 2 * sigma_scale^2.
struct RayleighFit {
    double sigma_scale = 0.0;
    double omega_power = 0.0;
    std::size_t n = 0;
    double ks = 0.0; // KS statistic against the fitted Rayleigh CDF
};

struct SlotEstimate {
    double slot_duration_s = 0.0;
    std::vector<double> null_positions; // null-run midpoints, fractional sample units
};

// Doppler shift (v * fc / c) * cos(theta): positive toward the arriving
// wave, negative away from it.
double doppler_shift_hz(double velocity_mps, double fc_hz, double theta_rad);

// Maximum Doppler shift v * fc / c, reached at theta in {0, pi}.
double max_doppler_hz(double velocity_mps, double fc_hz);

// Complex envelope of a continuous-wave probe through the multipath channel,
// sampled at sample_rate_hz for duration_s. Each path contributes
// a_n * exp(-j * phi_n(t)) with phi_n(t) = 2pi * ((fc + f_Dn) * tau_n - f_Dn * t).
IqStream simulate_envelope(const MultipathConfig &cfg, double duration_s, double sample_rate_hz);

// Pointwise magnitudes |s_i|.
std::vector<double> envelope(const IqStream &stream);

// Moment estimate of the Rayleigh scale, sigma = sqrt(sum(r_i^2) / (2N)),
// plus the KS statistic against the fitted distribution. Throws
// std::invalid_argument on all-zero or negative input.
RayleighFit estimate_rayleigh_scale(std::span<const double> env);

// Rayleigh density in the power convention:
// p(x) = (2x / omega) * exp(-x^2 / omega), x >= 0.
double rayleigh_pdf(double x, double omega_power);

// Decodes interleaved little-endian float32 (I, Q) pairs, the common SDR
// capture layout. The file carries no header, so the sample rate must be
// supplied. Throws dat_error on truncation or non-finite values.
IqStream parse_iq_dat(std::span<const std::byte> bytes, double sample_rate_hz);

// Inverse of parse_iq_dat; bit-exact round trip.
std::vector<std::byte> write_iq_dat(const IqStream &stream);

// Finds burst structure from envelope nulls. A null region is a maximal run
// of samples below threshold_fraction * median(envelope); the median keeps
// deep fades from dragging the reference down. The slot duration is the
// median spacing of consecutive null-run midpoints. Throws detection_error
// when fewer than two null regions exist.
SlotEstimate detect_slots(std::span<const double> env, double sample_rate_hz,
                          double threshold_fraction = 0.1);

// CSV `t_s,magnitude`.
std::string write_envelope_csv(const IqStream &stream);

// Flat `key = value` text report.
std::string write_rayleigh_report(const RayleighFit &fit);

// CSV `x,empirical_density,model_density` comparing the envelope histogram
// against the fitted Rayleigh density. bin_width <= 0 selects a width that
// spans the data with 50 bins.
std::string write_pdf_comparison_csv(std::span<const double> env, const RayleighFit &fit,
                                     double bin_width = 0.0);

} // namespace radioprop

#endif // RADIOPROP_SMALLSCALE_HPP
