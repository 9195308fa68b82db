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

#include "radioprop/shadowing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "radioprop/measurements.hpp"
#include "stat_util.hpp"

namespace radioprop {

namespace {

constexpr double inv_sqrt_2pi = 0.3989422804014326779;

void require_finite_samples(std::span<const double> samples) {
    for (double x : samples)
        if (!std::isfinite(x))
            throw std::invalid_argument("samples must be finite");
}

} // namespace

double estimate_mean(std::span<const double> samples_dbm) {
    if (samples_dbm.empty())
        throw std::invalid_argument("mean of an empty sample set");
    require_finite_samples(samples_dbm);
    detail::CompensatedSum sum;
    for (double x : samples_dbm)
        sum.add(x);
    return sum.value() / static_cast<double>(samples_dbm.size());
}

double estimate_variance(std::span<const double> samples_dbm) {
    if (samples_dbm.size() < 2)
        throw std::invalid_argument("variance needs at least 2 samples");
    const double mu = estimate_mean(samples_dbm);
    detail::CompensatedSum sq;
    for (double x : samples_dbm) {
        const double d = x - mu;
        sq.add(d * d);
    }
    return sq.value() / static_cast<double>(samples_dbm.size() - 1);
}

double gaussian_pdf(double x, double mu, double sigma) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("sigma must be positive");
    const double z = (x - mu) / sigma;
    return inv_sqrt_2pi / sigma * std::exp(-0.5 * z * z);
}

HistogramSeries build_histogram(std::span<const double> samples, double bin_width) {
    if (samples.empty())
        throw std::invalid_argument("histogram of an empty sample set");
    if (!(bin_width > 0.0) || !std::isfinite(bin_width))
        throw std::invalid_argument("bin width must be positive");
    require_finite_samples(samples);

    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    const auto lo_idx = static_cast<long long>(std::floor(*mn / bin_width));
    const auto hi_idx = static_cast<long long>(std::floor(*mx / bin_width));
    const auto n_bins = static_cast<std::size_t>(hi_idx - lo_idx + 1);
    if (n_bins > (1u << 24))
        throw std::invalid_argument("data range spans too many bins for this width");

    HistogramSeries h;
    h.bin_edges.resize(n_bins + 1);
    for (std::size_t i = 0; i <= n_bins; ++i)
        h.bin_edges[i] = static_cast<double>(lo_idx + static_cast<long long>(i)) * bin_width;
    h.counts.assign(n_bins, 0);
    for (double x : samples) {
        auto idx = static_cast<long long>(std::floor(x / bin_width)) - lo_idx;
        idx = std::clamp<long long>(idx, 0, static_cast<long long>(n_bins) - 1);
        ++h.counts[static_cast<std::size_t>(idx)];
    }
    h.densities.resize(n_bins);
    const double norm = static_cast<double>(samples.size()) * bin_width;
    for (std::size_t i = 0; i < n_bins; ++i)
        h.densities[i] = static_cast<double>(h.counts[i]) / norm;
    return h;
}

double ks_statistic_gaussian(std::span<const double> samples, double mu, double sigma) {
    if (samples.size() < 2)
        throw std::invalid_argument("ks statistic needs at least 2 samples");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("sigma must be positive");
    require_finite_samples(samples);
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    return detail::ks_statistic_sorted(sorted,
                                       [&](double x) { return detail::normal_cdf(x, mu, sigma); });
}

ShadowingReport fit_shadowing(std::span<const double> samples_dbm, double bin_width_db) {
    if (samples_dbm.size() < 30)
        throw std::invalid_argument("shadowing fit needs at least 30 samples, got " +
                                    std::to_string(samples_dbm.size()));
    const double mu = estimate_mean(samples_dbm);
    const double var = estimate_variance(samples_dbm);
    if (var == 0.0)
        throw std::invalid_argument("samples are constant; no density overlay exists");

    ShadowingReport report;
    report.fit = {mu, std::sqrt(var), samples_dbm.size()};
    report.histogram = build_histogram(samples_dbm, bin_width_db);
    report.ks = ks_statistic_gaussian(samples_dbm, report.fit.mu_dbm, report.fit.sigma_db);
    return report;
}

std::string write_shadowing_report(const ShadowingReport &report) {
    std::string out;
    out += "n = " + std::to_string(report.fit.n) + "\n";
    out += "mu_dbm = " + to_decimal_string(report.fit.mu_dbm) + "\n";
    out += "sigma_db = " + to_decimal_string(report.fit.sigma_db) + "\n";
    out += "ks = " + to_decimal_string(report.ks) + "\n";
    return out;
}

std::string write_shadowing_series_csv(const ShadowingReport &report) {
    std::string out = "bin_center,count,density,model_density\n";
    const auto &h = report.histogram;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const double center = h.center(i);
        out += to_decimal_string(center);
        out += ',';
        out += std::to_string(h.counts[i]);
        out += ',';
        out += to_decimal_string(h.densities[i]);
        out += ',';
        out += to_decimal_string(gaussian_pdf(center, report.fit.mu_dbm, report.fit.sigma_db));
        out += '\n';
    }
    return out;
}

} // namespace radioprop
