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

#ifndef RADIOPROP_SHADOWING_HPP
#define RADIOPROP_SHADOWING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace radioprop {

// Moment-matched Gaussian fit of dB-domain received power.
struct ShadowFit {
    double mu_dbm = 0.0;
    double sigma_db = 0.0;
    std::size_t n = 0;
};

// Fixed-width histogram with bins aligned to integer multiples of the bin
// width, left-closed right-open. Densities are per unit of the sample axis,
// so sum(density * width) == 1.
struct HistogramSeries {
    std::vector<double> bin_edges;      // size() + 1 entries, strictly increasing
    std::vector<std::uint64_t> counts;  // sums to the sample count
    std::vector<double> densities;

    std::size_t size() const { return counts.size(); }
    double width() const { return bin_edges[1] - bin_edges[0]; }
    double center(std::size_t i) const { return 0.5 * (bin_edges[i] + bin_edges[i + 1]); }
};

// Arithmetic mean. Throws std::invalid_argument on an empty or non-finite
// input.
double estimate_mean(std::span<const double> samples_dbm);

// Unbiased sample variance (N-1 divisor). Requires at least two samples.
double estimate_variance(std::span<const double> samples_dbm);

// Normal density, sigma > 0.
double gaussian_pdf(double x, double mu, double sigma);

HistogramSeries build_histogram(std::span<const double> samples, double bin_width);

// Two-sided Kolmogorov-Smirnov statistic of the samples against a Gaussian
// CDF: sup |empirical CDF - CDF(mu, sigma)|. Distribution-free, so it is
// insensitive to the 1 dB report quantization that makes binned statistics
// fragile at small n.
double ks_statistic_gaussian(std::span<const double> samples, double mu, double sigma);

struct ShadowingReport {
    ShadowFit fit;
    HistogramSeries histogram;
    double ks = 0.0;
};

// Moment-matched Gaussian fit plus histogram and goodness-of-fit. Requires
// at least 30 samples; callers should treat n < 500 as thin data. Constant
// input (zero variance) is rejected because no density overlay exists.
ShadowingReport fit_shadowing(std::span<const double> samples_dbm, double bin_width_db = 1.0);

// Flat `key = value` text report.
std::string write_shadowing_report(const ShadowingReport &report);

// CSV series `bin_center,count,density,model_density` for external plotting.
std::string write_shadowing_series_csv(const ShadowingReport &report);

} // namespace radioprop

#endif // RADIOPROP_SHADOWING_HPP
