// SPDX-License-Identifier: Apache-2.0
//
// Composite Simpson integration for density normalization checks.

#ifndef RADIOPROP_TESTS_QUADRATURE_HPP
#define RADIOPROP_TESTS_QUADRATURE_HPP

#include <cmath>
#include <cstddef>

namespace test_support {

template <typename F> double simpson(F f, double a, double b, std::size_t intervals) {
    if (intervals % 2 != 0)
        ++intervals;
    const double h = (b - a) / static_cast<double>(intervals);
    double sum = f(a) + f(b);
    for (std::size_t i = 1; i < intervals; ++i)
        sum += f(a + h * static_cast<double>(i)) * (i % 2 == 0 ? 2.0 : 4.0);
    return sum * h / 3.0;
}

// Standard normal quantile by bisection on the CDF; plenty for test inputs.
inline double normal_quantile(double p) {
    auto cdf = [](double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); };
    double lo = -12.0, hi = 12.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace test_support

#endif
