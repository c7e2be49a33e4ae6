// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace orilink {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kHalfPi = 0.5 * kPi;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Maps any real angle to [0, 2*pi).
inline double wrap_two_pi(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0) y += kTwoPi;
    if (y >= kTwoPi) y = 0.0;
    return y;
}

// Maps any real angle to (-pi, pi]; ties at -pi resolve to +pi.
inline double wrap_pi(double x) {
    double y = wrap_two_pi(x);
    if (y > kPi) y -= kTwoPi;
    return y;
}

// Adaptive Simpson quadrature. The tolerance is on the absolute error of the
// whole integral; recursion splits the interval until the local Richardson
// estimate meets its share of the budget.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double tol = 1e-10, int max_depth = 60);

// Quantile of the standard normal distribution (Acklam's rational
// approximation polished with one Halley step). Accurate to ~1e-15 for
// p in (0, 1).
double normal_quantile(double p);

// Standard normal CDF via erfc, accurate in both tails.
inline double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

inline double normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
}

// 64-bit FNV-1a hash, used for config provenance fingerprints.
std::uint64_t fnv1a64(const void* data, std::size_t len);

}  // namespace orilink
