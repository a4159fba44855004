#pragma once

#include <algorithm>
#include <cmath>

namespace hns {

/// Default comparison tolerance used across the library.
inline constexpr double kEps = 1e-9;

/// Mixed absolute/relative comparison: |a - b| <= eps * max(1, |a|, |b|).
/// Tables may carry constants spanning orders of magnitude, so a purely
/// absolute test is too strict and a purely relative one breaks near zero.
inline bool near(double a, double b, double eps = kEps) {
    return std::abs(a - b) <= eps * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool near_zero(double a, double scale = 1.0, double eps = kEps) {
    return std::abs(a) <= eps * std::max(1.0, std::abs(scale));
}

}  // namespace hns
