#pragma once

#include <random>

#include "hns/core.hpp"
#include "hns/transforms.hpp"

namespace hns::testing {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Uniform in [lo, hi] excluding a band around zero.
inline double uniform_nonzero(std::mt19937_64& rng, double lo, double hi,
                              double min_abs = 0.1) {
    for (;;) {
        const double v = uniform(rng, lo, hi);
        if (std::abs(v) >= min_abs) return v;
    }
}

inline StructuralConstants random_table(std::mt19937_64& rng, double lo = -3, double hi = 3) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi),
            uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline Element random_element(std::mt19937_64& rng, double lo = -10, double hi = 10) {
    return {uniform(rng, lo, hi), uniform(rng, lo, hi)};
}

inline BasisTransform random_transform(std::mt19937_64& rng, double min_det = 0.1) {
    for (;;) {
        const BasisTransform t{uniform(rng, -2, 2), uniform(rng, -2, 2),
                               uniform(rng, -2, 2), uniform(rng, -2, 2)};
        if (std::abs(t.det()) > min_det) return t;
    }
}

/// Random table guaranteed to have a constant unit: a family instance in a
/// random basis.
inline StructuralConstants random_unital_table(std::mt19937_64& rng) {
    StructuralConstants base;
    if (uniform(rng, 0, 1) < 0.5)
        base = family_5(uniform_nonzero(rng, -3, 3), uniform(rng, -3, 3),
                        uniform(rng, -3, 3));
    else
        base = family_sol2(uniform_nonzero(rng, -3, 3), uniform_nonzero(rng, -3, 3));
    return change_basis(base, random_transform(rng));
}

}  // namespace hns::testing
