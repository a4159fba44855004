#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hns/core.hpp"
#include "hns/transforms.hpp"

namespace hns {

/// Result of an isomorphism check.
struct IsoReport {
    bool passed = false;
    double max_residual = 0;
    /// Residuals on the E1*E1, E1*E2, E2*E2 basis pairs and the unit image.
    std::array<double, 4> basis_residuals{};
    int samples_checked = 0;
};

/// Checks that the change of basis `tr` carries `source` to `target`: the map
/// sending old-basis coordinates to new-basis coordinates must satisfy
/// phi(u*v) = phi(u)*phi(v). Residuals (scaled by the magnitude of the
/// compared products) are taken on the three basis pairs, on the unit image
/// when both systems have one, and on `samples` random pairs with coordinates
/// in [-10, 10]. Deterministic for a fixed seed.
IsoReport verify_isomorphism(const StructuralConstants& source,
                             const StructuralConstants& target,
                             const BasisTransform& tr, int samples = 64,
                             std::uint64_t seed = 0x484e53, double tol = kEps);

/// Inclusive coordinate grid for brute-force searches.
struct GridSpec {
    double lo = -2, hi = 2, step = 0.5;
};

/// All grid points X with X*E1 = E1 and X*E2 = E2 within tolerance. Oracle
/// for unit_element on tables whose unit lands on the grid.
std::vector<Element> brute_force_units(const StructuralConstants& t, GridSpec grid);

}  // namespace hns
