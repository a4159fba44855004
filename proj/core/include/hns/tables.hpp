#pragma once

#include "hns/core.hpp"

namespace hns::tables {

/// Complex numbers: E2*E2 = -E1.
inline StructuralConstants complex() { return {1, 0, -1, 0, 1, 0}; }

/// Dual numbers: E2*E2 = 0.
inline StructuralConstants dual() { return {1, 0, 0, 0, 1, 0}; }

/// Double numbers: E2*E2 = +E1.
inline StructuralConstants double_numbers() { return {1, 0, 1, 0, 1, 0}; }

/// Direct sum R+R: two orthogonal idempotents.
inline StructuralConstants rr() { return {1, 0, 0, 0, 0, 1}; }

/// Unital table with E1 the unit and E2*E2 = p*E1 + q*E2; the common shape
/// of the Gamma3 and Gamma5 systems.
inline StructuralConstants unital_pq(double p, double q) {
    return {1, 0, p, 0, 1, q};
}

/// Diagonal table: E1*E1 = alpha11*E1 + beta11*E2, E1*E2 = 0,
/// E2*E2 = alpha22*E1 + beta22*E2.
inline StructuralConstants diagonal(double alpha11, double beta11,
                                    double alpha22, double beta22) {
    return {alpha11, 0, alpha22, beta11, 0, beta22};
}

/// Gamma7: diagonal with beta11 = alpha22 = 0.
inline StructuralConstants gamma7(double alpha11, double beta22) {
    return diagonal(alpha11, 0, 0, beta22);
}

}  // namespace hns::tables
