#pragma once

#include <string>
#include <vector>

#include "hns/core.hpp"

namespace hns {

/// Invertible change of basis. Row i gives the new basis vector
/// f_i = t_i1 * E1 + t_i2 * E2 in the old basis.
struct BasisTransform {
    double t11 = 1, t12 = 0;
    double t21 = 0, t22 = 1;

    double det() const { return t11 * t22 - t12 * t21; }

    static BasisTransform identity() { return {}; }

    bool operator==(const BasisTransform&) const = default;
};

/// Inverse transform. Throws SingularTransform when |det| is below tolerance.
BasisTransform invert(const BasisTransform& t);

/// Applies a transform to an element's old-basis coordinates, returning its
/// coordinates in the new basis (solves v = m1'*f1 + m2'*f2).
Element to_new_basis(const BasisTransform& t, Element v);

/// Re-expresses a table in the basis given by the transform's rows. Applying
/// the inverse transform afterwards restores the original table.
StructuralConstants change_basis(const StructuralConstants& t, const BasisTransform& tr);

/// First solution family of the constant-unit conditions:
/// b11 = 0, a12 = 0, b12 = a11. Unit is (1/a11) * E1.
StructuralConstants family_5(double a11, double a22, double b22);

/// Second solution family: b11 = 0, a12 = 0, a11 = b12 = b22, a22 != 0.
/// Unit is (1/b22) * E1.
StructuralConstants family_sol2(double a22, double b22);

/// f1 = (1/a11) E1, f2 = E2: takes a family_5 table to its Gamma3 form
/// with f2*f2 = a11*a22*f1 + b22*f2.
BasisTransform gamma2_to_gamma3(double a11);

/// f1 = (1/b22) E1, f2 = E2: takes a family_sol2 table to its Gamma5 form
/// with f2*f2 = a22*b22*f1 + b22*f2.
BasisTransform gamma4_to_gamma5(double b22);

/// Checks a diagonal table (a12 = b12 = 0) for the constant-unit condition
/// beta11 = alpha22 = 0 and returns the resulting Gamma7 table. Throws
/// NotDiagonal or NoConstantUnit.
StructuralConstants diagonal_reduce(const StructuralConstants& t);

/// The transform whose rows are the two orthogonal idempotents R1, R2 of a
/// Gamma7 table expressed in its (f1, f2) basis. Solution 1 keeps the order
/// R1 = (1/alpha11) f1; solution 2 swaps it to R1 = (1/beta22) f2.
BasisTransform rr_to_gamma7(double alpha11, double beta22, int which = 2);

/// Transition from a Gamma5 table (E1 unit, E2*E2 = a22*b22*E1 + b22*E2) to
/// R+R: rows are the idempotents R1, R2 in the (E1, E2) basis, built from
/// k = sqrt(a22*b22 + b22^2/4). Requires k^2 > 0 (the Double class); throws
/// NonPositiveDiscriminant otherwise. The negative root swaps R1 and R2.
BasisTransform gamma5_to_rr(double a22, double b22, bool negative_root = false);

/// Composite Gamma5 -> R+R -> Gamma7 transition, computed by composing
/// gamma5_to_rr with the inverted rr_to_gamma7 matrix.
BasisTransform gamma5_to_gamma7(double a22, double b22, double alpha11, double beta22);

/// Matrix product in application order: the result of applying `first` and
/// then `second`.
BasisTransform compose_transform(const BasisTransform& first, const BasisTransform& second);

/// Ordered sequence of transitions between named systems; adjacent links must
/// agree on the intermediate system name.
struct TransitionChain {
    struct Link {
        BasisTransform transform;
        std::string source;
        std::string target;
    };

    std::vector<Link> links;

    /// Appends a link; throws Error when the chain is broken.
    void push(BasisTransform t, std::string source, std::string target);

    /// Product of all links in application order (identity when empty).
    BasisTransform composite() const;
};

}  // namespace hns
