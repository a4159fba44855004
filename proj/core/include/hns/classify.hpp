#pragma once

#include <string_view>
#include <vector>

#include "hns/core.hpp"

namespace hns {

/// Isomorphism class of a 2-dimensional commutative system.
enum class IsoClass {
    Complex,    ///< discriminant < 0
    Dual,       ///< discriminant = 0
    Double,     ///< discriminant > 0
    NonUnital,  ///< no constant unit element
};

std::string_view to_string(IsoClass c);

/// Normal form of a unital table: a basis (e, j) with e the unit and
/// j*j = p*e + q*j.
struct NormalForm {
    double p = 0, q = 0;
};

/// Completes the unit to a basis {X, j} and reads off j*j. The complement j
/// starts from whichever of E1, E2 is less parallel to X (ties prefer E2) and
/// has its X-parallel component removed. Throws NonUnitalSystem.
NormalForm normal_form(const StructuralConstants& t);

/// p + q^2/4; its sign decides the class.
double discriminant(NormalForm nf);

IsoClass classify(const StructuralConstants& t);

/// All nontrivial solutions of M*M = M (excluding 0 and the unit), found by
/// intersecting the two coordinate conics via their resultant. Independent of
/// the classifier; used as the oracle for the Double class.
std::vector<Element> find_idempotents(const StructuralConstants& t);

/// Unit-norm directions M with M*M = 0, from the common roots of the two
/// homogeneous quadratic forms. Oracle for the Dual class.
std::vector<Element> find_nilpotents(const StructuralConstants& t);

}  // namespace hns
