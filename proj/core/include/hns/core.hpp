#pragma once

#include <array>
#include <utility>

#include "hns/tolerance.hpp"

namespace hns {

/// Structural constants of a commutative 2-dimensional multiplication table:
///
///   E1*E1 = a11*E1 + b11*E2
///   E1*E2 = E2*E1 = a12*E1 + b12*E2
///   E2*E2 = a22*E1 + b22*E2
///
/// Commutativity is built in: both cross products share the (a12, b12) pair.
struct StructuralConstants {
    double a11 = 0, a12 = 0, a22 = 0;
    double b11 = 0, b12 = 0, b22 = 0;

    bool operator==(const StructuralConstants&) const = default;

    /// Largest constant magnitude; used to scale tolerance tests.
    double scale() const;
};

/// An element m1*E1 + m2*E2 in a system's basis.
struct Element {
    double m1 = 0, m2 = 0;

    bool operator==(const Element&) const = default;
};

inline Element operator+(Element u, Element v) { return {u.m1 + v.m1, u.m2 + v.m2}; }
inline Element operator-(Element u, Element v) { return {u.m1 - v.m1, u.m2 - v.m2}; }
inline Element operator*(double s, Element u) { return {s * u.m1, s * u.m2}; }

/// Outcome of the unit-element solver.
struct UnitSolution {
    enum class Kind {
        Constant,        ///< one unit X, independent of the probe
        ProbeDependent,  ///< the candidate varies with the probe; no unit
        Degenerate,      ///< the denominator quadratic form is identically zero
    };

    Kind kind = Kind::Degenerate;
    Element value{};  ///< meaningful only when kind == Constant

    static UnitSolution constant(Element x) { return {Kind::Constant, x}; }
    static UnitSolution probe_dependent() { return {Kind::ProbeDependent, {}}; }
    static UnitSolution degenerate() { return {Kind::Degenerate, {}}; }

    bool is_constant() const { return kind == Kind::Constant; }
};

/// Bilinear product of two elements under a table. Total on finite inputs,
/// commutative by construction.
Element multiply(const StructuralConstants& t, Element u, Element v);

/// Solves the 2x2 linear system X * probe = probe for X at one probe.
/// Throws SingularProbe when the system determinant (the denominator
/// quadratic form evaluated at the probe) vanishes.
Element unit_candidate(const StructuralConstants& t, Element probe);

/// True iff the unit candidate is the same for every nonsingular probe,
/// tested through the cross-multiplied proportionality of the numerator and
/// denominator quadratic forms (no divisions, so vanishing denominators are
/// handled uniformly). An identically zero denominator form counts as false.
bool has_constant_unit(const StructuralConstants& t);

/// Full unit-element analysis. A Constant verdict is verified against
/// X*E1 = E1 and X*E2 = E2 before being returned.
UnitSolution unit_element(const StructuralConstants& t);

/// True iff every basis product has at most one nonzero coefficient and that
/// coefficient lies in {-1, 0, +1}.
bool is_canonical(const StructuralConstants& t);

/// Deterministic probe set used by unit_element; probes whose denominator
/// vanishes are skipped (a nonzero quadratic form vanishes on at most two
/// directions, so at least three of these always survive).
inline constexpr std::array<Element, 5> kDefaultProbes = {
    Element{1, 0}, Element{0, 1}, Element{1, 1}, Element{1, -1}, Element{2, 3}};

namespace detail {
/// Coefficients (on m1^2, m1*m2, m2^2) of the denominator quadratic form of
/// the probe linear system's determinant.
std::array<double, 3> denominator_form(const StructuralConstants& t);
}  // namespace detail

}  // namespace hns
