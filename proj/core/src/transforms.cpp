#include "hns/transforms.hpp"

#include <cmath>

#include "hns/errors.hpp"

namespace hns {

BasisTransform invert(const BasisTransform& t) {
    const double d = t.det();
    const double mag = std::max({std::abs(t.t11), std::abs(t.t12),
                                 std::abs(t.t21), std::abs(t.t22)});
    if (std::abs(d) <= kEps * std::max(1.0, mag * mag))
        throw SingularTransform("basis transform is singular");
    return {t.t22 / d, -t.t12 / d, -t.t21 / d, t.t11 / d};
}

Element to_new_basis(const BasisTransform& t, Element v) {
    // v = w1*f1 + w2*f2 with rows f_i: solve the transposed system.
    const double d = t.det();
    return {(v.m1 * t.t22 - v.m2 * t.t21) / d,
            (v.m2 * t.t11 - v.m1 * t.t12) / d};
}

StructuralConstants change_basis(const StructuralConstants& t, const BasisTransform& tr) {
    const double d = tr.det();
    const double mag = std::max({std::abs(tr.t11), std::abs(tr.t12),
                                 std::abs(tr.t21), std::abs(tr.t22)});
    if (std::abs(d) <= kEps * std::max(1.0, mag * mag))
        throw SingularTransform("change_basis requires a nonsingular transform");

    const Element f1{tr.t11, tr.t12};
    const Element f2{tr.t21, tr.t22};
    const Element p11 = to_new_basis(tr, multiply(t, f1, f1));
    const Element p12 = to_new_basis(tr, multiply(t, f1, f2));
    const Element p22 = to_new_basis(tr, multiply(t, f2, f2));
    return {p11.m1, p12.m1, p22.m1, p11.m2, p12.m2, p22.m2};
}

StructuralConstants family_5(double a11, double a22, double b22) {
    if (near_zero(a11))
        throw ZeroParameter("family_5 requires a11 != 0");
    return {a11, 0, a22, 0, a11, b22};
}

StructuralConstants family_sol2(double a22, double b22) {
    if (near_zero(b22))
        throw ZeroParameter("family_sol2 requires b22 != 0");
    if (near_zero(a22))
        throw ZeroParameter("family_sol2 requires a22 != 0");
    return {b22, 0, a22, 0, b22, b22};
}

BasisTransform gamma2_to_gamma3(double a11) {
    if (near_zero(a11))
        throw ZeroParameter("gamma2_to_gamma3 requires a11 != 0");
    return {1 / a11, 0, 0, 1};
}

BasisTransform gamma4_to_gamma5(double b22) {
    if (near_zero(b22))
        throw ZeroParameter("gamma4_to_gamma5 requires b22 != 0");
    return {1 / b22, 0, 0, 1};
}

StructuralConstants diagonal_reduce(const StructuralConstants& t) {
    const double s = t.scale();
    if (!near_zero(t.a12, s) || !near_zero(t.b12, s))
        throw NotDiagonal("diagonal_reduce requires a12 = b12 = 0");
    if (!near_zero(t.b11, s) || !near_zero(t.a22, s))
        throw NoConstantUnit("diagonal table has beta11 or alpha22 nonzero");
    return {t.a11, 0, 0, 0, 0, t.b22};
}

BasisTransform rr_to_gamma7(double alpha11, double beta22, int which) {
    if (near_zero(alpha11) || near_zero(beta22))
        throw ZeroParameter("rr_to_gamma7 requires alpha11, beta22 != 0");
    if (which == 1)
        return {1 / alpha11, 0, 0, 1 / beta22};
    return {0, 1 / beta22, 1 / alpha11, 0};
}

BasisTransform gamma5_to_rr(double a22, double b22, bool negative_root) {
    const double k2 = a22 * b22 + b22 * b22 / 4;
    if (k2 <= kEps)
        throw NonPositiveDiscriminant("a22*b22 + b22^2/4 must be positive");
    const double k = negative_root ? -std::sqrt(k2) : std::sqrt(k2);

    // Eigendirections of multiplication by E2: E2 acts on the span of the
    // idempotents with eigenvalues b22/2 +- k, so
    //   R1 = (t_plus * E1 - E2) / 2k,  R2 = (-t_minus * E1 + E2) / 2k,
    // giving R1 + R2 = E1 (the unit) and R1*R2 = 0.
    const double tp = b22 / 2 + k;
    const double tm = b22 / 2 - k;
    return {tp / (2 * k), -1 / (2 * k), -tm / (2 * k), 1 / (2 * k)};
}

BasisTransform gamma5_to_gamma7(double a22, double b22, double alpha11, double beta22) {
    return compose_transform(gamma5_to_rr(a22, b22),
                             invert(rr_to_gamma7(alpha11, beta22, 2)));
}

BasisTransform compose_transform(const BasisTransform& a, const BasisTransform& b) {
    // Rows of the result express the final basis in the original one: b * a.
    return {b.t11 * a.t11 + b.t12 * a.t21, b.t11 * a.t12 + b.t12 * a.t22,
            b.t21 * a.t11 + b.t22 * a.t21, b.t21 * a.t12 + b.t22 * a.t22};
}

void TransitionChain::push(BasisTransform t, std::string source, std::string target) {
    if (!links.empty() && links.back().target != source)
        throw Error("transition chain broken: " + links.back().target +
                    " does not match " + source);
    links.push_back({t, std::move(source), std::move(target)});
}

BasisTransform TransitionChain::composite() const {
    BasisTransform acc = BasisTransform::identity();
    for (const Link& l : links) acc = compose_transform(acc, l.transform);
    return acc;
}

}  // namespace hns
