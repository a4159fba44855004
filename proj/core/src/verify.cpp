#include "hns/verify.hpp"

#include <cmath>
#include <random>

#include "hns/errors.hpp"

namespace hns {

namespace {

double norm_inf(Element e) { return std::max(std::abs(e.m1), std::abs(e.m2)); }

// Scaled homomorphism residual for one pair of elements.
double pair_residual(const StructuralConstants& source, const StructuralConstants& target,
                     const BasisTransform& tr, Element u, Element v) {
    const Element lhs = to_new_basis(tr, multiply(source, u, v));
    const Element rhs = multiply(target, to_new_basis(tr, u), to_new_basis(tr, v));
    const double mag = std::max({1.0, norm_inf(lhs), norm_inf(rhs)});
    return norm_inf(lhs - rhs) / mag;
}

}  // namespace

IsoReport verify_isomorphism(const StructuralConstants& source,
                             const StructuralConstants& target,
                             const BasisTransform& tr, int samples,
                             std::uint64_t seed, double tol) {
    const double mag = std::max({std::abs(tr.t11), std::abs(tr.t12),
                                 std::abs(tr.t21), std::abs(tr.t22)});
    if (std::abs(tr.det()) <= kEps * std::max(1.0, mag * mag))
        throw SingularTransform("verify_isomorphism requires a nonsingular transform");

    IsoReport report;
    const Element e1{1, 0}, e2{0, 1};
    report.basis_residuals[0] = pair_residual(source, target, tr, e1, e1);
    report.basis_residuals[1] = pair_residual(source, target, tr, e1, e2);
    report.basis_residuals[2] = pair_residual(source, target, tr, e2, e2);

    const UnitSolution us = unit_element(source);
    const UnitSolution ut = unit_element(target);
    if (us.is_constant() && ut.is_constant()) {
        const Element mapped = to_new_basis(tr, us.value);
        report.basis_residuals[3] =
            norm_inf(mapped - ut.value) /
            std::max({1.0, norm_inf(mapped), norm_inf(ut.value)});
    }

    double worst = 0;
    for (double r : report.basis_residuals) worst = std::max(worst, r);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coord(-10.0, 10.0);
    for (int i = 0; i < samples; ++i) {
        const Element u{coord(rng), coord(rng)};
        const Element v{coord(rng), coord(rng)};
        worst = std::max(worst, pair_residual(source, target, tr, u, v));
        ++report.samples_checked;
    }

    report.max_residual = worst;
    report.passed = worst <= tol;
    return report;
}

std::vector<Element> brute_force_units(const StructuralConstants& t, GridSpec grid) {
    std::vector<Element> out;
    const int n = static_cast<int>(std::floor((grid.hi - grid.lo) / grid.step + 0.5));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const Element x{grid.lo + i * grid.step, grid.lo + j * grid.step};
            const Element xe1 = multiply(t, x, {1, 0});
            const Element xe2 = multiply(t, x, {0, 1});
            if (near(xe1.m1, 1) && near(xe1.m2, 0) && near(xe2.m1, 0) && near(xe2.m2, 1))
                out.push_back(x);
        }
    }
    return out;
}

}  // namespace hns
