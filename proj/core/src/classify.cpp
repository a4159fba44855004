#include "hns/classify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>

#include "hns/errors.hpp"

namespace hns {

std::string_view to_string(IsoClass c) {
    switch (c) {
        case IsoClass::Complex: return "Complex";
        case IsoClass::Dual: return "Dual";
        case IsoClass::Double: return "Double";
        case IsoClass::NonUnital: return "NonUnital";
    }
    return "?";
}

NormalForm normal_form(const StructuralConstants& t) {
    const UnitSolution u = unit_element(t);
    if (!u.is_constant())
        throw NonUnitalSystem("normal_form requires a constant unit");
    const Element x = u.value;

    // Complement: the basis vector less parallel to X, then remove its
    // X-component so {X, j} is a basis. Tie-break prefers E2 to match the
    // usual unit-along-E1 layout.
    const double nx2 = x.m1 * x.m1 + x.m2 * x.m2;
    Element j;
    if (std::abs(x.m2) <= std::abs(x.m1))
        j = Element{0, 1} - (x.m2 / nx2) * x;
    else
        j = Element{1, 0} - (x.m1 / nx2) * x;

    const Element jj = multiply(t, j, j);

    // Solve [x j] * (p, q)^T = jj.
    const double det = x.m1 * j.m2 - x.m2 * j.m1;
    return {(jj.m1 * j.m2 - jj.m2 * j.m1) / det,
            (x.m1 * jj.m2 - x.m2 * jj.m1) / det};
}

double discriminant(NormalForm nf) { return nf.p + nf.q * nf.q / 4.0; }

IsoClass classify(const StructuralConstants& t) {
    NormalForm nf;
    try {
        nf = normal_form(t);
    } catch (const NonUnitalSystem&) {
        return IsoClass::NonUnital;
    }
    const double d = discriminant(nf);
    // The Dual boundary has measure zero; judge |d| against the magnitude of
    // the terms it came from so inexact input can still land on it.
    const double tol = kEps * std::max({1.0, std::abs(nf.p), nf.q * nf.q / 4.0});
    if (std::abs(d) <= tol) return IsoClass::Dual;
    return d < 0 ? IsoClass::Complex : IsoClass::Double;
}

namespace {

using Poly = std::vector<double>;  // coefficients, lowest degree first

Poly pmul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly psub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0.0);
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

std::vector<double> real_roots(Poly p) {
    double maxc = 0;
    for (double c : p) maxc = std::max(maxc, std::abs(c));
    if (maxc == 0) return {};
    while (p.size() > 1 && std::abs(p.back()) <= 1e-12 * maxc) p.pop_back();
    const int n = static_cast<int>(p.size()) - 1;
    if (n < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p[i] / p[n];
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
    std::vector<double> roots;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> z = es.eigenvalues()(i);
        if (std::abs(z.imag()) <= 1e-7 * std::max(1.0, std::abs(z.real())))
            roots.push_back(z.real());
    }
    return roots;
}

// The two idempotent conics, C1 on the E1 coordinate and C2 on E2:
//   C1(x, y) = a11 x^2 + 2 a12 x y + a22 y^2 - x
//   C2(x, y) = b11 x^2 + 2 b12 x y + b22 y^2 - y
struct Conics {
    const StructuralConstants& t;

    double c1(double x, double y) const {
        return t.a11 * x * x + 2 * t.a12 * x * y + t.a22 * y * y - x;
    }
    double c2(double x, double y) const {
        return t.b11 * x * x + 2 * t.b12 * x * y + t.b22 * y * y - y;
    }

    // One Newton step on (c1, c2); returns false near a singular Jacobian.
    bool newton_step(double& x, double& y) const {
        const double j11 = 2 * t.a11 * x + 2 * t.a12 * y - 1;
        const double j12 = 2 * t.a12 * x + 2 * t.a22 * y;
        const double j21 = 2 * t.b11 * x + 2 * t.b12 * y;
        const double j22 = 2 * t.b12 * x + 2 * t.b22 * y - 1;
        const double det = j11 * j22 - j12 * j21;
        const double mag = std::max({std::abs(j11), std::abs(j12), std::abs(j21), std::abs(j22)});
        if (std::abs(det) <= 1e-12 * std::max(1.0, mag * mag)) return false;
        const double f1 = c1(x, y);
        const double f2 = c2(x, y);
        x -= (f1 * j22 - f2 * j12) / det;
        y -= (f2 * j11 - f1 * j21) / det;
        return true;
    }
};

void push_unique(std::vector<Element>& out, Element m) {
    for (const Element& e : out)
        if (std::abs(e.m1 - m.m1) < 1e-6 && std::abs(e.m2 - m.m2) < 1e-6) return;
    out.push_back(m);
}

// Candidate y values at a fixed x, from one conic viewed as a quadratic in y.
void y_candidates(double qa, double qb, double qc, std::vector<double>& ys) {
    const double mag = std::max({std::abs(qa), std::abs(qb), std::abs(qc)});
    if (std::abs(qa) > 1e-10 * std::max(1.0, mag)) {
        const double disc = qb * qb - 4 * qa * qc;
        if (disc >= -1e-12 * std::max(1.0, qb * qb)) {
            const double s = std::sqrt(std::max(0.0, disc));
            ys.push_back((-qb + s) / (2 * qa));
            ys.push_back((-qb - s) / (2 * qa));
        }
    } else if (std::abs(qb) > 1e-10 * std::max(1.0, mag)) {
        ys.push_back(-qc / qb);
    }
}

std::vector<Element> idempotents_resultant(const StructuralConstants& t) {
    // Eliminate y. In y, C1 has coefficients (a22, 2 a12 x, a11 x^2 - x) and
    // C2 has (b22, 2 b12 x - 1, b11 x^2); the resultant of two quadratics
    //   Res = (a f - c d)^2 - (a e - b d)(b f - c e)
    // is a polynomial of degree <= 4 in x.
    const Poly qa = {t.a22};
    const Poly qb = {0, 2 * t.a12};
    const Poly qc = {0, -1, t.a11};
    const Poly ra = {t.b22};
    const Poly rb = {-1, 2 * t.b12};
    const Poly rc = {0, 0, t.b11};

    const Poly af_cd = psub(pmul(qa, rc), pmul(qc, ra));
    const Poly ae_bd = psub(pmul(qa, rb), pmul(qb, ra));
    const Poly bf_ce = psub(pmul(qb, rc), pmul(qc, rb));
    const Poly res = psub(pmul(af_cd, af_cd), pmul(ae_bd, bf_ce));

    const Conics c{t};
    const double s = std::max(1.0, t.scale());
    std::vector<Element> out;
    for (double x : real_roots(res)) {
        std::vector<double> ys;
        y_candidates(t.a22, 2 * t.a12 * x, t.a11 * x * x - x, ys);
        y_candidates(t.b22, 2 * t.b12 * x - 1, t.b11 * x * x, ys);
        for (double y : ys) {
            // Polish, then accept only true intersections: a real starting
            // point born from a complex-conjugate root pair stalls at a
            // residual proportional to the squared imaginary part.
            double px = x, py = y;
            for (int it = 0; it < 30; ++it)
                if (!c.newton_step(px, py)) break;
            const double m = std::max({1.0, std::abs(px), std::abs(py)});
            const double tol = 1e-9 * std::max(1.0, s) * m * m;
            if (std::abs(c.c1(px, py)) <= tol && std::abs(c.c2(px, py)) <= tol)
                push_unique(out, {px, py});
        }
    }
    return out;
}

StructuralConstants swap_basis(const StructuralConstants& t) {
    // Relabel E1 <-> E2; idempotents swap coordinates accordingly.
    return {t.b22, t.b12, t.b11, t.a22, t.a12, t.a11};
}

}  // namespace

std::vector<Element> find_idempotents(const StructuralConstants& t) {
    const double s = std::max(1.0, t.scale());
    std::vector<Element> raw;
    if (std::abs(t.a22) > 1e-12 * s || std::abs(t.b22) > 1e-12 * s) {
        raw = idempotents_resultant(t);
    } else if (std::abs(t.a11) > 1e-12 * s || std::abs(t.b11) > 1e-12 * s) {
        for (Element m : idempotents_resultant(swap_basis(t)))
            push_unique(raw, {m.m2, m.m1});
    } else {
        // Pure cross table: M*M = 2 m1 m2 (a12, b12). Besides the origin the
        // only solution has 2 a12 m2 = 1 and 2 b12 m1 = 1.
        if (std::abs(t.a12) > 1e-12 && std::abs(t.b12) > 1e-12)
            raw.push_back({1 / (2 * t.b12), 1 / (2 * t.a12)});
    }

    const UnitSolution u = unit_element(t);
    std::vector<Element> out;
    for (const Element& m : raw) {
        if (std::abs(m.m1) < 1e-6 && std::abs(m.m2) < 1e-6) continue;
        if (u.is_constant() && std::abs(m.m1 - u.value.m1) < 1e-6 &&
            std::abs(m.m2 - u.value.m2) < 1e-6)
            continue;
        out.push_back(m);
    }
    return out;
}

std::vector<Element> find_nilpotents(const StructuralConstants& t) {
    // M*M = 0 means both homogeneous forms vanish on the direction of M:
    //   Q1 = a11 x^2 + 2 a12 x y + a22 y^2,  Q2 = likewise with b's.
    const double s = std::max(1.0, t.scale());
    const auto q1 = std::array{t.a11, 2 * t.a12, t.a22};
    const auto q2 = std::array{t.b11, 2 * t.b12, t.b22};
    const auto zero1 = std::abs(q1[0]) <= kEps * s && std::abs(q1[1]) <= kEps * s &&
                       std::abs(q1[2]) <= kEps * s;
    const auto zero2 = std::abs(q2[0]) <= kEps * s && std::abs(q2[1]) <= kEps * s &&
                       std::abs(q2[2]) <= kEps * s;
    if (zero1 && zero2) return {{1, 0}, {0, 1}};  // zero algebra

    // Root directions of the first nonzero form, as (t, 1) plus possibly (1, 0).
    const auto& q = zero1 ? q2 : q1;
    std::vector<Element> dirs;
    if (std::abs(q[0]) > kEps * s) {
        const double disc = q[1] * q[1] - 4 * q[0] * q[2];
        if (disc >= -kEps * s * s) {
            const double r = std::sqrt(std::max(0.0, disc));
            dirs.push_back({(-q[1] + r) / (2 * q[0]), 1});
            dirs.push_back({(-q[1] - r) / (2 * q[0]), 1});
        }
    } else {
        dirs.push_back({1, 0});
        if (std::abs(q[1]) > kEps * s) dirs.push_back({-q[2] / q[1], 1});
        // q[0] = q[1] = 0: the form is a22 y^2, root direction (1, 0) only.
    }

    std::vector<Element> out;
    for (Element d : dirs) {
        const double n = std::hypot(d.m1, d.m2);
        d = (1 / n) * d;
        const Element sq = multiply(t, d, d);
        if (std::abs(sq.m1) > kEps * s || std::abs(sq.m2) > kEps * s) continue;
        if (d.m1 < -1e-12 || (std::abs(d.m1) <= 1e-12 && d.m2 < 0)) d = -1.0 * d;
        push_unique(out, d);
    }
    return out;
}

}  // namespace hns
