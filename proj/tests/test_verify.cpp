#include <doctest.h>

#include "helpers.hpp"
#include "hns/classify.hpp"
#include "hns/errors.hpp"
#include "hns/tables.hpp"
#include "hns/verify.hpp"

using namespace hns;

TEST_CASE("verify_isomorphism: change of basis is an isomorphism") {
    std::mt19937_64 rng(401);
    for (int n = 0; n < 200; ++n) {
        const StructuralConstants t = testing::random_table(rng);
        const BasisTransform tr = testing::random_transform(rng);
        const IsoReport r = verify_isomorphism(t, change_basis(t, tr), tr);
        CHECK(r.passed);
        CHECK(r.samples_checked == 64);
    }
}

TEST_CASE("verify_isomorphism: gamma5 to R+R transition passes") {
    const IsoReport r =
        verify_isomorphism(tables::unital_pq(4, 2), tables::rr(), gamma5_to_rr(2, 2));
    CHECK(r.passed);
    CHECK(r.max_residual <= kEps);
}

TEST_CASE("verify_isomorphism: complex vs double under identity fails with residual 2") {
    const IsoReport r = verify_isomorphism(tables::complex(), tables::double_numbers(),
                                           BasisTransform::identity(), 0);
    CHECK_FALSE(r.passed);
    CHECK(r.max_residual == doctest::Approx(2));
    CHECK(r.basis_residuals[2] == doctest::Approx(2));  // the E2*E2 pair
}

TEST_CASE("verify_isomorphism: distinct classes never verify") {
    std::mt19937_64 rng(402);
    const StructuralConstants cx = tables::complex();
    const StructuralConstants db = tables::double_numbers();
    for (int n = 0; n < 100; ++n) {
        const BasisTransform tr = testing::random_transform(rng);
        CHECK_FALSE(verify_isomorphism(cx, db, tr).passed);
    }
}

TEST_CASE("verify_isomorphism: singular transform throws") {
    CHECK_THROWS_AS(verify_isomorphism(tables::complex(), tables::complex(),
                                       BasisTransform{1, 1, 1, 1}),
                    SingularTransform);
}

TEST_CASE("verify_isomorphism: deterministic for a fixed seed") {
    std::mt19937_64 rng(403);
    const StructuralConstants t = testing::random_table(rng);
    const BasisTransform tr = testing::random_transform(rng);
    const IsoReport a = verify_isomorphism(t, change_basis(t, tr), tr, 64, 7);
    const IsoReport b = verify_isomorphism(t, change_basis(t, tr), tr, 64, 7);
    CHECK(a.max_residual == b.max_residual);
}

TEST_CASE("brute_force_units") {
    const auto cx = brute_force_units(tables::complex(), {});
    REQUIRE(cx.size() == 1);
    CHECK(cx[0] == Element{1, 0});

    const auto g6 = brute_force_units(family_5(2, 3, 1), {});
    REQUIRE(g6.size() == 1);
    CHECK(g6[0] == Element{0.5, 0});

    CHECK(brute_force_units(tables::diagonal(1, 1, 0, 1), {}).empty());
}

TEST_CASE("brute_force_units agrees with unit_element on grid-aligned units") {
    // Units at 1/a11 for a11 in {±1, ±2, ±4}: all on the quarter grid.
    for (double a11 : {1.0, -1.0, 2.0, -2.0, 4.0, -4.0}) {
        const StructuralConstants t = family_5(a11, 1.5, -0.5);
        const UnitSolution u = unit_element(t);
        REQUIRE(u.is_constant());
        const auto found = brute_force_units(t, {-2, 2, 0.25});
        REQUIRE(found.size() == 1);
        CHECK(near(found[0].m1, u.value.m1));
        CHECK(near(found[0].m2, u.value.m2));
    }
}
