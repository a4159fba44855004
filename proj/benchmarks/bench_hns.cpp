#include <benchmark/benchmark.h>

#include <random>

#include "hns/classify.hpp"
#include "hns/core.hpp"
#include "hns/tables.hpp"
#include "hns/transforms.hpp"
#include "hns/verify.hpp"

using namespace hns;

static void bm_multiply(benchmark::State& state) {
    const StructuralConstants t = family_5(2, 3, 1);
    Element u{0.3, -1.2}, v{2.5, 0.7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(multiply(t, u, v));
    }
}
BENCHMARK(bm_multiply);

static void bm_unit_element(benchmark::State& state) {
    const StructuralConstants t = family_sol2(2, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unit_element(t));
    }
}
BENCHMARK(bm_unit_element);

static void bm_classify(benchmark::State& state) {
    const StructuralConstants t = change_basis(family_5(2, 3, 1), {1.5, 0.5, -1, 2});
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(t));
    }
}
BENCHMARK(bm_classify);

static void bm_find_idempotents(benchmark::State& state) {
    const StructuralConstants t = tables::unital_pq(6, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_idempotents(t));
    }
}
BENCHMARK(bm_find_idempotents);

static void bm_change_basis(benchmark::State& state) {
    const StructuralConstants t = family_5(2, 3, 1);
    const BasisTransform tr{1.5, 0.5, -1, 2};
    for (auto _ : state) {
        benchmark::DoNotOptimize(change_basis(t, tr));
    }
}
BENCHMARK(bm_change_basis);

static void bm_verify_isomorphism(benchmark::State& state) {
    const StructuralConstants g5 = tables::unital_pq(4, 2);
    const BasisTransform tr = gamma5_to_rr(2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_isomorphism(g5, tables::rr(), tr,
                                                    static_cast<int>(state.range(0))));
    }
}
BENCHMARK(bm_verify_isomorphism)->Arg(0)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
