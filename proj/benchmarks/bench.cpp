#include <benchmark/benchmark.h>

#include <random>

#include "sacs/catalog.hpp"
#include "sacs/decide.hpp"
#include "sacs/intmat.hpp"
#include "sacs/snf.hpp"
#include "sacs/validate.hpp"

namespace {

sacs::IntMat random_matrix(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    sacs::IntMat a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = dist(rng);
    return a;
}

void BM_snf_8x8(benchmark::State& state) {
    auto a = random_matrix(8, 42);
    for (auto _ : state) benchmark::DoNotOptimize(sacs::snf(a));
}
BENCHMARK(BM_snf_8x8);

void BM_decide_tangent(benchmark::State& state) {
    const auto& m = sacs::catalog_entry("gadget_t");
    for (auto _ : state) benchmark::DoNotOptimize(sacs::decide_tangent(m));
}
BENCHMARK(BM_decide_tangent);

void BM_decide_bundle(benchmark::State& state) {
    const auto& m = sacs::catalog_entry("gadget_a");
    const auto& xi = m.bundle("flat-ish");
    for (auto _ : state) benchmark::DoNotOptimize(sacs::decide_bundle(m, xi));
}
BENCHMARK(BM_decide_bundle);

void BM_validate_ring(benchmark::State& state) {
    const auto& m = sacs::catalog_entry("cp5");
    for (auto _ : state) benchmark::DoNotOptimize(sacs::validate_ring(m));
}
BENCHMARK(BM_validate_ring);

}  // namespace

BENCHMARK_MAIN();
