#include <benchmark/benchmark.h>

#include <random>

#include "codebetti/code.hpp"
#include "codebetti/matroid.hpp"
#include "codebetti/resolution.hpp"

using namespace codebetti;

namespace {

Mat random_mat(unsigned q, std::size_t r, std::size_t c, std::uint64_t seed) {
    FieldPtr f = Field::of_order(q);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<unsigned> pick(0, q - 1);
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, pick(rng));
    return m;
}

void bm_rref(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    Mat m = random_mat(3, size, 2 * size, 0xbe7c4);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}

void bm_weight_hierarchy_simplex(benchmark::State& state) {
    LinearCode c = simplex_code(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(weight_hierarchy(c));
}

void bm_betti_table_13(benchmark::State& state) {
    LinearCode c = simplex_code(3, 3);
    FieldPtr f2 = Field::of_order(2);
    for (auto _ : state) {
        Matroid m = Matroid::of_code(c); // rebuild: circuits are cached per matroid
        benchmark::DoNotOptimize(betti_table(m, f2));
    }
}

void bm_circuits(benchmark::State& state) {
    LinearCode c = simplex_code(2, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        Matroid m = Matroid::of_code(c);
        benchmark::DoNotOptimize(m.circuits());
    }
}

} // namespace

BENCHMARK(bm_rref)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_weight_hierarchy_simplex)->Arg(3)->Arg(4);
BENCHMARK(bm_betti_table_13);
BENCHMARK(bm_circuits)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
