#include "isoprod/io.hpp"

#include <benchmark/benchmark.h>

using namespace isoprod;

namespace {

Element el(std::vector<int> r) { return Element{std::move(r)}; }

CoverDatum rational_cover() {
    AbelianGroup g({2, 2, 2});
    return CoverDatum(g, 0,
                      {el({0, 1, 0}), el({0, 1, 0}), el({0, 0, 1}), el({0, 0, 1}),
                       el({1, 1, 1}), el({1, 1, 1})});
}

ProductQuotient genus5_pair() {
    AbelianGroup g({2, 2, 2});
    CoverDatum c(g, 1, {el({1, 0, 0}), el({1, 0, 0})},
                 std::vector<Element>{el({0, 1, 0}), el({0, 0, 1})});
    return ProductQuotient(std::move(c), rational_cover());
}

void BM_CharDimTable(benchmark::State& state) {
    CoverDatum d = rational_cover();
    for (auto _ : state) {
        long long sum = 0;
        for (const Character& chi : d.group().characters())
            sum += char_dim(d, chi);
        benchmark::DoNotOptimize(sum);
    }
}
BENCHMARK(BM_CharDimTable);

void BM_TrivialKernel(benchmark::State& state) {
    ProductQuotient s = genus5_pair();
    for (auto _ : state)
        benchmark::DoNotOptimize(trivial_kernel(s));
}
BENCHMARK(BM_TrivialKernel);

void BM_EnumerateCovers(benchmark::State& state) {
    AbelianGroup g({2, 2, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_covers(g, 0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateCovers)->Arg(6)->Arg(8);

void BM_Canonicalize(benchmark::State& state) {
    ProductQuotient s = genus5_pair();
    for (auto _ : state)
        benchmark::DoNotOptimize(canonicalize(s.cover_c(), s.cover_d()));
}
BENCHMARK(BM_Canonicalize);

void BM_Automorphisms(benchmark::State& state) {
    AbelianGroup g({2, 2, 2});
    for (auto _ : state)
        benchmark::DoNotOptimize(automorphisms(g));
}
BENCHMARK(BM_Automorphisms);

void BM_CensusZ2cubed(benchmark::State& state) {
    SearchParams params;
    params.groups = {AbelianGroup({2, 2, 2})};
    params.max_chi = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(run_census(params));
}
BENCHMARK(BM_CensusZ2cubed)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_CensusDefaultParallel(benchmark::State& state) {
    SearchParams params;
    for (auto _ : state)
        benchmark::DoNotOptimize(run_census(params, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CensusDefaultParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
