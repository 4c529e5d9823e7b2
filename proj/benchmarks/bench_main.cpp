#include <benchmark/benchmark.h>

#include "tsperfect/classify.hpp"
#include "tsperfect/metrics.hpp"
#include "tsperfect/tilings.hpp"

using namespace tsperfect;

namespace {

VectorSet hamming_ball(int n) {
    std::vector<word_t> w{0};
    for (int i = 1; i <= n; ++i) w.push_back(unit(i));
    return {n, w};
}

void BM_CompleteTilingHamming(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const VectorSet d = hamming_ball(n);
    for (auto _ : state) benchmark::DoNotOptimize(complete_tiling(n, d));
}
BENCHMARK(BM_CompleteTilingHamming)->Arg(3)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_VerifyTilingConcat14(benchmark::State& state) {
    const VectorSet d = hamming_ball(7);
    const Tiling h{7, d, *complete_tiling(7, d).code};
    const Tiling hh = concat_tiling(h, h);
    for (auto _ : state) benchmark::DoNotOptimize(verify_tiling(hh));
}
BENCHMARK(BM_VerifyTilingConcat14)->Unit(benchmark::kMicrosecond);

void BM_CombinatorialTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<word_t> blocks;
    for (int i = 1; i < n; ++i) blocks.push_back(unit(i) | unit(i + 1));
    const Covering f(n, blocks);
    for (auto _ : state) benchmark::DoNotOptimize(table_from(f));
}
BENCHMARK(BM_CombinatorialTable)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_ValidateWeight(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const WeightTable w = table_from(Poset::chain(n));
    for (auto _ : state) benchmark::DoNotOptimize(validate_weight(w));
}
BENCHMARK(BM_ValidateWeight)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_CanonicalForm(benchmark::State& state) {
    const VectorSet d(7, {0, 1, 2, 3, 4, 8, 16, 64});
    for (auto _ : state) benchmark::DoNotOptimize(canonical_form(d));
}
BENCHMARK(BM_CanonicalForm)->Unit(benchmark::kMicrosecond);

void BM_ClassifySize8(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(classify_small_tiles(8));
}
BENCHMARK(BM_ClassifySize8)->Unit(benchmark::kMillisecond);

void BM_EnumeratePosets(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_posets(n));
}
BENCHMARK(BM_EnumeratePosets)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
