#include <benchmark/benchmark.h>

#include <charmoments/gram.hpp>
#include <charmoments/partition_count.hpp>

using namespace charmoments;

namespace {

ColorWord alternating(int length) {
    std::string text;
    for (int i = 0; i < length; ++i) text += (i % 2 == 0) ? '1' : 'c';
    return ColorWord::parse(text);
}

void BM_CountNc(benchmark::State& state) {
    const auto w = ColorWord::uniform(state.range(0));
    for (auto _ : state) {
        PartitionCounter counter;  // fresh memo, no carry-over between runs
        benchmark::DoNotOptimize(counter.count(w, PartitionClass::NC));
    }
}
BENCHMARK(BM_CountNc)->Arg(16)->Arg(32)->Arg(64);

void BM_CountAlternatingPairings(benchmark::State& state) {
    const auto w = alternating(state.range(0));
    for (auto _ : state) {
        PartitionCounter counter;
        benchmark::DoNotOptimize(counter.count(w, PartitionClass::NC2C));
    }
}
BENCHMARK(BM_CountAlternatingPairings)->Arg(16)->Arg(32)->Arg(64);

void BM_EnumerateNc(benchmark::State& state) {
    const auto w = ColorWord::uniform(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_class(w, PartitionClass::NC));
}
BENCHMARK(BM_EnumerateNc)->DenseRange(6, 12, 2);

void BM_BlockInequality(benchmark::State& state) {
    const auto w = alternating(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_block_inequality(w, PartitionClass::NC));
}
BENCHMARK(BM_BlockInequality)->DenseRange(4, 10, 2);

void BM_GramBuild(benchmark::State& state) {
    const auto w = ColorWord::uniform(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(gram_matrix(w, PartitionClass::NC, 3));
}
BENCHMARK(BM_GramBuild)->DenseRange(6, 10, 2);

void BM_GramRank(benchmark::State& state) {
    const auto g = gram_matrix(ColorWord::uniform(state.range(0)), PartitionClass::NC, 2);
    for (auto _ : state) benchmark::DoNotOptimize(rank_exact(g));
}
BENCHMARK(BM_GramRank)->DenseRange(6, 10, 2);

} // namespace

BENCHMARK_MAIN();
