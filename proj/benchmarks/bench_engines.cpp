#include <benchmark/benchmark.h>

#include <charmoments/analysis.hpp>
#include <charmoments/groups.hpp>
#include <charmoments/qmoments.hpp>

using namespace charmoments;

namespace {

void BM_QuantumSequence(benchmark::State& state, Family family, unsigned n) {
    const int max_k = int(state.range(0));
    for (auto _ : state) {
        QuantumEngine engine;
        benchmark::DoNotOptimize(
            engine.sequence({family, n}, max_k, MomentMethod::partition_count));
    }
}
BENCHMARK_CAPTURE(BM_QuantumSequence, fu2, Family::FU, 2)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(BM_QuantumSequence, fo2, Family::FO, 2)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK_CAPTURE(BM_QuantumSequence, fs4, Family::FS, 4)->Arg(16)->Arg(32)->Arg(64);

void BM_QuantumGramRank(benchmark::State& state) {
    const int max_k = int(state.range(0));
    for (auto _ : state) {
        QuantumEngine engine;
        benchmark::DoNotOptimize(
            engine.sequence({Family::FU, 2}, max_k, MomentMethod::gram_rank));
    }
}
BENCHMARK(BM_QuantumGramRank)->DenseRange(4, 8, 2);

void BM_TreeWalk(benchmark::State& state) {
    const auto g = make_free_group(2);
    const int max_k = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(group_moment_sequence(*g, max_k));
}
BENCHMARK(BM_TreeWalk)->Arg(16)->Arg(32)->Arg(64);

void BM_LatticeWalk(benchmark::State& state) {
    const auto g = make_free_abelian(2);
    const int max_k = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(group_moment_sequence(*g, max_k));
}
BENCHMARK(BM_LatticeWalk)->Arg(16)->Arg(24)->Arg(32);

void BM_FreeProductWalk(benchmark::State& state) {
    const auto g = parse_group_preset("freeprod:2,3");
    const int max_k = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(group_moment_sequence(*g, max_k));
}
BENCHMARK(BM_FreeProductWalk)->Arg(12)->Arg(16)->Arg(20);

void BM_MinorantCertificate(benchmark::State& state) {
    QuantumEngine engine;
    const auto a = to_A_sequence(
        engine.sequence({Family::FO, 2}, 8, MomentMethod::partition_count));
    const int horizon = int(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(minorant_certificate(a, horizon));
}
BENCHMARK(BM_MinorantCertificate)->Arg(128)->Arg(256)->Arg(512);

void BM_NormEstimate(benchmark::State& state) {
    QuantumEngine engine;
    const auto seq =
        engine.sequence({Family::FU, 2}, int(state.range(0)), MomentMethod::partition_count);
    for (auto _ : state) benchmark::DoNotOptimize(estimate_norm(seq));
}
BENCHMARK(BM_NormEstimate)->Arg(32)->Arg(64);

void BM_HankelCheck(benchmark::State& state) {
    QuantumEngine engine;
    const auto seq =
        engine.sequence({Family::FS, 4}, int(state.range(0)), MomentMethod::partition_count);
    for (auto _ : state) benchmark::DoNotOptimize(check_hankel(seq));
}
BENCHMARK(BM_HankelCheck)->Arg(16)->Arg(24)->Arg(32);

} // namespace
