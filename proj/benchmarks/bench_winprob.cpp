#include <benchmark/benchmark.h>

#include "winprob/winprob.hpp"

using namespace winprob;

namespace {

ProbabilisticProfile instance(int m, int n, std::uint64_t seed) {
    return random_instance(m, n, ProbMode::uniform(), seed);
}

void BM_WinProbPlurality(benchmark::State& state) {
    auto pp = instance(5, static_cast<int>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(win_prob_plurality(pp, 0, WinnerSemantics::CoWinner));
}
BENCHMARK(BM_WinProbPlurality)->Arg(16)->Arg(64)->Arg(256);

void BM_BruteForceWinProb(benchmark::State& state) {
    auto pp = instance(4, static_cast<int>(state.range(0)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            brute_force_win_prob(pp, Rule::borda(), 0, WinnerSemantics::CoWinner));
}
BENCHMARK(BM_BruteForceWinProb)->Arg(8)->Arg(12)->Arg(16);

void BM_ConditionalExceedProb(benchmark::State& state) {
    auto pp = instance(5, static_cast<int>(state.range(0)), 3);
    LoseEvent event{0, 1, LoseEventKind::PositionalStrict};
    for (auto _ : state)
        benchmark::DoNotOptimize(
            exceed_prob_positional(pp, Rule::borda(), event, PartialAssignment::none()));
}
BENCHMARK(BM_ConditionalExceedProb)->Arg(16)->Arg(64)->Arg(128);

void BM_PosteriorSample(benchmark::State& state) {
    auto pp = instance(4, static_cast<int>(state.range(0)), 4);
    LoseEvent event{0, 1, LoseEventKind::PositionalStrict};
    RngStream rng(5);
    for (auto _ : state)
        benchmark::DoNotOptimize(sample_posterior(pp, Rule::borda(), event, rng));
}
BENCHMARK(BM_PosteriorSample)->Arg(8)->Arg(16)->Arg(32);

void BM_KlmLoseProb(benchmark::State& state) {
    auto pp = instance(4, 12, 6);
    EstimatorConfig config;
    config.epsilon = 0.2;
    config.delta = 0.1;
    config.trials_override = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(klm_lose_prob(pp, Rule::borda(), 0, config));
}
BENCHMARK(BM_KlmLoseProb)->Arg(100)->Arg(1000);

void BM_CcauvBinary(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto reg = random_instance(5, n, ProbMode::fixed(1.0), 7);
    auto unreg = random_instance(5, n, ProbMode::fixed(0.5), 8);
    CcauvInstance inst(default_candidate_names(5), reg.profile(), unreg.profile(), 0);
    for (auto _ : state) benchmark::DoNotOptimize(ccauv_binary(inst, Rule::k_approval(2)));
}
BENCHMARK(BM_CcauvBinary)->Arg(32)->Arg(256);

} // namespace

BENCHMARK_MAIN();
