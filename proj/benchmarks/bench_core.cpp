#include <benchmark/benchmark.h>

#include "persuasion/builtin.hpp"
#include "persuasion/equilibrium.hpp"
#include "persuasion/optimal.hpp"
#include "persuasion/oracle.hpp"

using namespace persuasion;

namespace {

Signal policy_push_or_truth(const GameSpec& g) {
  Signal sig;
  sig.sender = 0;
  for (const auto& [pair, mass] : marginal_prior(g, 0)) {
    std::vector<Rational> dist(2);
    dist[pair.first == 3 ? 1 : 0] = 1;
    sig.rows[pair] = dist;
  }
  return sig;
}

void BM_ReceiverValue(benchmark::State& state) {
  GameSpec g = policy_game(Rational(1, 10));
  Signal sig = policy_push_or_truth(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(receiver_value(g, sig));
  }
}
BENCHMARK(BM_ReceiverValue);

void BM_Posterior(benchmark::State& state) {
  GameSpec g = ecig_game();
  Signal fi = full_info_signal(g, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(posterior(g, fi, 0));
  }
}
BENCHMARK(BM_Posterior);

void BM_Simulate(benchmark::State& state) {
  GameSpec g = policy_game(Rational(1, 10));
  Signal sig = policy_push_or_truth(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(g, 1, sig));
  }
}
BENCHMARK(BM_Simulate);

void BM_Improve(benchmark::State& state) {
  GameSpec g = policy_game(Rational(1, 10));
  Signal sig = policy_push_or_truth(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(improve(g, 1, sig));
  }
}
BENCHMARK(BM_Improve);

void BM_ObedienceLP(benchmark::State& state) {
  GameSpec g = ecig_game();
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimal_signal(g, 0));
  }
}
BENCHMARK(BM_ObedienceLP);

void BM_GridSearch(benchmark::State& state) {
  GameSpec g = ecig_game();
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_optimal_signal(g, 0, {resolution, 1000000}));
  }
}
BENCHMARK(BM_GridSearch)->Arg(2)->Arg(4)->Arg(6);

void BM_CheckEquilibrium(benchmark::State& state) {
  GameSpec g = policy_game(Rational(1, 10));
  PureProfile profile{{policy_push_or_truth(g), full_info_signal(g, 1)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_equilibrium(g, profile));
  }
}
BENCHMARK(BM_CheckEquilibrium);

}  // namespace

BENCHMARK_MAIN();
