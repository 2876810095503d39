#include <benchmark/benchmark.h>

#include "cascade/agent.hpp"
#include "cascade/sim.hpp"

using namespace cascade;

namespace {

EpisodeConfig episode_fixture(int rows, double p_slip) {
  SplitMix64 rng(rows * 77);
  EpisodeConfig config;
  config.puzzle = generate_puzzle(rows, 9, true, rng);
  config.repertoire.plans = {builtin_plans().at("add_only"), builtin_plans().at("full")};
  config.p_slip = p_slip;
  return config;
}

void BM_run_episode(benchmark::State& state) {
  const EpisodeConfig config =
      episode_fixture(static_cast<int>(state.range(0)), state.range(1) / 100.0);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto outcome = run_episode(config, seed++);
    benchmark::DoNotOptimize(outcome);
  }
}
BENCHMARK(BM_run_episode)->Args({3, 0})->Args({5, 0})->Args({5, 30})->Args({8, 30});

void BM_run_batch(benchmark::State& state) {
  sim::SimConfig config;
  config.generate = sim::GenerateSpec{4, 9, true};
  config.p_slip = 0.3;
  config.episodes = 64;
  config.master_seed = 42;
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto result = sim::run_batch(config, jobs);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_run_batch)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
