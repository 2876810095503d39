#include <benchmark/benchmark.h>

#include "cascade/plans.hpp"
#include "cascade/puzzle.hpp"

using namespace cascade;

namespace {

Puzzle fixture_puzzle(int rows, bool require_subtraction) {
  SplitMix64 rng(rows * 1000 + (require_subtraction ? 1 : 0));
  return generate_puzzle(rows, 9, require_subtraction, rng);
}

void BM_closure_full(benchmark::State& state) {
  const Puzzle puzzle = fixture_puzzle(static_cast<int>(state.range(0)), true);
  for (auto _ : state) {
    Grid result = closure(puzzle.grid, RuleSet::all());
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_closure_full)->Arg(3)->Arg(5)->Arg(8);

void BM_brute_force(benchmark::State& state) {
  const Puzzle puzzle = fixture_puzzle(static_cast<int>(state.range(0)), false);
  for (auto _ : state) {
    auto completions = brute_force_completions(puzzle, 9);
    benchmark::DoNotOptimize(completions);
  }
}
BENCHMARK(BM_brute_force)->Arg(2)->Arg(3)->Arg(4);

void BM_generate_puzzle(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    SplitMix64 rng(seed++);
    Puzzle puzzle = generate_puzzle(static_cast<int>(state.range(0)), 9, false, rng);
    benchmark::DoNotOptimize(puzzle);
  }
}
BENCHMARK(BM_generate_puzzle)->Arg(3)->Arg(5)->Arg(7);

void BM_generate_require_subtraction(benchmark::State& state) {
  std::uint64_t seed = 1;
  for (auto _ : state) {
    SplitMix64 rng(seed++);
    Puzzle puzzle = generate_puzzle(static_cast<int>(state.range(0)), 9, true, rng);
    benchmark::DoNotOptimize(puzzle);
  }
}
BENCHMARK(BM_generate_require_subtraction)->Arg(3)->Arg(5);

}  // namespace
