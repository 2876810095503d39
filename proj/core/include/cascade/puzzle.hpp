#pragma once

#include <vector>

#include "cascade/grid.hpp"
#include "cascade/rng.hpp"

namespace cascade {

/// A puzzle instance: a grid of Given/Blank cells, the value bound used at
/// generation, and whether completing it needs the subtractive rules.
struct Puzzle {
  Grid grid;
  int vmax = 9;
  bool requires_subtraction = false;

  friend bool operator==(const Puzzle&, const Puzzle&) = default;
};

/// Exhaustive oracle: every completion whose top row lies in [0, vmax]^R and
/// that agrees with all given cells, in lexicographic top-row order. Lower
/// rows are forced by the sum constraint, so enumerating top rows covers the
/// whole solution space.
std::vector<Grid> brute_force_completions(const Puzzle& puzzle, int vmax);

/// Generates a locally solvable puzzle: draw a top row uniformly from
/// [0, vmax], complete it by sums, then blank cells in seeded random order,
/// keeping each removal only while the full-ruleset closure still completes
/// the grid. With require_subtraction, removal orders are retried (up to
/// max_attempts) until the result stalls under the additive rule alone;
/// GenerationError when no order works. Deterministic given the rng state.
Puzzle generate_puzzle(int rows, int vmax, bool require_subtraction, SplitMix64& rng,
                       int max_attempts = 100);

}  // namespace cascade
