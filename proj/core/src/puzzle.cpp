#include "cascade/puzzle.hpp"

#include <string>
#include <utility>

#include "cascade/plans.hpp"

namespace cascade {
namespace {

/// Advances `top` to the next assignment in lexicographic order over
/// [0, vmax]^n; false once the space is exhausted.
bool next_assignment(std::vector<int>& top, int vmax) {
  for (int i = static_cast<int>(top.size()) - 1; i >= 0; --i) {
    auto& v = top[static_cast<std::size_t>(i)];
    if (v < vmax) {
      ++v;
      return true;
    }
    v = 0;
  }
  return false;
}

bool matches_givens(const Grid& candidate, const Grid& pattern) {
  for (int r = 0; r < pattern.rows(); ++r)
    for (int i = 0; i < pattern.row_size(r); ++i) {
      const CellState& cell = pattern.at({r, i});
      if (!cell.is_blank() && candidate.at({r, i}).value != cell.value) return false;
    }
  return true;
}

std::vector<CellPos> all_positions(const Grid& grid) {
  std::vector<CellPos> positions;
  for (int r = 0; r < grid.rows(); ++r)
    for (int i = 0; i < grid.row_size(r); ++i) positions.push_back({r, i});
  return positions;
}

}  // namespace

std::vector<Grid> brute_force_completions(const Puzzle& puzzle, int vmax) {
  if (vmax < 0) throw GridError("brute_force_completions: vmax must be >= 0");
  std::vector<int> top(static_cast<std::size_t>(puzzle.grid.rows()), 0);
  std::vector<Grid> completions;
  do {
    Grid candidate = from_top_row(top);
    if (matches_givens(candidate, puzzle.grid)) completions.push_back(std::move(candidate));
  } while (next_assignment(top, vmax));
  return completions;
}

Puzzle generate_puzzle(int rows, int vmax, bool require_subtraction, SplitMix64& rng,
                       int max_attempts) {
  if (rows < 2) throw GridError("generate_puzzle: rows must be >= 2");
  if (vmax < 1) throw GridError("generate_puzzle: vmax must be >= 1");
  if (max_attempts < 1) throw GridError("generate_puzzle: max_attempts must be >= 1");

  std::vector<int> top(static_cast<std::size_t>(rows));
  for (int& v : top) v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(vmax) + 1));
  const Grid full = from_top_row(top);
  const std::vector<CellPos> positions = all_positions(full);

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<CellPos> order = positions;
    shuffle(order, rng);

    // Greedy removal: keep a blank only while the full rule set still
    // recovers the whole grid.
    Grid grid = full;
    for (const CellPos pos : order) {
      Grid candidate = grid;
      candidate.at(pos) = CellState::blank();
      if (status(closure(candidate, RuleSet::all())) == GridStatus::Solved)
        grid = std::move(candidate);
    }

    const bool stalls_under_addition =
        status(closure(grid, {Rule::AddDown})) != GridStatus::Solved;
    if (!require_subtraction || stalls_under_addition)
      return Puzzle{std::move(grid), vmax, stalls_under_addition};
  }
  throw GenerationError("generate_puzzle: no removal order required subtraction after " +
                        std::to_string(max_attempts) + " attempts");
}

}  // namespace cascade
