#include "cascade/plans.hpp"

#include <utility>

namespace cascade {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::AddDown: return "R1";
    case Rule::SubLeft: return "R2";
    case Rule::SubRight: return "R3";
  }
  return "?";
}

const std::map<std::string, Plan>& builtin_plans() {
  static const std::map<std::string, Plan> plans = {
      {"add_only", Plan{"add_only", {Rule::AddDown}}},
      {"sub_only", Plan{"sub_only", {Rule::SubLeft, Rule::SubRight}}},
      {"full", Plan{"full", RuleSet::all()}},
  };
  return plans;
}

std::vector<Move> applicable_moves(const Grid& grid, RuleSet rules) {
  std::vector<Move> moves;
  for (int r = 1; r < grid.rows(); ++r) {
    for (int i = 0; i < grid.row_size(r); ++i) {
      const CellPos child_pos{r, i};
      const CellPos left_pos{r - 1, i};
      const CellPos right_pos{r - 1, i + 1};
      const CellState& child = grid.at(child_pos);
      const CellState& left = grid.at(left_pos);
      const CellState& right = grid.at(right_pos);

      if (rules.contains(Rule::AddDown) && child.is_blank() && !left.is_blank() &&
          !right.is_blank())
        moves.push_back({child_pos, left.value + right.value, Rule::AddDown, child_pos});
      if (rules.contains(Rule::SubLeft) && left.is_blank() && !child.is_blank() &&
          !right.is_blank())
        moves.push_back({left_pos, child.value - right.value, Rule::SubLeft, child_pos});
      if (rules.contains(Rule::SubRight) && right.is_blank() && !child.is_blank() &&
          !left.is_blank())
        moves.push_back({right_pos, child.value - left.value, Rule::SubRight, child_pos});
    }
  }
  return moves;
}

std::vector<Move> applicable_moves(const Grid& grid, const Plan& plan) {
  return applicable_moves(grid, plan.rules);
}

Grid closure(Grid grid, RuleSet rules) {
  std::uint64_t seq = grid.max_fill_seq() + 1;
  for (;;) {
    const std::vector<Move> moves = applicable_moves(grid, rules);
    if (moves.empty()) return grid;
    const Move& move = moves.front();
    grid = set_cell(std::move(grid), move.target, move.value, seq++);
  }
}

std::optional<std::size_t> next_plan(const Repertoire& repertoire, std::size_t current) {
  if (current >= repertoire.plans.size())
    throw Error("next_plan: current index out of range");
  std::optional<std::size_t> candidate;
  if (current + 1 < repertoire.plans.size())
    candidate = current + 1;
  else if (repertoire.cycling)
    candidate = 0;
  if (candidate && *candidate == current) return std::nullopt;  // no self-change
  return candidate;
}

}  // namespace cascade
