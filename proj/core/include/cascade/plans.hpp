#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cascade/grid.hpp"

namespace cascade {

/// Local inference rules over one constraint triple
/// (child c, parent-left pl, parent-right pr with c = pl + pr):
///   AddDown  fills c  = pl + pr
///   SubLeft  fills pl = c - pr
///   SubRight fills pr = c - pl
/// A rule fires only when its target is Blank and both sources are known.
enum class Rule : std::uint8_t { AddDown = 0, SubLeft = 1, SubRight = 2 };

/// Wire name used in traces and move records: "R1", "R2", "R3".
std::string_view rule_name(Rule rule);

/// Value-type set of rules.
class RuleSet {
 public:
  constexpr RuleSet() = default;
  constexpr RuleSet(std::initializer_list<Rule> rules) {
    for (Rule r : rules) add(r);
  }

  constexpr RuleSet& add(Rule r) {
    bits_ |= bit(r);
    return *this;
  }
  constexpr bool contains(Rule r) const { return (bits_ & bit(r)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }

  static constexpr RuleSet all() { return {Rule::AddDown, Rule::SubLeft, Rule::SubRight}; }

  friend constexpr bool operator==(RuleSet, RuleSet) = default;

 private:
  static constexpr std::uint8_t bit(Rule r) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(r));
  }
  std::uint8_t bits_ = 0;
};

/// One interpretation of the task instructions: which rules the solver
/// allows itself. The scan order is fixed (row-major over triples), so a
/// plan is fully determined by its rule set.
struct Plan {
  std::string name;
  RuleSet rules;

  friend bool operator==(const Plan&, const Plan&) = default;
};

/// Ordered list of plans the agent can switch between.
struct Repertoire {
  std::vector<Plan> plans;
  bool cycling = true;
};

/// A concrete fill proposed by a rule: write `value` at `target`. `child`
/// names the constraint triple the rule fired on.
struct Move {
  CellPos target;
  int value = 0;
  Rule rule = Rule::AddDown;
  CellPos child;

  friend bool operator==(const Move&, const Move&) = default;
};

/// The built-in interpretations, keyed by their config/trace names:
/// "add_only" {AddDown}, "sub_only" {SubLeft, SubRight}, "full" (all three).
const std::map<std::string, Plan>& builtin_plans();

/// Every move the rule set licenses on `grid`, in deterministic order:
/// triples by child position row-major; AddDown, SubLeft, SubRight within a
/// triple. A pure function of its inputs.
std::vector<Move> applicable_moves(const Grid& grid, RuleSet rules);
std::vector<Move> applicable_moves(const Grid& grid, const Plan& plan);

/// Fixpoint of repeatedly applying the first applicable move. Terminates
/// (every application reduces the blank count) and never touches given
/// cells. Filled cells are stamped with sequence numbers continuing from the
/// grid's current maximum.
Grid closure(Grid grid, RuleSet rules);

/// Index of the plan after `current`: current + 1, wrapping to 0 when
/// cycling. Absent when there is nowhere to go (end of a non-cycling
/// repertoire, or a single-plan repertoire, since switching to the same plan
/// is meaningless).
std::optional<std::size_t> next_plan(const Repertoire& repertoire, std::size_t current);

}  // namespace cascade
