#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cascade/appraisal.hpp"
#include "cascade/emotion.hpp"
#include "cascade/plans.hpp"

namespace cascade {

enum class ActionKind { Fill, Correct, ChangePlan, Abandon, StopSuccess };

/// Trace string: "fill", "correct", "change_plan", "abandon", "stop_success".
std::string_view action_name(ActionKind kind);

struct CopingAction {
  ActionKind kind = ActionKind::Abandon;
  std::optional<Move> move;       // Fill
  std::optional<CellPos> target;  // Correct; always an agent-filled cell
  std::size_t to_index = 0;       // ChangePlan
};

/// Where the agent stands in its repertoire and how many switches remain.
struct PlanContext {
  Repertoire repertoire;
  std::size_t current_index = 0;
  int changes_used = 0;
  int max_changes = 3;

  const Plan& current_plan() const { return repertoire.plans[current_index]; }
};

struct CopingParams {
  double theta_abandon = 1.0;  // frustration level that ends the episode, in (0, 1]
};

/// One agent fill, in fill order.
struct FillRecord {
  CellPos pos;
  std::uint64_t seq = 0;

  friend bool operator==(const FillRecord&, const FillRecord&) = default;
};
using FillHistory = std::vector<FillRecord>;

/// The effective decision, evaluated in fixed order: solved stops the
/// episode; frustration at or above theta_abandon abandons it; progress
/// fills the proposed move; an error erases the most recently filled cell
/// belonging to any violated triple (child or parent); an impasse switches
/// plan while switches remain, else abandons. Deterministic. Throws
/// UnsatisfiablePuzzleError when a violation involves given cells only.
CopingAction decide(const Appraisal& appraisal, const EmotionState& emotion,
                    const PlanContext& ctx, const CopingParams& params,
                    const FillHistory& fill_history);

}  // namespace cascade
