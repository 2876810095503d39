#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cascade/plans.hpp"

namespace cascade {

enum class AppraisalKind { Solved, Progress, Error, Impasse };

/// Trace string: "solved", "progress", "error", "impasse".
std::string_view appraisal_name(AppraisalKind kind);

/// Outcome of evaluating the grid against the active plan. `relevance`
/// marks that the task still matters to the goal (anything but Solved);
/// `congruence` marks that the situation favors it (Solved or Progress).
struct Appraisal {
  AppraisalKind kind = AppraisalKind::Impasse;
  std::optional<Move> move;          // set when kind == Progress
  std::vector<CellPos> error_cells;  // set when kind == Error
  bool relevance = true;
  bool congruence = false;
};

/// Classification with fixed precedence: a detected inconsistency outranks
/// everything, then a solved grid, then the first move the plan licenses;
/// otherwise the plan is stuck. Pure function.
Appraisal appraise(const Grid& grid, const Plan& plan);

}  // namespace cascade
