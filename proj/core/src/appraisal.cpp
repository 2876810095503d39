#include "cascade/appraisal.hpp"

#include <utility>

namespace cascade {

std::string_view appraisal_name(AppraisalKind kind) {
  switch (kind) {
    case AppraisalKind::Solved: return "solved";
    case AppraisalKind::Progress: return "progress";
    case AppraisalKind::Error: return "error";
    case AppraisalKind::Impasse: return "impasse";
  }
  return "?";
}

Appraisal appraise(const Grid& grid, const Plan& plan) {
  Appraisal appraisal;
  std::vector<CellPos> violated = violated_constraints(grid);
  if (!violated.empty()) {
    appraisal.kind = AppraisalKind::Error;
    appraisal.error_cells = std::move(violated);
  } else if (grid.blank_count() == 0) {
    appraisal.kind = AppraisalKind::Solved;
  } else {
    std::vector<Move> moves = applicable_moves(grid, plan.rules);
    if (!moves.empty()) {
      appraisal.kind = AppraisalKind::Progress;
      appraisal.move = moves.front();
    } else {
      appraisal.kind = AppraisalKind::Impasse;
    }
  }
  appraisal.relevance = appraisal.kind != AppraisalKind::Solved;
  appraisal.congruence =
      appraisal.kind == AppraisalKind::Solved || appraisal.kind == AppraisalKind::Progress;
  return appraisal;
}

}  // namespace cascade
