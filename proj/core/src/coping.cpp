#include "cascade/coping.hpp"

namespace cascade {

std::string_view action_name(ActionKind kind) {
  switch (kind) {
    case ActionKind::Fill: return "fill";
    case ActionKind::Correct: return "correct";
    case ActionKind::ChangePlan: return "change_plan";
    case ActionKind::Abandon: return "abandon";
    case ActionKind::StopSuccess: return "stop_success";
  }
  return "?";
}

namespace {

/// Latest agent fill among the members (child and both parents) of the
/// violated triples; null when every participant is a given cell.
const FillRecord* latest_culprit(const std::vector<CellPos>& violated_children,
                                 const FillHistory& fill_history) {
  const FillRecord* culprit = nullptr;
  for (const CellPos child : violated_children) {
    const CellPos members[3] = {child,
                                {child.row - 1, child.col},
                                {child.row - 1, child.col + 1}};
    for (const CellPos member : members)
      for (const FillRecord& record : fill_history)
        if (record.pos == member && (culprit == nullptr || record.seq > culprit->seq))
          culprit = &record;
  }
  return culprit;
}

}  // namespace

CopingAction decide(const Appraisal& appraisal, const EmotionState& emotion,
                    const PlanContext& ctx, const CopingParams& params,
                    const FillHistory& fill_history) {
  if (appraisal.kind == AppraisalKind::Solved) return {ActionKind::StopSuccess, {}, {}, 0};
  if (emotion.frustration >= params.theta_abandon) return {ActionKind::Abandon, {}, {}, 0};

  switch (appraisal.kind) {
    case AppraisalKind::Progress:
      return {ActionKind::Fill, appraisal.move, {}, 0};
    case AppraisalKind::Error: {
      const FillRecord* culprit = latest_culprit(appraisal.error_cells, fill_history);
      if (culprit == nullptr)
        throw UnsatisfiablePuzzleError(
            "constraint violation among given cells only; puzzle is malformed");
      return {ActionKind::Correct, {}, culprit->pos, 0};
    }
    case AppraisalKind::Impasse: {
      if (ctx.changes_used < ctx.max_changes)
        if (const auto next = next_plan(ctx.repertoire, ctx.current_index))
          return {ActionKind::ChangePlan, {}, {}, *next};
      return {ActionKind::Abandon, {}, {}, 0};
    }
    case AppraisalKind::Solved: break;  // handled above
  }
  return {ActionKind::Abandon, {}, {}, 0};
}

}  // namespace cascade
