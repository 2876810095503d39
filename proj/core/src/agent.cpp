#include "cascade/agent.hpp"

#include <algorithm>
#include <utility>

#include "cascade/appraisal.hpp"

namespace cascade {

std::string_view outcome_name(Outcome outcome) {
  switch (outcome) {
    case Outcome::Solved: return "solved";
    case Outcome::Abandoned: return "abandoned";
    case Outcome::StepCapReached: return "step_cap_reached";
  }
  return "?";
}

namespace {

EmotionEvent event_for(AppraisalKind kind) {
  switch (kind) {
    case AppraisalKind::Solved: return EmotionEvent::TaskSolved;
    case AppraisalKind::Progress: return EmotionEvent::ProgressMade;
    case AppraisalKind::Error: return EmotionEvent::ErrorDetected;
    case AppraisalKind::Impasse: return EmotionEvent::ImpasseHit;
  }
  return EmotionEvent::ImpasseHit;
}

}  // namespace

AgentState initial_state(const EpisodeConfig& config) {
  if (config.repertoire.plans.empty())
    throw Error("episode: repertoire must contain at least one plan");
  AgentState state;
  state.grid = config.puzzle.grid;
  state.ctx.repertoire = config.repertoire;
  state.ctx.max_changes = config.max_changes;
  return state;
}

StepOutput step(AgentState state, const EpisodeConfig& config, SplitMix64& rng) {
  const Plan& plan = state.ctx.current_plan();
  const Appraisal appraisal = appraise(state.grid, plan);
  state.emotion = update(state.emotion, event_for(appraisal.kind), config.emotion_params);
  const CopingAction action =
      decide(appraisal, state.emotion, state.ctx, config.coping_params, state.fill_history);

  TraceEvent event;
  event.t = state.step;
  event.plan = plan.name;
  event.appraisal = appraisal.kind;
  event.action = action.kind;

  std::optional<Outcome> terminal;
  switch (action.kind) {
    case ActionKind::Fill: {
      // Two draws on every fill, occurrence then sign; the sign draw is used
      // only when the fill slips.
      const bool slipped = rng.next_double() < config.p_slip;
      const double sign_draw = rng.next_double();
      int written = action.move->value;
      if (slipped) written += sign_draw < 0.5 ? 1 : -1;

      const std::uint64_t seq = state.next_seq++;
      state.grid = set_cell(std::move(state.grid), action.move->target, written, seq);
      state.fill_history.push_back({action.move->target, seq});

      Move executed = *action.move;
      executed.value = written;
      event.move = executed;
      event.slipped = slipped;
      break;
    }
    case ActionKind::Correct: {
      state.grid = clear_cell(std::move(state.grid), *action.target);
      std::erase_if(state.fill_history,
                    [&](const FillRecord& record) { return record.pos == *action.target; });
      break;
    }
    case ActionKind::ChangePlan: {
      state.ctx.current_index = action.to_index;
      state.ctx.changes_used += 1;
      state.emotion = update(state.emotion, EmotionEvent::PlanChanged, config.emotion_params);
      break;
    }
    case ActionKind::Abandon: terminal = Outcome::Abandoned; break;
    case ActionKind::StopSuccess: terminal = Outcome::Solved; break;
  }

  event.valence = state.emotion.valence;
  event.frustration = state.emotion.frustration;
  state.step += 1;
  return {std::move(state), std::move(event), terminal};
}

std::pair<EpisodeResult, std::vector<TraceEvent>> run_episode(const EpisodeConfig& config,
                                                              std::uint64_t seed) {
  SplitMix64 rng(seed);
  AgentState state = initial_state(config);
  std::vector<TraceEvent> trace;
  EpisodeResult result;
  std::optional<Outcome> terminal;

  while (!terminal && state.step < config.step_cap) {
    StepOutput output = step(std::move(state), config, rng);
    state = std::move(output.state);
    terminal = output.terminal;
    switch (output.event.action) {
      case ActionKind::Fill: result.fills += 1; break;
      case ActionKind::Correct: result.corrections += 1; break;
      case ActionKind::ChangePlan: result.plan_changes += 1; break;
      default: break;
    }
    if (output.event.slipped) result.slips += 1;
    trace.push_back(std::move(output.event));
  }

  result.outcome = terminal.value_or(Outcome::StepCapReached);
  result.steps = state.step;
  result.final_emotion = state.emotion;
  return {result, std::move(trace)};
}

}  // namespace cascade
