#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cascade/coping.hpp"
#include "cascade/puzzle.hpp"
#include "cascade/rng.hpp"

namespace cascade {

/// Full state of one episode between steps. fill_history mirrors the grid's
/// Filled cells in fill_seq order.
struct AgentState {
  Grid grid;
  PlanContext ctx;
  EmotionState emotion;
  FillHistory fill_history;
  std::uint64_t next_seq = 1;
  int step = 0;
};

/// One line of the per-step log. `move` is present exactly for fill actions
/// and carries the value actually written (after any slip), so replaying a
/// trace reproduces the final grid.
struct TraceEvent {
  int t = 0;
  std::string plan;
  AppraisalKind appraisal = AppraisalKind::Impasse;
  std::optional<Move> move;
  ActionKind action = ActionKind::Abandon;
  double valence = 0.0;
  double frustration = 0.0;
  bool slipped = false;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

enum class Outcome { Solved, Abandoned, StepCapReached };

/// "solved", "abandoned", "step_cap_reached".
std::string_view outcome_name(Outcome outcome);

struct EpisodeResult {
  Outcome outcome = Outcome::StepCapReached;
  int steps = 0;
  int plan_changes = 0;
  int fills = 0;
  int corrections = 0;
  int slips = 0;
  EmotionState final_emotion;
};

struct EpisodeConfig {
  Puzzle puzzle;
  Repertoire repertoire;
  EmotionParams emotion_params;
  CopingParams coping_params;
  int max_changes = 3;
  double p_slip = 0.0;  // probability a fill writes value +/- 1
  int step_cap = 200;
};

struct StepOutput {
  AgentState state;
  TraceEvent event;
  std::optional<Outcome> terminal;
};

AgentState initial_state(const EpisodeConfig& config);

/// One appraise -> feel -> decide -> act cycle. Rng draws happen only on
/// fill actions: slip occurrence first, slip sign second, both always
/// consumed. A plan change applies a second emotion update (PlanChanged);
/// the emitted event carries the post-update emotion.
StepOutput step(AgentState state, const EpisodeConfig& config, SplitMix64& rng);

/// Runs step() until a terminal action or the step cap. Deterministic given
/// (config, seed); the trace has exactly result.steps events.
std::pair<EpisodeResult, std::vector<TraceEvent>> run_episode(const EpisodeConfig& config,
                                                              std::uint64_t seed);

}  // namespace cascade
