// Acceptance suite: end-to-end properties of the solver, the generator, the
// emotion dynamics and the batch harness, one criterion per function. Each
// prints a single PASS/FAIL line; the process exits non-zero if any fails.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "cascade/sim.hpp"
#include "cascade/trace_io.hpp"
#include "support/test_support.hpp"

using namespace cascade;

namespace {

const Plan& plan_named(const std::string& name) { return builtin_plans().at(name); }

EpisodeConfig episode_config_for(Puzzle puzzle, std::vector<std::string> plan_names,
                                 double p_slip = 0.0) {
  EpisodeConfig config;
  config.puzzle = std::move(puzzle);
  for (const std::string& name : plan_names) config.repertoire.plans.push_back(plan_named(name));
  config.p_slip = p_slip;
  return config;
}

bool fail(std::string& detail, const std::string& message) {
  detail = message;
  return false;
}

// ---------------------------------------------------------------------------
// 1. Oracle equivalence: 200 seeded puzzles (rows 2-4, vmax 9, mixed
//    require_subtraction) have exactly one brute-force completion, equal to
//    the full-rule closure. Exact integer equality.
bool oracle_equivalence(std::string& detail) {
  for (int k = 0; k < 200; ++k) {
    const int rows = 2 + k % 3;
    const bool require_sub = k % 2 == 1;
    SplitMix64 rng(1000 + static_cast<std::uint64_t>(k));
    const Puzzle puzzle = generate_puzzle(rows, 9, require_sub, rng);

    const std::vector<Grid> completions = brute_force_completions(puzzle, 9);
    if (completions.size() != 1)
      return fail(detail, "puzzle " + std::to_string(k) + ": expected 1 completion, got " +
                              std::to_string(completions.size()));
    if (!values_equal(completions.front(), closure(puzzle.grid, RuleSet::all())))
      return fail(detail, "puzzle " + std::to_string(k) + ": closure disagrees with oracle");
  }
  detail = "200/200 puzzles: unique brute-force completion == rule closure";
  return true;
}

// ---------------------------------------------------------------------------
// 2. Flexibility: 50 subtraction-requiring puzzles, repertoire
//    [add_only, full], p_slip 0 -> every episode hits an impasse under
//    add_only, changes plan at least once, and ends solved.
bool flexibility_scenario(std::string& detail) {
  for (int k = 0; k < 50; ++k) {
    const int rows = 2 + k % 3;
    SplitMix64 rng(2000 + static_cast<std::uint64_t>(k));
    const Puzzle puzzle = generate_puzzle(rows, 9, true, rng);

    const auto [result, trace] = run_episode(
        episode_config_for(puzzle, {"add_only", "full"}), 3000 + static_cast<std::uint64_t>(k));

    int impasses_under_add = 0;
    int changes = 0;
    for (const TraceEvent& event : trace) {
      if (event.plan == "add_only" && event.appraisal == AppraisalKind::Impasse)
        ++impasses_under_add;
      if (event.action == ActionKind::ChangePlan) ++changes;
    }
    if (impasses_under_add < 1)
      return fail(detail, "episode " + std::to_string(k) + ": no impasse under add_only");
    if (changes < 1)
      return fail(detail, "episode " + std::to_string(k) + ": no plan change");
    if (result.outcome != Outcome::Solved)
      return fail(detail, "episode " + std::to_string(k) + ": outcome " +
                              std::string(outcome_name(result.outcome)));
  }
  detail = "50/50 episodes: impasse under add_only, >=1 plan change, solved";
  return true;
}

// ---------------------------------------------------------------------------
// 3. Positive affect: 50 puzzles solvable under the additive rule alone,
//    repertoire [add_only], p_slip 0 -> valence strictly positive from the
//    first fill on, non-decreasing at every step, final valence > 0.
bool positive_affect(std::string& detail) {
  int collected = 0;
  for (std::uint64_t seed = 4000; collected < 50 && seed < 12000; ++seed) {
    SplitMix64 rng(seed);
    const Puzzle puzzle = generate_puzzle(2 + static_cast<int>(seed % 3), 9, false, rng);
    if (status(closure(puzzle.grid, {Rule::AddDown})) != GridStatus::Solved) continue;
    ++collected;

    const auto [result, trace] =
        run_episode(episode_config_for(puzzle, {"add_only"}), seed + 100000);
    if (result.outcome != Outcome::Solved)
      return fail(detail, "seed " + std::to_string(seed) + ": not solved");

    bool seen_fill = false;
    double previous = 0.0;
    for (const TraceEvent& event : trace) {
      if (event.valence < previous)
        return fail(detail, "seed " + std::to_string(seed) + ": valence decreased at t=" +
                                std::to_string(event.t));
      if (event.action == ActionKind::Fill) seen_fill = true;
      if (seen_fill && event.valence <= 0.0)
        return fail(detail, "seed " + std::to_string(seed) + ": non-positive valence at t=" +
                                std::to_string(event.t));
      previous = event.valence;
    }
    if (result.final_emotion.valence <= 0.0)
      return fail(detail, "seed " + std::to_string(seed) + ": final valence <= 0");
  }
  if (collected < 50) return fail(detail, "could not collect 50 add-only-solvable puzzles");
  detail = "50/50 episodes: valence positive after first fill, non-decreasing, final > 0";
  return true;
}

// ---------------------------------------------------------------------------
// 4. Abandonment: the all-blank 2-row puzzle under [add_only, full] cycles
//    twice and abandons at step 3 with frustration exactly 1 (tol 1e-9).
bool abandonment(std::string& detail) {
  const Puzzle puzzle = test::puzzle_of({{test::B, test::B}, {test::B}});
  const auto [result, trace] = run_episode(episode_config_for(puzzle, {"add_only", "full"}), 1);

  if (result.outcome != Outcome::Abandoned)
    return fail(detail, std::string("outcome ") + std::string(outcome_name(result.outcome)));
  if (result.steps != 3) return fail(detail, "steps " + std::to_string(result.steps));
  if (result.plan_changes != 2)
    return fail(detail, "plan_changes " + std::to_string(result.plan_changes));
  if (std::fabs(result.final_emotion.frustration - 1.0) > 1e-9)
    return fail(detail, "final frustration " + format_double(result.final_emotion.frustration));
  detail = "abandoned in 3 steps, 2 plan changes, frustration 1.0";
  return true;
}

// ---------------------------------------------------------------------------
// 5. Golden episode on [[1,_,3],[_,5],[_]]: solved in 5 steps with one plan
//    change and three fills; final emotion matches an independent
//    step-by-step recomputation to 1e-9.
bool golden_episode(std::string& detail) {
  const Puzzle puzzle = test::puzzle_of({{1, test::B, 3}, {test::B, 5}, {test::B}});
  const auto [result, trace] = run_episode(episode_config_for(puzzle, {"add_only", "full"}), 1);

  if (result.outcome != Outcome::Solved || result.steps != 5 || result.plan_changes != 1 ||
      result.fills != 3 || result.corrections != 0)
    return fail(detail, "wrong shape: steps=" + std::to_string(result.steps) +
                            " changes=" + std::to_string(result.plan_changes) +
                            " fills=" + std::to_string(result.fills));

  // hand-trace: impasse, plan change, three progress fills, solved
  const EmotionParams p;
  double v = 0.0;
  v = p.lambda * v - p.delta_imp;
  v = p.lambda * v;  // plan change
  double f = p.phi_imp + p.phi_change;
  for (int fills = 0; fills < 3; ++fills) v = p.lambda * v + p.delta_pos;
  v = p.lambda * v + p.delta_solve;

  if (std::fabs(v - 0.7516) > 1e-4)
    return fail(detail, "recomputed reference drifted: " + format_double(v));
  if (std::fabs(result.final_emotion.valence - v) > 1e-9)
    return fail(detail, "final valence " + format_double(result.final_emotion.valence) +
                            " != " + format_double(v));
  if (std::fabs(result.final_emotion.frustration - f) > 1e-9 ||
      std::fabs(result.final_emotion.frustration - 0.55) > 1e-9)
    return fail(detail, "final frustration " + format_double(result.final_emotion.frustration));
  detail = "solved in 5 steps, 1 change, 3 fills, valence ~ " + format_double(v) +
           ", frustration 0.55";
  return true;
}

// ---------------------------------------------------------------------------
// 6. Slip/correction loop: 100 episodes on one fixed 3-row puzzle at
//    p_slip 0.5. Slips occur; each slip with a successor step is appraised
//    as an error there; corrections equal detected slips; solved grids are
//    violation-free. The fixed (puzzle, master seed) pair was chosen so no
//    episode abandons or hits the cap, which the test asserts explicitly:
//    an episode that abandons at the error step would leave its last slip
//    uncorrected and the count equality would not be meaningful.
bool slip_correction_loop(std::string& detail) {
  // add-only solvable, blanks at (1,1) and (2,0); verified: the worst
  // episode under this master seed slips 8 times, below the 10 slip-errors
  // that would cross the abandonment threshold
  const Puzzle puzzle = test::puzzle_of({{1, 2, 3}, {3, test::B}, {test::B}});

  sim::SimConfig config;
  config.puzzle = puzzle;
  config.p_slip = 0.5;
  config.episodes = 100;
  config.master_seed = 1;
  const sim::BatchResult batch = sim::run_batch(config);

  int slips_total = 0;
  int slips_detected = 0;
  int corrections = 0;
  for (std::size_t e = 0; e < batch.traces.size(); ++e) {
    const auto& trace = batch.traces[e];
    const EpisodeResult& result = batch.episodes[e];
    if (result.outcome != Outcome::Solved)
      return fail(detail, "episode " + std::to_string(e) + " did not solve (fixture broken)");

    slips_total += result.slips;
    corrections += result.corrections;
    for (std::size_t t = 0; t < trace.size(); ++t) {
      if (!trace[t].slipped) continue;
      if (t + 1 < trace.size()) {
        ++slips_detected;
        if (trace[t + 1].appraisal != AppraisalKind::Error)
          return fail(detail, "episode " + std::to_string(e) + ": slip at t=" +
                                  std::to_string(t) + " not followed by an error appraisal");
      }
    }

    const Grid final_grid = test::replay_trace(puzzle, trace);
    if (!violated_constraints(final_grid).empty() || final_grid.blank_count() != 0)
      return fail(detail, "episode " + std::to_string(e) + ": solved grid is not clean");
  }

  if (slips_total <= 0) return fail(detail, "no slips occurred");
  if (corrections != slips_detected)
    return fail(detail, "corrections " + std::to_string(corrections) + " != slips detected " +
                            std::to_string(slips_detected));
  detail = std::to_string(slips_total) + " slips, " + std::to_string(slips_detected) +
           " detected, " + std::to_string(corrections) + " corrections, all solved grids clean";
  return true;
}

// ---------------------------------------------------------------------------
// 7. Determinism and parallel safety: the batch subcommand produces byte-
//    identical trace/summary/trajectory files for jobs in {1, 8} across
//    three repetitions each.
bool batch_determinism(std::string& detail) {
  const std::string cli = CASCADE_CLI_PATH;
  const auto dir = std::filesystem::temp_directory_path() / "cascade_acceptance_batch";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);

  {
    std::ofstream config(dir / "cfg.json");
    config << R"({"generate":{"rows":3,"require_subtraction":true},"episodes":40,)"
           << R"("p_slip":0.3,"master_seed":9})";
  }

  const auto read_file = [](const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };

  std::string reference_traces, reference_summary, reference_trajectories;
  for (const int jobs : {1, 8}) {
    for (int repetition = 0; repetition < 3; ++repetition) {
      const std::string traces = (dir / "traces.jsonl").string();
      const std::string summary = (dir / "summary.csv").string();
      const std::string trajectories = (dir / "traj.csv").string();
      const std::string command = cli + " batch --config " + (dir / "cfg.json").string() +
                                  " --out " + summary + " --traces " + traces +
                                  " --trajectories " + trajectories + " --jobs " +
                                  std::to_string(jobs) + " >/dev/null 2>&1";
      const int raw = std::system(command.c_str());
      if (raw == -1 || !WIFEXITED(raw) || WEXITSTATUS(raw) != 0)
        return fail(detail, "batch command failed (jobs=" + std::to_string(jobs) + ")");

      const std::string traces_bytes = read_file(traces);
      const std::string summary_bytes = read_file(summary);
      const std::string trajectory_bytes = read_file(trajectories);
      if (reference_traces.empty()) {
        reference_traces = traces_bytes;
        reference_summary = summary_bytes;
        reference_trajectories = trajectory_bytes;
        continue;
      }
      if (traces_bytes != reference_traces)
        return fail(detail, "trace bytes differ (jobs=" + std::to_string(jobs) + ")");
      if (summary_bytes != reference_summary)
        return fail(detail, "summary bytes differ (jobs=" + std::to_string(jobs) + ")");
      if (trajectory_bytes != reference_trajectories)
        return fail(detail, "trajectory bytes differ (jobs=" + std::to_string(jobs) + ")");
    }
  }
  detail = "6 runs (jobs 1 and 8, 3 repetitions): byte-identical outputs";
  return true;
}

// ---------------------------------------------------------------------------
// 8. Emotion bounds fuzz: 1000 random length-100 event sequences keep
//    valence in [-1, 1] and frustration in [0, 1], frustration
//    non-decreasing, after every single update.
bool emotion_bounds_fuzz(std::string& detail) {
  const EmotionParams params;
  SplitMix64 rng(8888);
  for (int sequence = 0; sequence < 1000; ++sequence) {
    EmotionState state;
    for (int step = 0; step < 100; ++step) {
      const auto event = static_cast<EmotionEvent>(rng.next_below(5));
      const EmotionState next = update(state, event, params);
      if (next.valence < -1.0 || next.valence > 1.0)
        return fail(detail, "valence out of bounds: " + format_double(next.valence));
      if (next.frustration < 0.0 || next.frustration > 1.0)
        return fail(detail, "frustration out of bounds: " + format_double(next.frustration));
      if (next.frustration < state.frustration)
        return fail(detail, "frustration decreased");
      state = next;
    }
  }
  detail = "1000 sequences x 100 events: bounds hold, frustration monotone";
  return true;
}

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"flexibility scenario", flexibility_scenario},
      {"positive affect", positive_affect},
      {"abandonment", abandonment},
      {"golden episode", golden_episode},
      {"slip/correction loop", slip_correction_loop},
      {"batch determinism", batch_determinism},
      {"emotion bounds fuzz", emotion_bounds_fuzz},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool passed = false;
    try {
      passed = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << (i + 1) << ". " << criteria[i].name
              << " - " << detail << "\n";
    if (!passed) ++failures;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size()
            << " acceptance criteria passed\n";
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
