#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cascade/agent.hpp"
#include "cascade/puzzle_io.hpp"

namespace cascade::sim {

struct GenerateSpec {
  int rows = 3;
  int vmax = 9;
  bool require_subtraction = false;
};

/// Parsed and validated experiment configuration. Exactly one puzzle source
/// is set: `generate` draws a fresh instance per episode, `puzzle` shares
/// one instance (loaded from the file named in the config) across episodes.
struct SimConfig {
  std::optional<GenerateSpec> generate;
  std::optional<Puzzle> puzzle;
  std::vector<std::string> repertoire = {"add_only", "full"};
  double p_slip = 0.0;
  EmotionParams emotion;
  CopingParams coping;
  int max_changes = 3;
  int step_cap = 200;
  int episodes = 1;
  std::uint64_t master_seed = 0;
};

/// Reads a JSON config file. Omitted fields take their defaults; every
/// violation (unknown key, unknown plan name, out-of-range value, missing
/// puzzle source) raises ConfigError naming the field.
SimConfig parse_config(const std::filesystem::path& path);

/// Same, from in-memory text. Relative puzzle paths resolve against
/// `base_dir`.
SimConfig parse_config_text(const std::string& text,
                            const std::filesystem::path& base_dir = ".");

/// Resolves plan names through builtin_plans(); ConfigError on an unknown or
/// duplicate name, or an empty list.
Repertoire resolve_repertoire(const std::vector<std::string>& names);

/// Episode settings for one concrete puzzle instance.
EpisodeConfig episode_config(const SimConfig& config, const Puzzle& puzzle);

struct BatchSummary {
  int episodes = 0;
  double solve_rate = 0.0;
  double abandon_rate = 0.0;
  double stepcap_rate = 0.0;
  double mean_steps = 0.0;
  double mean_plan_changes = 0.0;
  double mean_corrections = 0.0;
  double mean_final_valence = 0.0;
  double mean_final_frustration = 0.0;
};

struct BatchResult {
  BatchSummary summary;
  std::vector<EpisodeResult> episodes;
  std::vector<std::vector<TraceEvent>> traces;
};

/// Runs config.episodes episodes, optionally across `jobs` worker threads.
/// Episode i derives its seed as derive_episode_seed(master_seed, i) and
/// uses it both to generate its instance (when generating) and to drive the
/// agent. Results are collected in episode-index order, so the output is
/// identical for every `jobs` value. Episode failures are rethrown tagged
/// with the smallest failing index.
BatchResult run_batch(const SimConfig& config, int jobs = 1);

BatchSummary summarize(const std::vector<EpisodeResult>& episodes);

/// CSV with header episodes,solve_rate,abandon_rate,stepcap_rate,mean_steps,
/// mean_plan_changes,mean_corrections,mean_final_valence,mean_final_frustration
/// and one data row.
std::string summary_csv(const BatchSummary& summary);

/// CSV with header step,mean_valence,mean_frustration,n_active; row k
/// averages the episodes still running at step k (no padding).
std::string trajectory_csv(const std::vector<std::vector<TraceEvent>>& traces);

/// All traces as one JSONL stream, each record prefixed with its episode
/// index.
std::string concatenated_traces(const std::vector<std::vector<TraceEvent>>& traces);

struct OutputPaths {
  std::optional<std::filesystem::path> traces;        // JSONL
  bool split_traces = false;  // one file per episode: <stem>_ep<i><ext>
  std::optional<std::filesystem::path> summary;       // CSV
  std::optional<std::filesystem::path> trajectories;  // CSV
};

/// Writes the requested files; IoError on any write failure.
void write_outputs(const BatchResult& result, const OutputPaths& paths);

}  // namespace cascade::sim
