// cascade-affect: generate and solve cascade (sum-pyramid) puzzles and run
// seeded appraisal-coping agent episodes over them, single or in batch.
//
// Exit codes: 0 success, 1 I/O error, 2 config/usage error, 3 domain failure
// (undetermined puzzle, generation failure, malformed puzzle semantics).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cascade/sim.hpp"
#include "cascade/trace_io.hpp"

namespace {

using namespace cascade;

struct ExitWith {
  int code;
};

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

void print_episode(const EpisodeResult& result) {
  std::cout << "outcome=" << outcome_name(result.outcome) << " steps=" << result.steps
            << " plan_changes=" << result.plan_changes << " fills=" << result.fills
            << " corrections=" << result.corrections << " slips=" << result.slips
            << " final_valence=" << format_double(result.final_emotion.valence)
            << " final_frustration=" << format_double(result.final_emotion.frustration)
            << "\n";
}

void run_generate(int rows, int vmax, bool require_subtraction, std::uint64_t seed,
                  const std::filesystem::path& out_path) {
  SplitMix64 rng(seed);
  const Puzzle puzzle = generate_puzzle(rows, vmax, require_subtraction, rng);
  save_puzzle(puzzle, out_path);
  std::cout << "wrote " << out_path.string() << " (" << puzzle.grid.blank_count()
            << " blanks, requires_subtraction="
            << (puzzle.requires_subtraction ? "true" : "false") << ")\n";
}

void run_solve(const std::filesystem::path& puzzle_path) {
  const Puzzle puzzle = load_puzzle(puzzle_path);
  const Grid completed = closure(puzzle.grid, RuleSet::all());
  if (status(completed) != GridStatus::Solved) {
    std::cout << "UNDETERMINED\n";
    throw ExitWith{3};
  }
  std::cout << to_text(completed);
}

void run_single(const std::filesystem::path& config_path,
                const std::optional<std::filesystem::path>& puzzle_path,
                std::optional<std::uint64_t> seed_option,
                const std::optional<std::filesystem::path>& trace_path) {
  sim::SimConfig config = sim::parse_config(config_path);
  if (puzzle_path) {
    config.puzzle = load_puzzle(*puzzle_path);
    config.generate.reset();
  }
  const std::uint64_t seed = seed_option.value_or(config.master_seed);

  Puzzle puzzle;
  if (config.generate) {
    SplitMix64 generation_rng(seed);
    puzzle = generate_puzzle(config.generate->rows, config.generate->vmax,
                             config.generate->require_subtraction, generation_rng);
  } else {
    puzzle = *config.puzzle;
  }

  const auto [result, trace] = run_episode(sim::episode_config(config, puzzle), seed);
  if (trace_path) write_text_file(*trace_path, trace_jsonl(trace));
  print_episode(result);
}

void run_batch_command(const std::filesystem::path& config_path,
                       const std::optional<std::filesystem::path>& summary_path,
                       const std::optional<std::filesystem::path>& traces_path,
                       bool split_traces,
                       const std::optional<std::filesystem::path>& trajectories_path,
                       int jobs) {
  const sim::SimConfig config = sim::parse_config(config_path);
  const sim::BatchResult result = sim::run_batch(config, jobs);

  sim::OutputPaths paths;
  paths.summary = summary_path;
  paths.traces = traces_path;
  paths.split_traces = split_traces;
  paths.trajectories = trajectories_path;
  sim::write_outputs(result, paths);

  std::cout << "episodes=" << result.summary.episodes
            << " solve_rate=" << format_double(result.summary.solve_rate)
            << " abandon_rate=" << format_double(result.summary.abandon_rate)
            << " stepcap_rate=" << format_double(result.summary.stepcap_rate)
            << " mean_steps=" << format_double(result.summary.mean_steps) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"appraisal-coping agent simulator for cascade sum-pyramid puzzles"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "generate a solvable puzzle");
  int rows = 3;
  int vmax = 9;
  bool require_subtraction = false;
  std::uint64_t generate_seed = 0;
  std::filesystem::path generate_out;
  generate->add_option("--rows", rows, "grid rows")->required()->check(CLI::Range(2, 16));
  generate->add_option("--vmax", vmax, "top-row value bound")->check(CLI::Range(1, 1000000));
  generate->add_flag("--require-subtraction", require_subtraction,
                     "instance must stall under the additive rule alone");
  generate->add_option("--seed", generate_seed, "generation seed")->required();
  generate->add_option("--out", generate_out, "output puzzle JSON path")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "print the rule-closure completion");
  std::filesystem::path solve_path;
  solve->add_option("puzzle", solve_path, "puzzle JSON path")->required();

  // run
  auto* run = app.add_subcommand("run", "run one episode and write its trace");
  std::filesystem::path run_config;
  std::optional<std::filesystem::path> run_puzzle;
  std::optional<std::uint64_t> run_seed;
  std::optional<std::filesystem::path> run_trace;
  run->add_option("--config", run_config, "config JSON path")->required();
  run->add_option("--puzzle", run_puzzle, "puzzle JSON overriding the config source");
  run->add_option("--seed", run_seed, "episode seed (default: config master_seed)");
  run->add_option("--trace", run_trace, "trace JSONL output path");

  // batch
  auto* batch = app.add_subcommand("batch", "run a seeded episode batch");
  std::filesystem::path batch_config;
  std::optional<std::filesystem::path> batch_summary;
  std::optional<std::filesystem::path> batch_traces;
  std::optional<std::filesystem::path> batch_trajectories;
  bool split_traces = false;
  int jobs = 1;
  batch->add_option("--config", batch_config, "config JSON path")->required();
  batch->add_option("--out", batch_summary, "summary CSV output path");
  batch->add_option("--traces", batch_traces, "trace JSONL output path");
  batch->add_flag("--split-traces", split_traces, "one trace file per episode");
  batch->add_option("--trajectories", batch_trajectories, "trajectory CSV output path");
  batch->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
    if (generate->parsed())
      run_generate(rows, vmax, require_subtraction, generate_seed, generate_out);
    else if (solve->parsed())
      run_solve(solve_path);
    else if (run->parsed())
      run_single(run_config, run_puzzle, run_seed, run_trace);
    else if (batch->parsed())
      run_batch_command(batch_config, batch_summary, batch_traces, split_traces,
                        batch_trajectories, jobs);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ExitWith& e) {
    return e.code;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
