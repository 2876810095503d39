#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>

#include "cascade/sim.hpp"

namespace cascade::sim {
namespace {

struct EpisodeFailure {
  int index = 0;
  std::exception_ptr error;
};

}  // namespace

BatchSummary summarize(const std::vector<EpisodeResult>& episodes) {
  BatchSummary summary;
  summary.episodes = static_cast<int>(episodes.size());
  if (episodes.empty()) return summary;

  int solved = 0, abandoned = 0, capped = 0;
  double steps = 0, changes = 0, corrections = 0, valence = 0, frustration = 0;
  for (const EpisodeResult& episode : episodes) {
    switch (episode.outcome) {
      case Outcome::Solved: ++solved; break;
      case Outcome::Abandoned: ++abandoned; break;
      case Outcome::StepCapReached: ++capped; break;
    }
    steps += episode.steps;
    changes += episode.plan_changes;
    corrections += episode.corrections;
    valence += episode.final_emotion.valence;
    frustration += episode.final_emotion.frustration;
  }
  const double n = static_cast<double>(summary.episodes);
  summary.solve_rate = solved / n;
  summary.abandon_rate = abandoned / n;
  summary.stepcap_rate = capped / n;
  summary.mean_steps = steps / n;
  summary.mean_plan_changes = changes / n;
  summary.mean_corrections = corrections / n;
  summary.mean_final_valence = valence / n;
  summary.mean_final_frustration = frustration / n;
  return summary;
}

BatchResult run_batch(const SimConfig& config, int jobs) {
  if (jobs < 1) throw ConfigError("jobs: must be >= 1");
  const int n = config.episodes;

  BatchResult result;
  result.episodes.resize(static_cast<std::size_t>(n));
  result.traces.resize(static_cast<std::size_t>(n));

  std::atomic<int> next{0};
  std::mutex failure_mutex;
  std::optional<EpisodeFailure> failure;

  const auto record_failure = [&](int index) {
    const std::lock_guard<std::mutex> lock(failure_mutex);
    if (!failure || index < failure->index) failure = {index, std::current_exception()};
  };

  // Episode i is a pure function of (config, i): the derived seed feeds both
  // instance generation and the agent stream, and workers write to disjoint
  // slots, so scheduling cannot change the output.
  const auto worker = [&] {
    for (;;) {
      const int index = next.fetch_add(1);
      if (index >= n) return;
      try {
        const std::uint64_t seed =
            derive_episode_seed(config.master_seed, static_cast<std::uint64_t>(index));
        Puzzle puzzle;
        if (config.generate) {
          SplitMix64 generation_rng(seed);
          puzzle = generate_puzzle(config.generate->rows, config.generate->vmax,
                                   config.generate->require_subtraction, generation_rng);
        } else {
          puzzle = *config.puzzle;
        }
        auto [episode, trace] = run_episode(episode_config(config, puzzle), seed);
        result.episodes[static_cast<std::size_t>(index)] = episode;
        result.traces[static_cast<std::size_t>(index)] = std::move(trace);
      } catch (...) {
        record_failure(index);
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (std::thread& thread : pool) thread.join();
  }

  if (failure) {
    const std::string prefix = "episode " + std::to_string(failure->index) + ": ";
    try {
      std::rethrow_exception(failure->error);
    } catch (const GenerationError& e) {
      throw GenerationError(prefix + e.what());
    } catch (const UnsatisfiablePuzzleError& e) {
      throw UnsatisfiablePuzzleError(prefix + e.what());
    } catch (const Error& e) {
      throw Error(prefix + e.what());
    }
  }

  result.summary = summarize(result.episodes);
  return result;
}

}  // namespace cascade::sim
