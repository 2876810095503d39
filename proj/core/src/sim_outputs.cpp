#include <algorithm>
#include <fstream>

#include "cascade/sim.hpp"
#include "cascade/trace_io.hpp"

namespace cascade::sim {
namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << content;
  if (!out) throw IoError("write failed: " + path.string());
}

std::filesystem::path episode_path(const std::filesystem::path& base, int episode) {
  std::filesystem::path path = base;
  const std::string stem = path.stem().string();
  const std::string extension = path.extension().string();
  path.replace_filename(stem + "_ep" + std::to_string(episode) + extension);
  return path;
}

}  // namespace

std::string summary_csv(const BatchSummary& summary) {
  std::string out =
      "episodes,solve_rate,abandon_rate,stepcap_rate,mean_steps,mean_plan_changes,"
      "mean_corrections,mean_final_valence,mean_final_frustration\n";
  out += std::to_string(summary.episodes);
  out += ',';
  out += format_double(summary.solve_rate);
  out += ',';
  out += format_double(summary.abandon_rate);
  out += ',';
  out += format_double(summary.stepcap_rate);
  out += ',';
  out += format_double(summary.mean_steps);
  out += ',';
  out += format_double(summary.mean_plan_changes);
  out += ',';
  out += format_double(summary.mean_corrections);
  out += ',';
  out += format_double(summary.mean_final_valence);
  out += ',';
  out += format_double(summary.mean_final_frustration);
  out += '\n';
  return out;
}

std::string trajectory_csv(const std::vector<std::vector<TraceEvent>>& traces) {
  std::string out = "step,mean_valence,mean_frustration,n_active\n";
  std::size_t longest = 0;
  for (const auto& trace : traces) longest = std::max(longest, trace.size());

  // Row k averages the episodes whose trace still has a step k; finished
  // episodes drop out instead of padding the means with terminal values.
  for (std::size_t k = 0; k < longest; ++k) {
    double valence = 0.0;
    double frustration = 0.0;
    int active = 0;
    for (const auto& trace : traces) {
      if (trace.size() <= k) continue;
      valence += trace[k].valence;
      frustration += trace[k].frustration;
      ++active;
    }
    out += std::to_string(k);
    out += ',';
    out += format_double(valence / active);
    out += ',';
    out += format_double(frustration / active);
    out += ',';
    out += std::to_string(active);
    out += '\n';
  }
  return out;
}

std::string concatenated_traces(const std::vector<std::vector<TraceEvent>>& traces) {
  std::string out;
  for (std::size_t episode = 0; episode < traces.size(); ++episode) {
    for (const TraceEvent& event : traces[episode]) {
      out += trace_line(event, static_cast<int>(episode));
      out += '\n';
    }
  }
  return out;
}

void write_outputs(const BatchResult& result, const OutputPaths& paths) {
  if (paths.traces) {
    if (paths.split_traces) {
      for (std::size_t episode = 0; episode < result.traces.size(); ++episode)
        write_file(episode_path(*paths.traces, static_cast<int>(episode)),
                   trace_jsonl(result.traces[episode]));
    } else {
      write_file(*paths.traces, concatenated_traces(result.traces));
    }
  }
  if (paths.summary) write_file(*paths.summary, summary_csv(result.summary));
  if (paths.trajectories) write_file(*paths.trajectories, trajectory_csv(result.traces));
}

}  // namespace cascade::sim
