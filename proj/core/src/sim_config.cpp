#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cascade/sim.hpp"
#include "cascade/trace_io.hpp"

namespace cascade::sim {
namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::string& scope,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    bool known = false;
    for (const char* name : allowed)
      if (key == name) {
        known = true;
        break;
      }
    if (!known) throw ConfigError(scope + ": unknown key \"" + key + "\"");
  }
}

// `key` indexes the object; `label` is the dotted field name used in errors.
int read_int(const json& object, const char* key, const std::string& label, int fallback,
             int min_value) {
  if (!object.contains(key)) return fallback;
  const auto& value = object[key];
  if (!value.is_number_integer()) throw ConfigError(label + ": expected an integer");
  const int result = value.get<int>();
  if (result < min_value) throw ConfigError(label + ": must be >= " + std::to_string(min_value));
  return result;
}

double read_real(const json& object, const char* key, const std::string& label, double fallback,
                 double min_value, double max_value, bool min_exclusive = false) {
  if (!object.contains(key)) return fallback;
  const auto& value = object[key];
  if (!value.is_number()) throw ConfigError(label + ": expected a number");
  const double result = value.get<double>();
  const bool too_low = min_exclusive ? result <= min_value : result < min_value;
  if (too_low || result > max_value)
    throw ConfigError(label + ": must be in " + (min_exclusive ? "(" : "[") +
                      format_double(min_value) + ", " + format_double(max_value) + "]");
  return result;
}

bool read_bool(const json& object, const char* key, const std::string& label, bool fallback) {
  if (!object.contains(key)) return fallback;
  const auto& value = object[key];
  if (!value.is_boolean()) throw ConfigError(label + ": expected a boolean");
  return value.get<bool>();
}

EmotionParams read_emotion(const json& doc) {
  EmotionParams params;
  if (!doc.contains("emotion")) return params;
  const auto& emotion = doc["emotion"];
  if (!emotion.is_object()) throw ConfigError("emotion: expected an object");
  reject_unknown_keys(emotion, "emotion",
                      {"lambda", "delta_pos", "delta_err", "delta_imp", "delta_solve",
                       "phi_err", "phi_imp", "phi_change"});
  constexpr double kMagnitudeCap = 1e9;  // deltas/phis only need to be >= 0
  params.lambda = read_real(emotion, "lambda", "emotion.lambda", params.lambda, 0.0, 1.0, true);
  params.delta_pos =
      read_real(emotion, "delta_pos", "emotion.delta_pos", params.delta_pos, 0.0, kMagnitudeCap);
  params.delta_err =
      read_real(emotion, "delta_err", "emotion.delta_err", params.delta_err, 0.0, kMagnitudeCap);
  params.delta_imp =
      read_real(emotion, "delta_imp", "emotion.delta_imp", params.delta_imp, 0.0, kMagnitudeCap);
  params.delta_solve = read_real(emotion, "delta_solve", "emotion.delta_solve",
                                 params.delta_solve, 0.0, kMagnitudeCap);
  params.phi_err =
      read_real(emotion, "phi_err", "emotion.phi_err", params.phi_err, 0.0, kMagnitudeCap);
  params.phi_imp =
      read_real(emotion, "phi_imp", "emotion.phi_imp", params.phi_imp, 0.0, kMagnitudeCap);
  params.phi_change = read_real(emotion, "phi_change", "emotion.phi_change", params.phi_change,
                                0.0, kMagnitudeCap);
  return params;
}

}  // namespace

Repertoire resolve_repertoire(const std::vector<std::string>& names) {
  if (names.empty()) throw ConfigError("repertoire: must name at least one plan");
  Repertoire repertoire;
  for (const std::string& name : names) {
    const auto& plans = builtin_plans();
    const auto it = plans.find(name);
    if (it == plans.end()) throw ConfigError("repertoire: unknown plan \"" + name + "\"");
    for (const Plan& existing : repertoire.plans)
      if (existing.name == name)
        throw ConfigError("repertoire: duplicate plan \"" + name + "\"");
    repertoire.plans.push_back(it->second);
  }
  return repertoire;
}

SimConfig parse_config_text(const std::string& text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: expected a JSON object");
  reject_unknown_keys(doc, "config",
                      {"generate", "puzzle", "repertoire", "p_slip", "emotion", "coping",
                       "step_cap", "episodes", "master_seed"});

  SimConfig config;

  const bool has_generate = doc.contains("generate");
  const bool has_puzzle = doc.contains("puzzle");
  if (has_generate == has_puzzle)
    throw ConfigError("config: exactly one of \"generate\" or \"puzzle\" is required");

  if (has_generate) {
    const auto& generate = doc["generate"];
    if (!generate.is_object()) throw ConfigError("generate: expected an object");
    reject_unknown_keys(generate, "generate", {"rows", "vmax", "require_subtraction"});
    if (!generate.contains("rows")) throw ConfigError("generate.rows: required");
    GenerateSpec spec;
    spec.rows = read_int(generate, "rows", "generate.rows", 0, 2);
    spec.vmax = read_int(generate, "vmax", "generate.vmax", 9, 1);
    spec.require_subtraction =
        read_bool(generate, "require_subtraction", "generate.require_subtraction", false);
    config.generate = spec;
  } else {
    const auto& puzzle = doc["puzzle"];
    if (!puzzle.is_string()) throw ConfigError("puzzle: expected a file path string");
    std::filesystem::path path = puzzle.get<std::string>();
    if (path.is_relative()) path = base_dir / path;
    try {
      config.puzzle = load_puzzle(path);
    } catch (const IoError& e) {
      throw ConfigError(std::string("puzzle: ") + e.what());
    }
  }

  if (doc.contains("repertoire")) {
    const auto& repertoire = doc["repertoire"];
    if (!repertoire.is_array() || repertoire.empty())
      throw ConfigError("repertoire: expected a non-empty array of plan names");
    config.repertoire.clear();
    for (const auto& entry : repertoire) {
      if (!entry.is_string()) throw ConfigError("repertoire: entries must be strings");
      config.repertoire.push_back(entry.get<std::string>());
    }
  }
  resolve_repertoire(config.repertoire);  // validate names now

  config.p_slip = read_real(doc, "p_slip", "p_slip", 0.0, 0.0, 1.0);
  config.emotion = read_emotion(doc);

  if (doc.contains("coping")) {
    const auto& coping = doc["coping"];
    if (!coping.is_object()) throw ConfigError("coping: expected an object");
    reject_unknown_keys(coping, "coping", {"theta_abandon", "max_changes"});
    config.coping.theta_abandon =
        read_real(coping, "theta_abandon", "coping.theta_abandon", 1.0, 0.0, 1.0, true);
    config.max_changes = read_int(coping, "max_changes", "coping.max_changes", 3, 0);
  }

  config.step_cap = read_int(doc, "step_cap", "step_cap", 200, 1);
  config.episodes = read_int(doc, "episodes", "episodes", 1, 1);

  if (doc.contains("master_seed")) {
    const auto& seed = doc["master_seed"];
    const bool negative =
        seed.is_number_integer() && !seed.is_number_unsigned() && seed.get<std::int64_t>() < 0;
    if (!seed.is_number_integer() || negative)
      throw ConfigError("master_seed: expected a non-negative integer");
    config.master_seed = seed.get<std::uint64_t>();
  }

  return config;
}

SimConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config: cannot read file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str(), path.has_parent_path() ? path.parent_path()
                                                                : std::filesystem::path("."));
}

EpisodeConfig episode_config(const SimConfig& config, const Puzzle& puzzle) {
  EpisodeConfig episode;
  episode.puzzle = puzzle;
  episode.repertoire = resolve_repertoire(config.repertoire);
  episode.emotion_params = config.emotion;
  episode.coping_params = config.coping;
  episode.max_changes = config.max_changes;
  episode.p_slip = config.p_slip;
  episode.step_cap = config.step_cap;
  return episode;
}

}  // namespace cascade::sim
