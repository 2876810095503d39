#pragma once

#include <string>
#include <vector>

#include "cascade/agent.hpp"

namespace cascade {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);

/// One JSONL record with fixed field order:
/// {"t":..,"plan":..,"appraisal":..,"move":..,"action":..,"valence":..,
///  "frustration":..,"slipped":..}
/// The move object, when present: {"row":..,"col":..,"value":..,"rule":".."}.
std::string trace_line(const TraceEvent& event);

/// Same record with a leading "episode" field, for concatenated batch traces.
std::string trace_line(const TraceEvent& event, int episode);

/// One line per event, each terminated with '\n'.
std::string trace_jsonl(const std::vector<TraceEvent>& trace);

}  // namespace cascade
