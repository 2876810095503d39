#include "cascade/trace_io.hpp"

#include <charconv>

#include "cascade/appraisal.hpp"

namespace cascade {

std::string format_double(double value) {
  char buffer[32];
  const std::to_chars_result result = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, result.ptr);
}

namespace {

void append_move(std::string& out, const std::optional<Move>& move) {
  if (!move) {
    out += "null";
    return;
  }
  out += "{\"row\":";
  out += std::to_string(move->target.row);
  out += ",\"col\":";
  out += std::to_string(move->target.col);
  out += ",\"value\":";
  out += std::to_string(move->value);
  out += ",\"rule\":\"";
  out += rule_name(move->rule);
  out += "\"}";
}

void append_fields(std::string& out, const TraceEvent& event) {
  out += "\"t\":";
  out += std::to_string(event.t);
  out += ",\"plan\":\"";
  out += event.plan;
  out += "\",\"appraisal\":\"";
  out += appraisal_name(event.appraisal);
  out += "\",\"move\":";
  append_move(out, event.move);
  out += ",\"action\":\"";
  out += action_name(event.action);
  out += "\",\"valence\":";
  out += format_double(event.valence);
  out += ",\"frustration\":";
  out += format_double(event.frustration);
  out += ",\"slipped\":";
  out += event.slipped ? "true" : "false";
}

}  // namespace

std::string trace_line(const TraceEvent& event) {
  std::string out = "{";
  append_fields(out, event);
  out += "}";
  return out;
}

std::string trace_line(const TraceEvent& event, int episode) {
  std::string out = "{\"episode\":";
  out += std::to_string(episode);
  out += ",";
  append_fields(out, event);
  out += "}";
  return out;
}

std::string trace_jsonl(const std::vector<TraceEvent>& trace) {
  std::string out;
  for (const TraceEvent& event : trace) {
    out += trace_line(event);
    out += '\n';
  }
  return out;
}

}  // namespace cascade
