#include "cascade/puzzle_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cascade {

std::string puzzle_to_json(const Puzzle& puzzle) {
  nlohmann::ordered_json doc;
  doc["rows"] = puzzle.grid.rows();
  nlohmann::ordered_json cells = nlohmann::ordered_json::array();
  for (int r = 0; r < puzzle.grid.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int i = 0; i < puzzle.grid.row_size(r); ++i) {
      const CellState& cell = puzzle.grid.at({r, i});
      if (cell.is_blank())
        row.push_back(nullptr);
      else
        row.push_back(cell.value);
    }
    cells.push_back(std::move(row));
  }
  doc["cells"] = std::move(cells);
  doc["vmax"] = puzzle.vmax;
  doc["requires_subtraction"] = puzzle.requires_subtraction;
  return doc.dump();
}

Puzzle puzzle_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("puzzle: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("puzzle: expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (key != "rows" && key != "cells" && key != "vmax" && key != "requires_subtraction")
      throw ConfigError("puzzle: unknown key \"" + key + "\"");
  if (!doc.contains("rows") || !doc["rows"].is_number_integer())
    throw ConfigError("puzzle.rows: expected an integer");
  const int rows = doc["rows"].get<int>();
  if (rows < 1) throw ConfigError("puzzle.rows: must be >= 1");
  if (!doc.contains("cells") || !doc["cells"].is_array())
    throw ConfigError("puzzle.cells: expected an array of rows");
  const auto& cells = doc["cells"];
  if (static_cast<int>(cells.size()) != rows)
    throw ConfigError("puzzle.cells: expected " + std::to_string(rows) + " rows");

  Puzzle puzzle;
  puzzle.grid = Grid(rows);
  for (int r = 0; r < rows; ++r) {
    const auto& row = cells[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != rows - r)
      throw ConfigError("puzzle.cells[" + std::to_string(r) + "]: expected " +
                        std::to_string(rows - r) + " entries");
    for (int i = 0; i < rows - r; ++i) {
      const auto& entry = row[static_cast<std::size_t>(i)];
      if (entry.is_null()) continue;
      if (!entry.is_number_integer())
        throw ConfigError("puzzle.cells[" + std::to_string(r) + "][" + std::to_string(i) +
                          "]: expected an integer or null");
      puzzle.grid.at({r, i}) = CellState::given(entry.get<int>());
    }
  }

  if (doc.contains("vmax")) {
    if (!doc["vmax"].is_number_integer() || doc["vmax"].get<int>() < 0)
      throw ConfigError("puzzle.vmax: expected an integer >= 0");
    puzzle.vmax = doc["vmax"].get<int>();
  }
  if (doc.contains("requires_subtraction")) {
    if (!doc["requires_subtraction"].is_boolean())
      throw ConfigError("puzzle.requires_subtraction: expected a boolean");
    puzzle.requires_subtraction = doc["requires_subtraction"].get<bool>();
  }
  return puzzle;
}

Puzzle load_puzzle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read puzzle file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return puzzle_from_json(buffer.str());
}

void save_puzzle(const Puzzle& puzzle, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << puzzle_to_json(puzzle) << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

}  // namespace cascade
