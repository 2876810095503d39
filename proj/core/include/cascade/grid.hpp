#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cascade/errors.hpp"

namespace cascade {

/// Position in a triangular grid. Row 0 is the top (widest) row; in a grid
/// with R rows, row r holds exactly R - r cells.
struct CellPos {
  int row = 0;
  int col = 0;

  friend bool operator==(const CellPos&, const CellPos&) = default;
  friend std::strong_ordering operator<=>(const CellPos&, const CellPos&) = default;
};

std::string to_string(CellPos pos);

enum class CellKind : std::uint8_t { Blank, Given, Filled };

/// One cell: part of the puzzle statement (Given), written by the agent
/// (Filled, stamped with a monotone fill sequence number), or empty.
struct CellState {
  CellKind kind = CellKind::Blank;
  int value = 0;               // valid when kind != Blank
  std::uint64_t fill_seq = 0;  // valid when kind == Filled

  static CellState blank() { return {}; }
  static CellState given(int v) { return {CellKind::Given, v, 0}; }
  static CellState filled(int v, std::uint64_t seq) { return {CellKind::Filled, v, seq}; }

  bool is_blank() const { return kind == CellKind::Blank; }
  bool is_given() const { return kind == CellKind::Given; }
  bool is_filled() const { return kind == CellKind::Filled; }

  friend bool operator==(const CellState&, const CellState&) = default;
};

enum class GridStatus { Solved, Incomplete, Inconsistent };

/// Triangular grid. Every cell (r, i) with r >= 1 is constrained to equal
/// (r-1, i) + (r-1, i+1). Value semantics throughout: the mutating
/// operations below take a grid and return a new one.
class Grid {
 public:
  Grid() = default;
  explicit Grid(int rows);  // all-blank triangle; rows >= 1

  int rows() const { return static_cast<int>(rows_.size()); }
  int row_size(int row) const { return rows() - row; }
  bool in_range(CellPos pos) const {
    return pos.row >= 0 && pos.row < rows() && pos.col >= 0 && pos.col < row_size(pos.row);
  }

  const CellState& at(CellPos pos) const;
  CellState& at(CellPos pos);

  int blank_count() const;
  std::uint64_t max_fill_seq() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::vector<std::vector<CellState>> rows_;
};

/// The unique complete grid whose top row is `values`; every lower cell is
/// Given as the sum of its two parents. Throws GridError on an empty list.
Grid from_top_row(const std::vector<int>& values);

/// Writes Filled(value, seq) at `pos`. The target must be Blank; given cells
/// are never overwritten and a filled cell must be cleared first.
Grid set_cell(Grid grid, CellPos pos, int value, std::uint64_t seq);

/// Blanks a Filled cell (the erase half of a correction). Given and Blank
/// targets are errors.
Grid clear_cell(Grid grid, CellPos pos);

/// Child positions (r, i), r >= 1, whose triple is fully known and violates
/// child = parentL + parentR, in row-major order. Triples with any blank
/// member are never reported.
std::vector<CellPos> violated_constraints(const Grid& grid);

/// Inconsistent when any constraint is violated (takes precedence), Solved
/// when complete and consistent, Incomplete otherwise.
GridStatus status(const Grid& grid);

/// Same shape and same per-cell values, ignoring the Given/Filled
/// distinction; blanks match only blanks.
bool values_equal(const Grid& a, const Grid& b);

/// Plain-text rendering: one line per row, blanks as '_'.
std::string to_text(const Grid& grid);

}  // namespace cascade
