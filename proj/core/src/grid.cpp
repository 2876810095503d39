#include "cascade/grid.hpp"

#include <algorithm>
#include <utility>

namespace cascade {

std::string to_string(CellPos pos) {
  return "(" + std::to_string(pos.row) + ", " + std::to_string(pos.col) + ")";
}

Grid::Grid(int rows) {
  if (rows < 1) throw GridError("grid must have at least one row");
  rows_.resize(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    rows_[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(rows - r),
                                              CellState::blank());
  }
}

const CellState& Grid::at(CellPos pos) const {
  if (!in_range(pos)) throw GridError("cell " + to_string(pos) + " out of range");
  return rows_[static_cast<std::size_t>(pos.row)][static_cast<std::size_t>(pos.col)];
}

CellState& Grid::at(CellPos pos) {
  if (!in_range(pos)) throw GridError("cell " + to_string(pos) + " out of range");
  return rows_[static_cast<std::size_t>(pos.row)][static_cast<std::size_t>(pos.col)];
}

int Grid::blank_count() const {
  int count = 0;
  for (const auto& row : rows_)
    count += static_cast<int>(std::count_if(row.begin(), row.end(),
                                            [](const CellState& c) { return c.is_blank(); }));
  return count;
}

std::uint64_t Grid::max_fill_seq() const {
  std::uint64_t seq = 0;
  for (const auto& row : rows_)
    for (const CellState& cell : row)
      if (cell.is_filled()) seq = std::max(seq, cell.fill_seq);
  return seq;
}

Grid from_top_row(const std::vector<int>& values) {
  if (values.empty()) throw GridError("from_top_row: top row must be non-empty");
  Grid grid(static_cast<int>(values.size()));
  for (int i = 0; i < grid.rows(); ++i)
    grid.at({0, i}) = CellState::given(values[static_cast<std::size_t>(i)]);
  for (int r = 1; r < grid.rows(); ++r)
    for (int i = 0; i < grid.row_size(r); ++i)
      grid.at({r, i}) =
          CellState::given(grid.at({r - 1, i}).value + grid.at({r - 1, i + 1}).value);
  return grid;
}

Grid set_cell(Grid grid, CellPos pos, int value, std::uint64_t seq) {
  const CellState& cell = grid.at(pos);  // range check
  if (cell.is_given()) throw GridError("set_cell: " + to_string(pos) + " is a given cell");
  if (cell.is_filled()) throw GridError("set_cell: " + to_string(pos) + " is already filled");
  grid.at(pos) = CellState::filled(value, seq);
  return grid;
}

Grid clear_cell(Grid grid, CellPos pos) {
  const CellState& cell = grid.at(pos);
  if (!cell.is_filled())
    throw GridError("clear_cell: " + to_string(pos) + " is not an agent-filled cell");
  grid.at(pos) = CellState::blank();
  return grid;
}

std::vector<CellPos> violated_constraints(const Grid& grid) {
  std::vector<CellPos> violated;
  for (int r = 1; r < grid.rows(); ++r) {
    for (int i = 0; i < grid.row_size(r); ++i) {
      const CellState& child = grid.at({r, i});
      const CellState& left = grid.at({r - 1, i});
      const CellState& right = grid.at({r - 1, i + 1});
      if (child.is_blank() || left.is_blank() || right.is_blank()) continue;
      if (child.value != left.value + right.value) violated.push_back({r, i});
    }
  }
  return violated;
}

GridStatus status(const Grid& grid) {
  if (!violated_constraints(grid).empty()) return GridStatus::Inconsistent;
  return grid.blank_count() == 0 ? GridStatus::Solved : GridStatus::Incomplete;
}

bool values_equal(const Grid& a, const Grid& b) {
  if (a.rows() != b.rows()) return false;
  for (int r = 0; r < a.rows(); ++r) {
    for (int i = 0; i < a.row_size(r); ++i) {
      const CellState& ca = a.at({r, i});
      const CellState& cb = b.at({r, i});
      if (ca.is_blank() != cb.is_blank()) return false;
      if (!ca.is_blank() && ca.value != cb.value) return false;
    }
  }
  return true;
}

std::string to_text(const Grid& grid) {
  std::string out;
  for (int r = 0; r < grid.rows(); ++r) {
    for (int i = 0; i < grid.row_size(r); ++i) {
      if (i > 0) out += ' ';
      const CellState& cell = grid.at({r, i});
      out += cell.is_blank() ? "_" : std::to_string(cell.value);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cascade
