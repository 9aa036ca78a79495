#include "plucker/tableaux.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "plucker/combinatorics.hpp"

namespace plucker {

Shape::Shape(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw std::invalid_argument("row lengths must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw std::invalid_argument("row lengths must weakly decrease");
  }
}

int Shape::size() const { return std::accumulate(rows_.begin(), rows_.end(), 0); }

int Shape::column_height(int col) const {
  int h = 0;
  for (int len : rows_) {
    if (len >= col) ++h;
  }
  return h;
}

bool Shape::contains(int row, int col) const {
  return row >= 1 && row <= row_count() && col >= 1 && col <= rows_[static_cast<std::size_t>(row - 1)];
}

Shape Shape::conjugate() const {
  std::vector<int> cols;
  if (!rows_.empty()) {
    for (int c = 1; c <= rows_.front(); ++c) cols.push_back(column_height(c));
  }
  return Shape(std::move(cols));
}

bool is_semistandard(const Filling& f) {
  const auto& rows = f.shape.rows();
  if (f.entries.size() != rows.size()) return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (f.entries[r].size() != static_cast<std::size_t>(rows[r])) return false;
    for (std::size_t c = 0; c < f.entries[r].size(); ++c) {
      if (f.entries[r][c] < 1) return false;
      if (c > 0 && f.entries[r][c - 1] > f.entries[r][c]) return false;
      if (r > 0 && f.entries[r - 1][c] >= f.entries[r][c]) return false;
    }
  }
  return true;
}

bool is_standard(const Filling& f) {
  if (!is_semistandard(f)) return false;
  const int total = f.shape.size();
  std::vector<bool> seen(static_cast<std::size_t>(total) + 1, false);
  for (const auto& row : f.entries) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const int e = row[c];
      if (e > total || seen[static_cast<std::size_t>(e)]) return false;
      seen[static_cast<std::size_t>(e)] = true;
      if (c > 0 && row[c - 1] == e) return false;
    }
  }
  return true;
}

int hook(const Shape& s, Cell cell) {
  if (!s.contains(cell.row, cell.col)) throw std::out_of_range("cell outside the shape");
  const int arm = s.rows()[static_cast<std::size_t>(cell.row - 1)] - cell.col;
  const int leg = s.column_height(cell.col) - cell.row;
  return arm + leg + 1;
}

namespace {

Integer hook_product(const Shape& s) {
  Integer p = 1;
  for (int r = 1; r <= s.row_count(); ++r) {
    for (int c = 1; c <= s.rows()[static_cast<std::size_t>(r - 1)]; ++c) p *= hook(s, {r, c});
  }
  return p;
}

}  // namespace

Integer count_standard(const Shape& s) {
  return factorial(static_cast<unsigned>(s.size())) / hook_product(s);
}

Integer count_semistandard(const Shape& s, int n) {
  if (n < s.row_count()) return 0;
  Integer num = 1;
  for (int r = 1; r <= s.row_count(); ++r) {
    for (int c = 1; c <= s.rows()[static_cast<std::size_t>(r - 1)]; ++c) num *= n + cell_content({r, c});
  }
  return num / hook_product(s);
}

std::vector<Filling> enumerate_standard(const Shape& s) {
  std::vector<Filling> out;
  Filling current{s, {}};
  for (int len : s.rows()) current.entries.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<int> filled(static_cast<std::size_t>(s.row_count()), 0);
  const int total = s.size();

  // Place 1, 2, ... successively at addable corners.
  std::function<void(int)> rec = [&](int next) {
    if (next > total) {
      out.push_back(current);
      return;
    }
    for (int r = 0; r < s.row_count(); ++r) {
      const auto ru = static_cast<std::size_t>(r);
      if (filled[ru] == s.rows()[ru]) continue;
      if (r > 0 && filled[ru - 1] <= filled[ru]) continue;
      current.entries[ru][static_cast<std::size_t>(filled[ru])] = next;
      ++filled[ru];
      rec(next + 1);
      --filled[ru];
      current.entries[ru][static_cast<std::size_t>(filled[ru])] = 0;
    }
  };
  rec(1);
  return out;
}

std::vector<Filling> enumerate_semistandard(const Shape& s, int n) {
  std::vector<Filling> out;
  Filling current{s, {}};
  for (int len : s.rows()) current.entries.emplace_back(static_cast<std::size_t>(len), 0);
  std::vector<Cell> cells;
  for (int r = 1; r <= s.row_count(); ++r) {
    for (int c = 1; c <= s.rows()[static_cast<std::size_t>(r - 1)]; ++c) cells.push_back({r, c});
  }

  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      out.push_back(current);
      return;
    }
    const auto r = static_cast<std::size_t>(cells[i].row - 1);
    const auto c = static_cast<std::size_t>(cells[i].col - 1);
    int low = 1;
    if (c > 0) low = std::max(low, current.entries[r][c - 1]);
    if (r > 0) low = std::max(low, current.entries[r - 1][c] + 1);
    // leave room for the cells below in this column
    const int high = n - (s.column_height(cells[i].col) - cells[i].row);
    for (int v = low; v <= high; ++v) {
      current.entries[r][c] = v;
      rec(i + 1);
    }
    current.entries[r][c] = 0;
  };
  rec(0);
  return out;
}

Integer count_standard_connexes(const std::vector<int>& type, int n) {
  if (type.empty()) throw std::invalid_argument("connex type must be nonempty");
  if (n < 1) throw std::invalid_argument("alphabet size must be positive");
  return count_semistandard(Shape(type), n);
}

}  // namespace plucker
