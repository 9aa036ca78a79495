#pragma once

// Young diagram combinatorics: hooks, contents, the hook-length and Stanley
// counting formulas, exhaustive enumeration of standard and semistandard
// fillings, and counting of standard k-connexes.

#include <vector>

#include "plucker/rational.hpp"

namespace plucker {

/// Weakly decreasing positive row lengths.
class Shape {
 public:
  Shape() = default;
  /// Throws std::invalid_argument for non-monotone or non-positive rows.
  explicit Shape(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int size() const;
  int column_height(int col) const;  // 1-based column
  bool contains(int row, int col) const;

  Shape conjugate() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<int> rows_;
};

/// 1-based cell coordinates.
struct Cell {
  int row;
  int col;
};

/// Cells listed row by row.
struct Filling {
  Shape shape;
  std::vector<std::vector<int>> entries;

  friend bool operator==(const Filling&, const Filling&) = default;
  friend auto operator<=>(const Filling& a, const Filling& b) { return a.entries <=> b.entries; }
};

/// Columns strictly increase downward and rows weakly increase.
bool is_semistandard(const Filling& f);
/// Entries are exactly 1..|λ|, rows and columns strictly increase.
bool is_standard(const Filling& f);

/// Arm + leg + 1. Throws std::out_of_range for cells outside the shape.
int hook(const Shape& s, Cell cell);

inline int cell_content(Cell cell) { return cell.col - cell.row; }

/// |λ|! / Π hooks.
Integer count_standard(const Shape& s);

/// Π (n + content) / Π hooks; zero when n is below the first column height.
Integer count_semistandard(const Shape& s, int n);

std::vector<Filling> enumerate_standard(const Shape& s);
std::vector<Filling> enumerate_semistandard(const Shape& s, int n);

/// Standard k-connexes of type (l_1 >= ... >= l_k) with letters 1..n. The
/// tableau of a connex has one column per minor factor; its row i has l_i
/// cells, so the count is the semistandard count of the shape (l_1, ..., l_k).
Integer count_standard_connexes(const std::vector<int>& type, int n);

}  // namespace plucker
