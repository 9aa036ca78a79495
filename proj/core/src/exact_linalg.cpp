#include "plucker/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace plucker {

RMatrix::RMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

RMatrix RMatrix::from_rows(const std::vector<RVector>& rows, std::size_t cols) {
  RMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

const Rational& RMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
  return (*this)(r, c);
}

bool RMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

EchelonForm row_echelon(const RMatrix& m) {
  EchelonForm out{m, {}};
  RMatrix& a = out.reduced;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t best = a.rows();
    Rational best_abs;
    for (std::size_t r = pivot_row; r < a.rows(); ++r) {
      if (sgn(a(r, col)) == 0) continue;
      Rational mag = abs(a(r, col));
      if (best == a.rows() || mag > best_abs) {
        best = r;
        best_abs = mag;
      }
    }
    if (best == a.rows()) continue;
    if (best != pivot_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(best, c), a(pivot_row, c));
    }
    const Rational inv = 1 / a(pivot_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(pivot_row, c);
    }
    out.pivot_columns.push_back(col);
    ++pivot_row;
  }
  return out;
}

std::size_t rank(const RMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return row_echelon(m).pivot_columns.size();
}

std::vector<RVector> nullspace_basis(const RMatrix& m) {
  const EchelonForm e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<RVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RVector x(m.cols());
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      x[e.pivot_columns[i]] = -e.reduced(i, free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational determinant(const RMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  RMatrix a = m;
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && sgn(a(p, col)) == 0) ++p;
    if (p == n) return 0;
    if (p != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    const Rational inv = 1 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      const Rational factor = a(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

RVector multiply(const RMatrix& m, std::span<const Rational> x) {
  if (x.size() != m.cols()) throw std::invalid_argument("dimension mismatch in multiply");
  RVector y(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) y[r] += m(r, c) * x[c];
  }
  return y;
}

std::optional<RankOneFactor> rank_one_factor(const RMatrix& m) {
  if (rank(m) != 1) return std::nullopt;

  if (m.is_symmetric()) {
    std::size_t p = 0;
    while (p < m.rows() && sgn(m(p, p)) == 0) ++p;
    // A symmetric rank-one matrix always has a nonzero diagonal entry.
    const Rational d = m(p, p);
    RankOneFactor f{RVector(m.rows()), RVector(m.cols())};
    for (std::size_t i = 0; i < m.rows(); ++i) {
      f.row[i] = m(i, p) / d;
      f.column[i] = m(i, p);
    }
    return f;
  }

  std::size_t pr = 0, pc = 0;
  [&] {
    for (pr = 0; pr < m.rows(); ++pr) {
      for (pc = 0; pc < m.cols(); ++pc) {
        if (sgn(m(pr, pc)) != 0) return;
      }
    }
  }();
  RankOneFactor f{RVector(m.rows()), RVector(m.cols())};
  for (std::size_t c = 0; c < m.cols(); ++c) f.row[c] = m(pr, c);
  for (std::size_t r = 0; r < m.rows(); ++r) f.column[r] = m(r, pc) / m(pr, pc);
  return f;
}

std::optional<RVector> symmetric_square_root(const RMatrix& m) {
  if (!m.is_symmetric()) return std::nullopt;
  auto f = rank_one_factor(m);
  if (!f) return std::nullopt;
  std::size_t p = 0;
  while (sgn(m(p, p)) == 0) ++p;
  const auto root = rational_sqrt(m(p, p));
  if (!root) return std::nullopt;
  RVector u(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) u[i] = f->row[i] * *root;
  return u;
}

namespace {

std::vector<Integer> to_integer_row(std::span<const Rational> row) {
  Integer common = 1;
  for (const auto& q : row) {
    if (q.get_den() != 1) common = lcm(common, q.get_den());
  }
  std::vector<Integer> out(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) {
    out[i] = row[i].get_num() * (common / row[i].get_den());
  }
  return out;
}

void divide_content(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (sgn(x) != 0) {
      g = gcd(g, x);
      if (g == 1) return;
    }
  }
  if (g <= 1) return;
  for (auto& x : v) x /= g;
}

}  // namespace

IVector integer_row(std::span<const Rational> v) { return to_integer_row(v); }

std::vector<Integer> RowSpace::reduce(std::span<const Rational> row) const {
  if (row.size() != dimension_) throw std::invalid_argument("row dimension mismatch");
  std::vector<Integer> v = to_integer_row(row);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (sgn(v[p]) == 0) continue;
    const std::vector<Integer>& b = basis_[i];
    const Integer g = gcd(b[p], v[p]);
    const Integer bv = b[p] / g;
    const Integer vv = v[p] / g;
    for (std::size_t c = 0; c < dimension_; ++c) {
      v[c] = bv * v[c] - vv * b[c];
    }
    divide_content(v);
  }
  return v;
}

bool RowSpace::insert(std::span<const Rational> row) {
  std::vector<Integer> v = reduce(row);
  std::size_t p = 0;
  while (p < dimension_ && sgn(v[p]) == 0) ++p;
  if (p == dimension_) return false;
  divide_content(v);
  basis_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool RowSpace::contains(std::span<const Rational> row) const {
  const std::vector<Integer> v = reduce(row);
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RVector primitive_integer_vector(std::span<const Rational> v) {
  std::vector<Integer> ints = to_integer_row(v);
  divide_content(ints);
  RVector out(v.size());
  int lead = 0;
  for (const auto& x : ints) {
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  }
  for (std::size_t i = 0; i < ints.size(); ++i) out[i] = lead < 0 ? Rational(-ints[i]) : Rational(ints[i]);
  return out;
}

}  // namespace plucker
