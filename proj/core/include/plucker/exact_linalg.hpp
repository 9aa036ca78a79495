#pragma once

// Dense linear algebra over the rationals: rank, nullspace, determinants and
// rank-one factorization, plus an incremental row space used by the sampling
// oracles.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "plucker/rational.hpp"

namespace plucker {

using RVector = std::vector<Rational>;

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);
  RMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Bounds-checked access; throws std::out_of_range.
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  friend bool operator==(const RMatrix&, const RMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form. Pivots are chosen by largest magnitude within the
/// current column to keep intermediate entries small.
struct EchelonForm {
  RMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};
EchelonForm row_echelon(const RMatrix& m);

std::size_t rank(const RMatrix& m);

/// Basis of {x : Mx = 0}; exactly cols - rank vectors.
std::vector<RVector> nullspace_basis(const RMatrix& m);

/// Throws std::invalid_argument for non-square input.
Rational determinant(const RMatrix& m);

RVector multiply(const RMatrix& m, std::span<const Rational> x);

/// M = column * row^T.
struct RankOneFactor {
  RVector column;
  RVector row;
};

/// Present only when rank(M) == 1. For symmetric M the factor is arranged as
/// M = d * x x^T with column = d*x and row = x, where x has a 1 at the first
/// nonzero diagonal position.
std::optional<RankOneFactor> rank_one_factor(const RMatrix& m);

/// u with M = u u^T, when M is symmetric of rank one with positive diagonal
/// and that diagonal entry is a rational square.
std::optional<RVector> symmetric_square_root(const RMatrix& m);

/// Incremental row space with fraction-free integer echelon rows.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dimension) : dimension_(dimension) {}

  /// Returns true when the row enlarged the space.
  bool insert(std::span<const Rational> row);
  bool contains(std::span<const Rational> row) const;

  std::size_t dimension() const { return dimension_; }
  std::size_t rank() const { return basis_.size(); }

 private:
  std::vector<Integer> reduce(std::span<const Rational> row) const;

  std::size_t dimension_;
  std::vector<std::vector<Integer>> basis_;
  std::vector<std::size_t> pivots_;
};

/// Scales a rational vector to a primitive integer vector whose first nonzero
/// entry is positive. Zero vectors are returned unchanged.
RVector primitive_integer_vector(std::span<const Rational> v);

using IVector = std::vector<Integer>;

/// Clears denominators; the result spans the same line as v.
IVector integer_row(std::span<const Rational> v);

/// Exact rank of an integer matrix given by rows of length cols.
///
/// The rank modulo a prime never exceeds the rational rank, so independence of
/// a set of rows mod p proves independence over Q. The matching upper bound
/// comes from reconstructing the rational reduced echelon basis from its
/// residues and checking every input row against it exactly. When no
/// reconstruction verifies after a handful of primes the rank is computed by
/// fraction-free elimination instead, so the answer is exact either way.
std::size_t integer_rank(const std::vector<IVector>& rows, std::size_t cols);

}  // namespace plucker
