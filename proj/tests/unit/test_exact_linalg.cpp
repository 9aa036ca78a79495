#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "plucker/exact_linalg.hpp"
#include "plucker/rational.hpp"
#include "plucker/sampling.hpp"

using namespace plucker;

namespace {

// Random matrix of rank at most r: the product of random rows x r and r x cols
// factors.
RMatrix random_low_rank(Rng& rng, std::size_t rows, std::size_t cols, std::size_t r) {
  if (r == 0) return RMatrix(rows, cols);
  const RMatrix a = random_integer_matrix(rng, rows, r, -4, 4);
  const RMatrix b = random_integer_matrix(rng, r, cols, -4, 4);
  RMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t t = 0; t < r; ++t) out(i, j) += a(i, t) * b(t, j);
  return out;
}

bool is_zero(const RVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

TEST_CASE("rationals parse and print in reduced form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK(to_string(parse_rational("0/3")) == "0");
  CHECK(parse_rational("1/3") + parse_rational("1/6") == Rational(1, 2));
  for (const char* bad : {"", "1/0", "1/-2", "a", "1.5", "1//2", "/2", "--1", "2/"}) {
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
  }
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt(Rational(-4)).has_value());
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
}

TEST_CASE("rank examples") {
  CHECK(rank(RMatrix{{1, 0}, {0, 1}}) == 2);
  CHECK(rank(RMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(RMatrix(0, 5)) == 0);
  CHECK(rank(RMatrix(3, 3)) == 0);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace_basis(RMatrix{{1, 0}, {0, 1}}).empty());

  const auto single = nullspace_basis(RMatrix{{1, 1}});
  REQUIRE(single.size() == 1);
  CHECK(single[0][0] == -single[0][1]);
  CHECK(single[0][0] != 0);

  const RMatrix plucker_row{{1, -1, 1}};
  const auto basis = nullspace_basis(plucker_row);
  REQUIRE(basis.size() == 2);
  for (const auto& x : basis) CHECK(is_zero(multiply(plucker_row, x)));
  CHECK(rank(RMatrix::from_rows(basis, 3)) == 2);
}

TEST_CASE("rank_one_factor examples") {
  const RMatrix m{{1, 2}, {2, 4}};
  const auto f = rank_one_factor(m);
  REQUIRE(f.has_value());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(f->column[i] * f->row[j] == m(i, j));
  const auto u = symmetric_square_root(m);
  REQUIRE(u.has_value());
  CHECK(*u == RVector{1, 2});

  CHECK_FALSE(rank_one_factor(RMatrix{{1, 0}, {0, 1}}).has_value());
  CHECK_FALSE(rank_one_factor(RMatrix{{0, 0}, {0, 0}}).has_value());
  // Negative diagonal: factorable but not a square.
  CHECK(rank_one_factor(RMatrix{{-1, -2}, {-2, -4}}).has_value());
  CHECK_FALSE(symmetric_square_root(RMatrix{{-1, -2}, {-2, -4}}).has_value());
  CHECK_FALSE(symmetric_square_root(RMatrix{{2, 2}, {2, 2}}).has_value());
}

TEST_CASE("rank agrees with a differently pivoted elimination on random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
    const std::size_t r = rng() % (std::min(rows, cols) + 1);
    const RMatrix m = trial % 3 == 0 ? random_integer_matrix(rng, rows, cols) : random_low_rank(rng, rows, cols, r);
    const std::size_t expected = oracle::bareiss_rank(m);
    CHECK(rank(m) == expected);
    if (trial % 3 != 0) CHECK(expected <= r);

    const auto null = nullspace_basis(m);
    CHECK(rank(m) + null.size() == cols);
    for (const auto& x : null) CHECK(is_zero(multiply(m, x)));
  }
}

TEST_CASE("rank of matrices with rational entries") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    RMatrix m = random_low_rank(rng, 5, 6, 1 + rng() % 4);
    for (std::size_t c = 0; c < 6; ++c) m(0, c) /= 7;
    for (std::size_t r = 0; r < 5; ++r) m(r, 2) /= 3;
    CHECK(rank(m) == oracle::bareiss_rank(m));
  }
}

TEST_CASE("determinant matches permutation expansion") {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const RMatrix m = random_integer_matrix(rng, n, n);
    CHECK(determinant(m) == oracle::leibniz_det(m));
  }
  CHECK_THROWS_AS(determinant(RMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("rank_one_factor reproduces every rank-one matrix") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    RMatrix m = random_low_rank(rng, rows, cols, 1);
    if (rank(m) != 1) continue;
    const auto f = rank_one_factor(m);
    REQUIRE(f.has_value());
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) CHECK(f->column[i] * f->row[j] == m(i, j));
  }
}

TEST_CASE("incremental row space tracks the rank") {
  Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t cols = 1 + rng() % 7;
    const RMatrix m = random_low_rank(rng, 9, cols, rng() % (cols + 1));
    RowSpace space(cols);
    for (std::size_t r = 0; r < m.rows(); ++r) space.insert(m.row(r));
    CHECK(space.rank() == rank(m));
    for (std::size_t r = 0; r < m.rows(); ++r) CHECK(space.contains(m.row(r)));
  }
}

TEST_CASE("modular rank with exact certificate agrees with elimination") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
    const std::size_t r = rng() % (std::min(rows, cols) + 1);
    const RMatrix m = random_low_rank(rng, rows, cols, r);
    std::vector<IVector> ints;
    for (std::size_t i = 0; i < rows; ++i) ints.push_back(integer_row(m.row(i)));
    CHECK(integer_rank(ints, cols) == oracle::bareiss_rank(m));
  }
}

TEST_CASE("modular rank survives entries far beyond one prime") {
  // Rows built from a large multiplier so every residue-based shortcut has
  // to be checked against the exact rows.
  const Integer big("340282366920938463463374607431768211507");  // > 2^128
  std::vector<IVector> rows = {
      {big, 1, 0},
      {2 * big, 2, 0},
      {0, 0, big * big},
      {big + 1, 1, big * big},
  };
  RMatrix m(4, 3);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = rows[i][j];
  CHECK(integer_rank(rows, 3) == oracle::bareiss_rank(m));
  CHECK(integer_rank(rows, 3) == 3);
  // A row divisible by many large primes vanishes modulo each of them but is
  // still nonzero.
  Integer product = 1;
  Integer candidate = (Integer(1) << 62) - 1;
  for (int found = 0; found < 16; candidate -= 2) {
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 40) > 0) {
      product *= candidate;
      ++found;
    }
  }
  CHECK(integer_rank({{product, 0}}, 2) == 1);
  CHECK(integer_rank({{product, 0}, {0, product}, {product, product}}, 2) == 2);
  CHECK(integer_rank({}, 4) == 0);
}

TEST_CASE("primitive integer vectors") {
  const RVector v{Rational(1, 2), Rational(-3, 4), 0};
  CHECK(primitive_integer_vector(v) == RVector{2, -3, 0});
  const RVector w{0, Rational(-2, 3), Rational(4, 3)};
  CHECK(primitive_integer_vector(w) == RVector{0, 1, -2});
}
