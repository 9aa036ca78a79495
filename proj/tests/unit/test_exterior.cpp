#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "plucker/combinatorics.hpp"
#include "plucker/exterior.hpp"
#include "plucker/sampling.hpp"

using namespace plucker;

namespace {

ExtVector vec(int n, int k, std::initializer_list<std::pair<MultiIndex, long>> terms) {
  ExtVector v(n, k);
  for (const auto& [alpha, c] : terms) v.add(alpha, c);
  return v;
}

PointMatrix points(std::initializer_list<std::initializer_list<long>> rows) { return PointMatrix(RMatrix(rows)); }

}  // namespace

TEST_CASE("multi-indices are validated and ordered highest first") {
  CHECK_THROWS_AS(MultiIndex({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({1, 1}), std::invalid_argument);
  CHECK(higher(MultiIndex{1, 2}, MultiIndex{1, 3}));
  CHECK(higher(MultiIndex{1, 4}, MultiIndex{2, 3}));
  CHECK_FALSE(higher(MultiIndex{2, 3}, MultiIndex{2, 3}));

  const auto pi = basis_indices(4, 2);
  REQUIRE(pi.size() == 6);
  CHECK(pi.front() == MultiIndex{1, 2});
  CHECK(pi.back() == MultiIndex{3, 4});
  for (std::size_t i = 1; i < pi.size(); ++i) CHECK(higher(pi[i - 1], pi[i]));

  const auto s = MultiIndex::from_unsorted({3, 1, 2});
  CHECK(s.sign == 1);
  CHECK(s.index == MultiIndex{1, 2, 3});
  CHECK(MultiIndex::from_unsorted({2, 1}).sign == -1);
  CHECK(MultiIndex::from_unsorted({2, 2}).sign == 0);
  CHECK(MultiIndex{1, 10}.label() == "1 10");
  CHECK(MultiIndex{1, 3}.label() == "13");
}

TEST_CASE("ext vectors store no zeros and reject foreign indices") {
  ExtVector v(4, 2);
  v.add({1, 2}, 3);
  v.add({1, 2}, -3);
  CHECK(v.is_zero());
  CHECK_THROWS(v.set({1, 5}, 1));
  CHECK_THROWS(v.set({1, 2, 3}, 1));
  CHECK_THROWS(ExtVector(3, 4));
  CHECK_THROWS(v.leading_index());
  v.set({2, 3}, 1);
  v.set({1, 4}, 2);
  CHECK(v.leading_index() == MultiIndex{1, 4});
}

TEST_CASE("wedge examples") {
  CHECK(wedge(points({{1, 0, 0}, {0, 1, 0}})) == ExtVector::basis(3, {1, 2}));
  CHECK(wedge(points({{1, 1, 0}, {0, 0, 1}})) == vec(3, 2, {{{1, 3}, 1}, {{2, 3}, 1}}));
  CHECK(wedge(points({{1, 2}, {2, 4}})).is_zero());
  CHECK_THROWS(PointMatrix(RMatrix(3, 2)));
}

TEST_CASE("wedge coefficients are the minors") {
  Rng rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % 3);
    const PointMatrix p = random_point_matrix(rng, k, n);
    const ExtVector w = wedge(p);
    for (const auto& alpha : basis_indices(n, k)) {
      CHECK(w.coeff(alpha) == oracle::minor(p.coordinates(), alpha.entries()));
    }
  }
}

TEST_CASE("plucker relation family for (4,2) and (2,1)") {
  const auto all = plucker_relations(4, 2);
  CHECK(all.size() == 16);  // C(4,3) choices of i times C(4,1) choices of j
  const auto essential = plucker_relations(4, 2, true);
  REQUIRE_FALSE(essential.empty());
  for (const auto& r : essential) {
    REQUIRE(r.terms.size() == 3);
    CHECK(r.to_string() == "p12*p34 - p13*p24 + p14*p23");
  }

  for (const auto& r : plucker_relations(2, 1)) CHECK(r.is_trivial());
  CHECK(plucker_relations(2, 1, true).empty());
  CHECK_THROWS(plucker_relations(2, 3));
}

TEST_CASE("every relation vanishes on random wedges") {
  Rng rng(2);
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 3}, std::pair{4, 1}}) {
    const auto relations = plucker_relations(n, k);
    for (int trial = 0; trial < 20; ++trial) {
      const ExtVector w = wedge(random_point_matrix(rng, k, n));
      for (const auto& r : relations) CHECK(r.evaluate(w) == 0);
    }
  }
}

TEST_CASE("relations are generated with the alternating expansion") {
  // Re-expand each instance from raw index tuples and compare evaluations on a
  // generic (non-decomposable) vector.
  Rng rng(3);
  for (auto [n, k] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{5, 2}}) {
    ExtVector v(n, k);
    for (const auto& alpha : basis_indices(n, k)) v.set(alpha, static_cast<long>(rng() % 19) - 9);
    auto coeff = [&](std::vector<int> raw) -> Rational {
      const int s = sort_with_sign(raw);
      return s == 0 ? Rational(0) : Rational(s) * v.coeff(MultiIndex(raw));
    };
    for (const auto& r : plucker_relations(n, k)) {
      Rational raw_value = 0;
      for (std::size_t p = 0; p < r.upper.size(); ++p) {
        std::vector<int> first, second{r.upper[p]};
        for (std::size_t q = 0; q < r.upper.size(); ++q)
          if (q != p) first.push_back(r.upper[q]);
        second.insert(second.end(), r.lower.begin(), r.lower.end());
        raw_value += ((p + 1) % 2 ? -1 : 1) * coeff(first) * coeff(second);
      }
      // Normalization may flip the overall sign.
      const Rational value = r.evaluate(v);
      CHECK((value == raw_value || value == -raw_value));
    }
  }
}

TEST_CASE("is_decomposable examples") {
  CHECK(is_decomposable(ExtVector::basis(4, {1, 2})).decomposable);

  const auto report = is_decomposable(vec(4, 2, {{{1, 2}, 1}, {{3, 4}, 1}}));
  CHECK_FALSE(report.decomposable);
  REQUIRE(report.witness.has_value());
  CHECK(report.witness_value == 1);
  CHECK(report.witness->to_string() == "p12*p34 - p13*p24 + p14*p23");

  CHECK(is_decomposable(vec(4, 2, {{{1, 2}, 1}, {{1, 3}, 1}})).decomposable);
  CHECK_THROWS_AS(is_decomposable(ExtVector(4, 2)), std::invalid_argument);
}

TEST_CASE("factorize examples") {
  const auto p = factorize(ExtVector::basis(4, {1, 2}));
  REQUIRE(p.has_value());
  CHECK(p->coordinates() == RMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});

  const ExtVector v = vec(3, 2, {{{1, 3}, 1}, {{2, 3}, 1}});
  const auto q = factorize(v);
  REQUIRE(q.has_value());
  CHECK(wedge(*q) == v);

  CHECK_FALSE(factorize(vec(4, 2, {{{1, 2}, 1}, {{3, 4}, 1}})).has_value());
  CHECK_THROWS_AS(factorize(ExtVector(4, 2)), std::invalid_argument);
}

TEST_CASE("round trip through factorize for random full-rank matrices") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const int n = k + static_cast<int>(rng() % (7 - k));
    const ExtVector w = wedge(random_full_rank_point_matrix(rng, k, n));
    CHECK(is_decomposable(w).decomposable);
    const auto p = factorize(w);
    REQUIRE(p.has_value());
    CHECK(wedge(*p) == w);
  }
}

TEST_CASE("wedge is alternating and multilinear in the rows") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = k + 1 + static_cast<int>(rng() % 2);
    RMatrix m = random_integer_matrix(rng, static_cast<std::size_t>(k), static_cast<std::size_t>(n));

    RMatrix swapped = m;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(swapped(0, c), swapped(1, c));
    CHECK(wedge(PointMatrix(swapped)) == Rational(-1) * wedge(PointMatrix(m)));

    // Row 0 = a*x + b*y at rational a, b.
    const Rational a = Rational(static_cast<long>(rng() % 7) - 3) / 5;
    const Rational b = Rational(static_cast<long>(rng() % 7) - 3) / 2;
    const RMatrix x = random_integer_matrix(rng, 1, m.cols());
    const RMatrix y = random_integer_matrix(rng, 1, m.cols());
    RMatrix mx = m, my = m, mixed = m;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mx(0, c) = x(0, c);
      my(0, c) = y(0, c);
      mixed(0, c) = a * x(0, c) + b * y(0, c);
    }
    CHECK(wedge(PointMatrix(mixed)) == a * wedge(PointMatrix(mx)) + b * wedge(PointMatrix(my)));
  }
}

TEST_CASE("failed decomposability always carries a nonzero witness") {
  Rng rng(6);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + static_cast<int>(rng() % 2);
    const int n = k + 2 + static_cast<int>(rng() % 2);
    ExtVector v(n, k);
    for (const auto& alpha : basis_indices(n, k))
      if (rng() % 3 == 0) v.set(alpha, static_cast<long>(rng() % 9) - 4);
    if (v.is_zero()) continue;
    const auto report = is_decomposable(v);
    if (report.decomposable) {
      const auto p = factorize(v);
      REQUIRE(p.has_value());
      CHECK(wedge(*p) == v);
      continue;
    }
    ++failures;
    REQUIRE(report.witness.has_value());
    CHECK(report.witness_value != 0);
    CHECK(report.witness->evaluate(v) == report.witness_value);
    CHECK_FALSE(factorize(v).has_value());
  }
  CHECK(failures > 50);
}
