#pragma once

// The exterior power Λ^k R^n with exact coefficients: multi-indices, sparse
// k-vectors, wedges of point matrices, Plücker relations, decomposability and
// factorization.
//
// Order convention used throughout the library: e_1 > e_2 > ... > e_n,
// extended lexicographically. A multi-index is therefore *higher* when it is
// lexicographically *smaller* as an integer tuple, and (1,2,...,k) is the
// maximum. Containers keyed by MultiIndex iterate from highest to lowest.

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plucker/exact_linalg.hpp"
#include "plucker/rational.hpp"

namespace plucker {

struct SignedMultiIndex;

class MultiIndex {
 public:
  MultiIndex() = default;
  /// Entries must be positive and strictly increasing; throws otherwise.
  explicit MultiIndex(std::vector<int> entries);
  MultiIndex(std::initializer_list<int> entries) : MultiIndex(std::vector<int>(entries)) {}

  /// Sorts a raw tuple. sign is 0 (and index empty) when an entry repeats.
  static SignedMultiIndex from_unsorted(std::vector<int> raw);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<int>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  bool contains(int letter) const;
  int max_entry() const { return entries_.empty() ? 0 : entries_.back(); }

  /// Compact label: "12" when every entry is a single digit, "1 10" otherwise.
  std::string label() const;

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> entries_;
};

struct SignedMultiIndex {
  int sign;
  MultiIndex index;
};

/// a > b in the global order.
inline bool higher(const MultiIndex& a, const MultiIndex& b) { return a < b; }

/// The basis index set Π, highest first.
std::vector<MultiIndex> basis_indices(int n, int k);

/// Sparse element of Λ^k R^n. Never stores a zero coefficient.
class ExtVector {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  /// Requires 1 <= k <= n.
  ExtVector(int n, int k);
  static ExtVector basis(int n, const MultiIndex& alpha);

  int n() const { return n_; }
  int k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const MultiIndex& alpha) const;
  void add(const MultiIndex& alpha, const Rational& value);
  void set(const MultiIndex& alpha, const Rational& value);

  /// Highest multi-index with a nonzero coefficient; throws on the zero vector.
  const MultiIndex& leading_index() const;

  ExtVector& operator+=(const ExtVector& other);
  ExtVector& operator-=(const ExtVector& other);
  ExtVector& operator*=(const Rational& scalar);
  friend ExtVector operator+(ExtVector a, const ExtVector& b) { return a += b; }
  friend ExtVector operator-(ExtVector a, const ExtVector& b) { return a -= b; }
  friend ExtVector operator*(const Rational& s, ExtVector v) { return v *= s; }
  friend bool operator==(const ExtVector&, const ExtVector&) = default;

 private:
  void check(const MultiIndex& alpha) const;
  void check_compatible(const ExtVector& other) const;

  int n_;
  int k_;
  Terms terms_;
};

/// k x n coordinate matrix whose rows are the vectors x_1, ..., x_k.
class PointMatrix {
 public:
  /// Requires 1 <= rows <= cols.
  explicit PointMatrix(RMatrix coordinates);

  int k() const { return static_cast<int>(coordinates_.rows()); }
  int n() const { return static_cast<int>(coordinates_.cols()); }
  const RMatrix& coordinates() const { return coordinates_; }

 private:
  RMatrix coordinates_;
};

/// k x k minor on the columns of `alpha` (1-based).
Rational minor(const PointMatrix& p, const MultiIndex& alpha);

/// x_1 ∧ ... ∧ x_k; coefficient at α is the minor on columns α.
ExtVector wedge(const PointMatrix& p);

/// One instance of the Plücker relation for index choices i_1 < ... < i_{k+1}
/// and j_1 < ... < j_{k-1}. Terms are stored as products μ_first μ_second with
/// first >= second, sorted highest first, like monomials merged, vanishing
/// terms (repeated index in the second factor) dropped, and the overall sign
/// fixed so the leading coefficient is positive.
struct PluckerTerm {
  int coeff;
  MultiIndex first;
  MultiIndex second;
};

struct PluckerRelation {
  std::vector<int> upper;
  std::vector<int> lower;
  std::vector<PluckerTerm> terms;

  bool is_trivial() const { return terms.empty(); }
  Rational evaluate(const ExtVector& v) const;
  std::string to_string() const;
};

/// The full family of relations for all index choices; `drop_trivial` removes
/// instances whose terms cancel identically.
std::vector<PluckerRelation> plucker_relations(int n, int k, bool drop_trivial = false);

struct DecomposabilityReport {
  bool decomposable = false;
  std::optional<PluckerRelation> witness;
  Rational witness_value;
};

/// Throws std::invalid_argument on the zero vector.
DecomposabilityReport is_decomposable(const ExtVector& v);

/// A point matrix P with wedge(P) == v exactly, or nothing when v is not
/// decomposable. Throws std::invalid_argument on the zero vector.
std::optional<PointMatrix> factorize(const ExtVector& v);

}  // namespace plucker
