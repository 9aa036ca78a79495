#pragma once

// The symmetric power V(m,n,k) = S^m(Λ^k R^n): canonical basis, the
// multinomial weights λ, chains of basis vectors, projections and the letter
// substitution that carries the full chain onto any other chain.

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plucker/exact_linalg.hpp"
#include "plucker/exterior.hpp"
#include "plucker/rational.hpp"

namespace plucker {

/// Throws std::invalid_argument unless m >= 1 and 1 <= k <= n.
void validate_parameters(int m, int n, int k);

/// e_{α_1} ∨ ... ∨ e_{α_m}, components kept highest first (α_1 >= ... >= α_m).
class SymBasisVector {
 public:
  SymBasisVector() = default;
  /// Components may come in any order; all must share one arity.
  explicit SymBasisVector(std::vector<MultiIndex> components);
  SymBasisVector(std::initializer_list<MultiIndex> components)
      : SymBasisVector(std::vector<MultiIndex>(components)) {}

  int degree() const { return static_cast<int>(components_.size()); }
  int arity() const { return components_.empty() ? 0 : static_cast<int>(components_.front().size()); }
  const std::vector<MultiIndex>& components() const { return components_; }
  int max_letter() const;

  /// "(12,34)"
  std::string label() const;

  friend auto operator<=>(const SymBasisVector&, const SymBasisVector&) = default;

 private:
  std::vector<MultiIndex> components_;
};

/// Letter content (k_1, ..., k_n).
struct Chain {
  std::vector<int> content;

  int n() const { return static_cast<int>(content.size()); }
  std::string label() const;
  friend auto operator<=>(const Chain&, const Chain&) = default;
};

/// sum k_i = mk, k_i <= m, at least k nonzero entries.
bool satisfies_chain_conditions(const Chain& c, int m, int n, int k);

/// Sparse element of V(m,n,k) in the canonical basis.
class SymTensor {
 public:
  using Terms = std::map<SymBasisVector, Rational>;

  SymTensor(int m, int n, int k);
  static SymTensor basis(int n, const SymBasisVector& v);

  int m() const { return m_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const SymBasisVector& v) const;
  void add(const SymBasisVector& v, const Rational& value);
  void set(const SymBasisVector& v, const Rational& value);

  SymTensor& operator+=(const SymTensor& other);
  SymTensor& operator-=(const SymTensor& other);
  SymTensor& operator*=(const Rational& scalar);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(const Rational& s, SymTensor v) { return v *= s; }
  friend bool operator==(const SymTensor&, const SymTensor&) = default;

 private:
  void check(const SymBasisVector& v) const;
  void check_compatible(const SymTensor& other) const;

  int m_;
  int n_;
  int k_;
  Terms terms_;
};

/// m! / (i_1! ... i_q!) over the multiplicities of equal components.
Integer lambda_coeff(const SymBasisVector& v);

/// C(m + t - 1, m) with t = C(n, k).
Integer dim_V(int m, int n, int k);

Rational inner_product(const SymTensor& u, const SymTensor& w);

/// How many times each letter 1..n occurs across all components.
Chain content(const SymBasisVector& v, int n);

/// Every basis vector of V(m,n,k), highest first.
std::vector<SymBasisVector> canonical_basis(int m, int n, int k);

/// All contents that admit at least one basis vector.
std::vector<Chain> enumerate_chains(int m, int n, int k);

/// Basis vectors with content c, highest first.
std::vector<SymBasisVector> chain_members(const Chain& c, int m, int n, int k);

/// True when the chain of v has v as its only member.
bool is_invariant(const SymBasisVector& v, int n);

SymTensor project(const SymTensor& u, const Chain& c);

/// (w^m, v) = λ(v) * Π w_{α_i}.
Rational power_coordinate(const ExtVector& w, const SymBasisVector& v);

/// w^m for an arbitrary k-vector w.
SymTensor sym_power(const ExtVector& w, int m);

/// (x_1 ∧ ... ∧ x_k)^m.
SymTensor sym_power_of_decomposable(const PointMatrix& p, int m);

/// v_1 ∨ ... ∨ v_m.
SymTensor sym_product(const std::vector<ExtVector>& factors);

/// The chain (1, ..., 1) on m*k letters.
Chain full_chain(int m, int k);

struct SignedBasisVector {
  int sign;
  SymBasisVector vector;
};

/// The substitution sending letters of the full chain on m*k letters onto the
/// letters of c (the first k_1 letters to 1, the next k_2 to 2, ...). Empty
/// when some component receives a repeated letter. Throws
/// std::invalid_argument when v is not a full-chain vector or c does not fit.
std::optional<SignedBasisVector> phi_push(const SymBasisVector& v, const Chain& c);

/// Linear extension of phi_push; vanished terms are dropped.
SymTensor phi_push(const SymTensor& u, const Chain& c);

/// Maps basis vectors to dense coordinate positions.
class BasisIndex {
 public:
  explicit BasisIndex(std::vector<SymBasisVector> basis);

  std::size_t size() const { return basis_.size(); }
  const std::vector<SymBasisVector>& basis() const { return basis_; }
  std::optional<std::size_t> position(const SymBasisVector& v) const;

  /// Coordinates of u on this basis; terms outside the basis are ignored.
  RVector dense(const SymTensor& u) const;

 private:
  std::vector<SymBasisVector> basis_;
  std::map<SymBasisVector, std::size_t> positions_;
};

}  // namespace plucker
