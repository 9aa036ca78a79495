#pragma once

// Decomposable k-vectors embedded in S^2(Λ^k R^n) by φ(v) = sgn(v) v^2, and
// the relations that cut out the image: chain-wise linear relations, the
// rank-3 quadrics q_ab^2 - 4 q_aa q_bb and the rank-4 quadrics
// q_ab q_ag - 2 q_aa q_bg.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "plucker/exterior.hpp"
#include "plucker/rational.hpp"
#include "plucker/straightening.hpp"
#include "plucker/sym_power.hpp"

namespace plucker {

/// Element of S^2(Λ^k R^n) addressed by pairs q(α, β), α >= β.
class S2Tensor {
 public:
  S2Tensor(int n, int k) : tensor_(2, n, k) {}
  explicit S2Tensor(SymTensor t);

  int n() const { return tensor_.n(); }
  int k() const { return tensor_.k(); }
  bool is_zero() const { return tensor_.is_zero(); }

  /// Symmetric in its arguments.
  Rational q(const MultiIndex& a, const MultiIndex& b) const;
  void set(const MultiIndex& a, const MultiIndex& b, const Rational& value);
  void add(const MultiIndex& a, const MultiIndex& b, const Rational& value);

  const SymTensor& tensor() const { return tensor_; }
  friend bool operator==(const S2Tensor&, const S2Tensor&) = default;

 private:
  SymTensor tensor_;
};

/// Sign of the coefficient at the highest index in the support. Throws
/// std::invalid_argument on the zero vector.
int sgn_of(const ExtVector& v);

/// sgn(v) * v^2: q(α,α) = s v_α^2 and q(α,β) = 2 s v_α v_β for α > β.
S2Tensor veronese_phi(const ExtVector& v);

enum class RelationKind { linear, rank3, rank4, rank4_derived };

std::string to_string(RelationKind kind);

struct Violation {
  RelationKind kind;
  /// Multi-indices involved (a chain's relation lists its support keys).
  std::vector<MultiIndex> indices;
  std::string description;
  Rational residual;
};

struct RelationReport {
  bool pass = true;
  /// Total number of violated instances; `violations` keeps the first ones.
  std::size_t violation_count = 0;
  std::vector<Violation> violations;

  void record(Violation v, std::size_t keep);
  void merge(RelationReport other, std::size_t keep);
};

inline constexpr std::size_t kDefaultWitnessLimit = 8;

/// Linear relations on the chain of V(2,n,k): functionals vanishing on
/// V0 ∩ L(c), as primitive integer vectors with positive leading coefficient.
struct ChainRelation {
  Chain chain;
  LinearRelation relation;
};
std::vector<ChainRelation> linear_relations(int n, int k);

/// Every chain projection of u lies in V0 ∩ L(chain).
RelationReport check_linear(const S2Tensor& u, std::size_t keep = kDefaultWitnessLimit);

/// Rank-3 instances over distinct pairs and rank-4 instances over ordered
/// pairwise distinct triples.
RelationReport check_quadratic(const S2Tensor& u, std::size_t keep = kDefaultWitnessLimit);

/// Membership in the image of nonzero decomposable vectors. Throws
/// std::invalid_argument on the zero tensor.
RelationReport check_d0(const S2Tensor& u, std::size_t keep = kDefaultWitnessLimit);

/// φ(vector) == scale * u. `exact` (scale 1) when the leading diagonal entry
/// is a rational square.
struct Recovery {
  ExtVector vector;
  Rational scale;
  bool exact;
};

/// The symmetric C(n,k) x C(n,k) matrix with a_ii = q(α_i,α_i) and
/// a_ij = q(α_i,α_j)/2, rows in the order of basis_indices.
RMatrix quadratic_form_matrix(const S2Tensor& u);

/// Factors the quadratic form of u. Throws std::domain_error when the form
/// does not have rank one.
Recovery recover(const S2Tensor& u);

struct RelationCounts {
  Integer linear;
  Integer rank3;
  Integer rank4like;
};

/// linear = dim V(2,n,k) - dim V0(2,n,k); rank3 = t(t-1)/2 with t = C(n,k);
/// rank4like = t * rank3.
RelationCounts relation_counts(int n, int k);

/// All q_ab q_gd - q_ad q_gb over pairwise distinct a, b, g, d vanish.
bool verify_r4_implication(const S2Tensor& u, RelationReport* failures = nullptr);

}  // namespace plucker
