#pragma once

// Rectangular k x m tableaux: the straightening law, the explicit basis of
// V0 = span{(x_1 ∧ ... ∧ x_k)^m}, chain ranks and the dimension formula with
// its sampling oracle.
//
// A tableau stands for the product of the k x k minors on its columns. Column
// entries increase downward and columns are ordered highest first, so a
// tableau is the same object as a canonical basis vector of V(m,n,k). It is
// standard when every row weakly increases from left to right.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "plucker/exterior.hpp"
#include "plucker/rational.hpp"
#include "plucker/sym_power.hpp"

namespace plucker {

struct SignedTableau;

class RectTableau {
 public:
  RectTableau() = default;
  /// Columns may come in any order; they are sorted highest first.
  explicit RectTableau(std::vector<MultiIndex> columns);
  explicit RectTableau(const SymBasisVector& v) : RectTableau(v.components()) {}

  /// Sorts each raw column (sign of the sort folded in); sign 0 when a column
  /// repeats an entry.
  static SignedTableau from_columns(std::vector<std::vector<int>> raw_columns);

  int rows() const { return columns_.empty() ? 0 : static_cast<int>(columns_.front().size()); }
  int cols() const { return static_cast<int>(columns_.size()); }
  /// 0-based row and column.
  int entry(int row, int col) const {
    return columns_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
  }
  const std::vector<MultiIndex>& columns() const { return columns_; }
  int max_letter() const;

  SymBasisVector vector() const { return SymBasisVector(columns_); }
  std::string label() const { return vector().label(); }

  friend auto operator<=>(const RectTableau&, const RectTableau&) = default;

 private:
  std::vector<MultiIndex> columns_;
};

struct SignedTableau {
  int sign;
  RectTableau tableau;
};

bool is_standard(const RectTableau& t);

/// Formal combination of tableaux. No zero coefficients are stored.
class TableauCombo {
 public:
  using Terms = std::map<RectTableau, Rational>;

  TableauCombo() = default;
  explicit TableauCombo(const RectTableau& t, Rational coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const RectTableau& t) const;
  void add(const RectTableau& t, const Rational& value);

  TableauCombo& operator+=(const TableauCombo& other);
  TableauCombo& operator*=(const Rational& scalar);
  friend bool operator==(const TableauCombo&, const TableauCombo&) = default;

  bool all_standard() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Evaluates minor-product polynomials at seeded random integer k x n
/// matrices with entries in [-9, 9].
class MinorEvaluator {
 public:
  static constexpr std::size_t kDefaultPoints = 10;

  MinorEvaluator(int n, int k, std::uint64_t seed, std::size_t points = kDefaultPoints);

  std::size_t points() const { return minors_.size(); }
  std::vector<Rational> evaluate(const RectTableau& t) const;
  std::vector<Rational> evaluate(const TableauCombo& c) const;
  bool agree(const TableauCombo& a, const TableauCombo& b) const;

 private:
  int n_;
  int k_;
  std::vector<ExtVector> minors_;
};

/// Exchange of entry (i0, j1) against every entry of column j2; the result
/// equals t as a minor-product polynomial (certified at seeded points, a
/// failed certificate throws std::logic_error). Terms whose columns repeat an
/// entry vanish. Indices are 0-based.
TableauCombo s3_rewrite(const RectTableau& t, int j1, int j2, int i0, std::uint64_t seed = 0);

/// Shuffle relation on columns (left, right) at `row`: the entries of `left`
/// in rows row..k-1 together with the entries of `right` in rows 0..row are
/// k + 1 letters, so their alternating sum over all redistributions vanishes.
/// Returns t expressed through the non-identity redistributions; certified
/// like s3_rewrite. Exchanging a single entry against a full column is the
/// special case performed by s3_rewrite.
TableauCombo shuffle_rewrite(const RectTableau& t, int left, int right, int row, std::uint64_t seed = 0);

struct StraighteningStep {
  int left;
  int right;
  int row;
  RectTableau input;
  TableauCombo result;
};

struct StraightenTrace {
  std::size_t rewrites = 0;
  std::size_t iteration_cap = 0;
  std::size_t certificate_points = 0;
  std::vector<StraighteningStep> steps;
};

/// Expresses t through standard tableaux. Tableaux are processed lowest
/// first; a non-standard one is rewritten on its leftmost non-standard
/// adjacent column pair, so the first m-1 columns are straightened before the
/// last two. Every produced tableau is strictly higher than the one it came
/// from, which bounds the work by the size of the chain. The final result is
/// certified against t at seeded points; a failure or an exceeded iteration
/// cap throws std::logic_error.
TableauCombo straighten(const RectTableau& t, std::uint64_t seed = 0, StraightenTrace* trace = nullptr);

/// Standard tableaux with content c, highest first.
std::vector<RectTableau> standard_basis_tableaux(const Chain& c, int m, int n, int k);
/// Standard tableaux of all chains, highest first.
std::vector<RectTableau> standard_tableaux(int m, int n, int k);

/// ((Σ_j e_{a_1j}) ∧ ... ∧ (Σ_j e_{a_kj}))^m for a tableau (a_ij).
SymTensor basis_tensor(const RectTableau& t, int n);

/// chain_v0_basis over all chains, one vector per standard tableau, highest
/// first. Each vector has a nonzero coefficient on its own tableau and no
/// higher support.
///
/// basis_tensor over the standard tableaux is not used: at (3,5,3) those 175
/// tensors only span a space of dimension 174.
std::vector<SymTensor> v0_basis(int m, int n, int k);

/// Renumbers the occurrences of each letter column by column, left to right,
/// so every letter appears once. Letter i of t becomes a block of consecutive
/// letters, which is exactly what phi_push with the content of t undoes. A
/// standard tableau stays standard.
RectTableau standardize(const RectTableau& t);

/// Projection of basis_tensor(t) onto the full chain, for a tableau that uses
/// each of the letters 1..m*k once.
SymTensor full_chain_tensor(const RectTableau& t);

/// For each standard tableau s of the chain, phi_push of the full-chain
/// tensor of standardize(s). Together a basis of V0 ∩ L(c).
///
/// The basis tensor of s itself is no substitute when letters repeat: for
/// (12,23,34) the rows e1+e2+e3 and e2+e3+e4 have a vanishing 23-minor, so
/// the tensor has no component on s at all.
std::vector<SymTensor> chain_v0_basis(const Chain& c, int m, int n, int k);

/// (Π_{i=1..m} C(n+i-1,k) / C(k+i,k)) * C(m+k,k).
Integer dim_v0_formula(int m, int n, int k);

enum class OracleMode {
  /// (x_1 ∧ ... ∧ x_k)^m
  decomposable_powers,
  /// (x_1 ∧ y_2 ∧ ... ∧ y_k) ∨ ... ∨ (x_m ∧ y_2 ∧ ... ∧ y_k)
  shared_factor_products,
};

struct OracleResult {
  std::size_t dimension = 0;
  std::size_t samples = 0;
  std::size_t batches = 0;
  std::size_t batch_size = 0;
};

/// Exact rank of sampled generators of V0, in batches of dim_V + 10 until a
/// batch leaves the rank unchanged.
OracleResult dim_v0_oracle(int m, int n, int k, std::uint64_t seed,
                           OracleMode mode = OracleMode::decomposable_powers);

/// Rank of the chain projections of sampled decomposable powers.
std::size_t chain_rank(const Chain& c, int m, int n, int k, std::uint64_t seed);

/// Rank of the coordinate polynomials (w^m, v_s) over the chain, expanded
/// symbolically in the matrix entries. Requires k * m <= 6.
std::size_t chain_rank_symbolic(const Chain& c, int m, int n, int k);

/// Linear functional on V(m,n,k) coordinates.
struct LinearRelation {
  std::map<SymBasisVector, Rational> coefficients;

  Rational evaluate(const SymTensor& u) const;
  std::string to_string() const;
  friend bool operator==(const LinearRelation&, const LinearRelation&) = default;
};

/// The bracket relations on the full chain of V(2, 2k, k): for every
/// (k+1)-subset I with complement J, Σ_s (-1)^s q(I \ i_s, i_s J) = 0, with
/// sorting signs folded in and the leading coefficient made positive.
std::vector<LinearRelation> full_chain_relations_m2(int k);

}  // namespace plucker
