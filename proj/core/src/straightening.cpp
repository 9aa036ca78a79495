#include "plucker/straightening.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "plucker/combinatorics.hpp"
#include "plucker/sampling.hpp"

namespace plucker {

RectTableau::RectTableau(std::vector<MultiIndex> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("tableau needs at least one column");
  for (const auto& c : columns_) {
    if (c.size() != columns_.front().size() || c.size() == 0) {
      throw std::invalid_argument("tableau columns must share one positive height");
    }
  }
  std::sort(columns_.begin(), columns_.end());
}

SignedTableau RectTableau::from_columns(std::vector<std::vector<int>> raw_columns) {
  int sign = 1;
  std::vector<MultiIndex> cols;
  cols.reserve(raw_columns.size());
  for (auto& raw : raw_columns) {
    for (int e : raw) {
      if (e < 1) throw std::invalid_argument("tableau entries are 1-based");
    }
    auto s = MultiIndex::from_unsorted(std::move(raw));
    if (s.sign == 0) return {0, RectTableau()};
    sign *= s.sign;
    cols.push_back(std::move(s.index));
  }
  return {sign, RectTableau(std::move(cols))};
}

int RectTableau::max_letter() const {
  int out = 0;
  for (const auto& c : columns_) out = std::max(out, c.max_entry());
  return out;
}

namespace {

// First row where column `left` exceeds column `right`, or -1.
int first_row_violation(const MultiIndex& left, const MultiIndex& right) {
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i] > right[i]) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

bool is_standard(const RectTableau& t) {
  const auto& cols = t.columns();
  for (std::size_t j = 1; j < cols.size(); ++j) {
    if (first_row_violation(cols[j - 1], cols[j]) >= 0) return false;
  }
  return true;
}

TableauCombo::TableauCombo(const RectTableau& t, Rational coeff) { add(t, coeff); }

Rational TableauCombo::coeff(const RectTableau& t) const {
  const auto it = terms_.find(t);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TableauCombo::add(const RectTableau& t, const Rational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

TableauCombo& TableauCombo::operator+=(const TableauCombo& other) {
  for (const auto& [t, q] : other.terms_) add(t, q);
  return *this;
}

TableauCombo& TableauCombo::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, q] : terms_) q *= scalar;
  return *this;
}

bool TableauCombo::all_standard() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return is_standard(kv.first); });
}

std::string TableauCombo::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, q] : terms_) {
    const bool negative = sgn(q) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = abs(q);
    if (mag != 1) os << plucker::to_string(mag) << "*";
    os << t.label();
    first = false;
  }
  return os.str();
}

MinorEvaluator::MinorEvaluator(int n, int k, std::uint64_t seed, std::size_t points) : n_(n), k_(k) {
  Rng rng(seed);
  minors_.reserve(points);
  for (std::size_t i = 0; i < points; ++i) minors_.push_back(wedge(random_point_matrix(rng, k, n)));
}

std::vector<Rational> MinorEvaluator::evaluate(const RectTableau& t) const {
  if (t.rows() != k_ || t.max_letter() > n_) throw std::invalid_argument("tableau does not fit the evaluator");
  std::vector<Rational> out;
  out.reserve(minors_.size());
  for (const auto& w : minors_) {
    Rational p = 1;
    for (const auto& col : t.columns()) {
      p *= w.coeff(col);
      if (sgn(p) == 0) break;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Rational> MinorEvaluator::evaluate(const TableauCombo& c) const {
  std::vector<Rational> out(minors_.size());
  for (const auto& [t, q] : c.terms()) {
    const auto values = evaluate(t);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += q * values[i];
  }
  return out;
}

bool MinorEvaluator::agree(const TableauCombo& a, const TableauCombo& b) const {
  return evaluate(a) == evaluate(b);
}

namespace {

void check_columns(const RectTableau& t, int j1, int j2) {
  if (j1 < 0 || j2 < 0 || j1 >= t.cols() || j2 >= t.cols() || j1 == j2) {
    throw std::invalid_argument("invalid column pair for an exchange");
  }
}

void check_row(const RectTableau& t, int row) {
  if (row < 0 || row >= t.rows()) throw std::invalid_argument("invalid row for an exchange");
}

// Replaces columns j1, j2 of t by raw columns; returns the signed tableau.
SignedTableau with_columns(const RectTableau& t, int j1, std::vector<int> a, int j2, std::vector<int> b) {
  std::vector<std::vector<int>> raw;
  raw.reserve(static_cast<std::size_t>(t.cols()));
  for (int j = 0; j < t.cols(); ++j) {
    if (j == j1) {
      raw.push_back(std::move(a));
    } else if (j == j2) {
      raw.push_back(std::move(b));
    } else {
      raw.push_back(t.columns()[static_cast<std::size_t>(j)].entries());
    }
  }
  return RectTableau::from_columns(std::move(raw));
}

TableauCombo shuffle_terms(const RectTableau& t, int left, int right, int row) {
  const auto& a = t.columns()[static_cast<std::size_t>(left)];
  const auto& b = t.columns()[static_cast<std::size_t>(right)];
  const int k = t.rows();
  const int moved = k - row;  // rows row..k-1 of the left column

  std::vector<int> letters;
  for (int i = row; i < k; ++i) letters.push_back(a[static_cast<std::size_t>(i)]);
  for (int i = 0; i <= row; ++i) letters.push_back(b[static_cast<std::size_t>(i)]);

  TableauCombo out;
  for (const auto& pick : subsets(0, k, moved)) {
    std::vector<int> perm = pick;
    for (int i = 0; i <= k; ++i) {
      if (!std::binary_search(pick.begin(), pick.end(), i)) perm.push_back(i);
    }
    bool identity = true;
    for (int i = 0; i <= k; ++i) identity = identity && perm[static_cast<std::size_t>(i)] == i;
    if (identity) continue;

    std::vector<int> na = a.entries();
    std::vector<int> nb = b.entries();
    for (int i = 0; i < moved; ++i) {
      na[static_cast<std::size_t>(row + i)] = letters[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    }
    for (int i = 0; i <= row; ++i) {
      nb[static_cast<std::size_t>(i)] = letters[static_cast<std::size_t>(perm[static_cast<std::size_t>(moved + i)])];
    }
    auto s = with_columns(t, left, std::move(na), right, std::move(nb));
    if (s.sign == 0) continue;
    // identity term + Σ others = 0
    out.add(s.tableau, -permutation_sign(perm) * s.sign);
  }
  return out;
}

void certify(const RectTableau& t, const TableauCombo& result, std::uint64_t seed, const char* what) {
  const MinorEvaluator eval(t.max_letter(), t.rows(), seed);
  if (!eval.agree(TableauCombo(t), result)) {
    throw std::logic_error(std::string(what) + " produced a combination that differs from " + t.label());
  }
}

}  // namespace

TableauCombo s3_rewrite(const RectTableau& t, int j1, int j2, int i0, std::uint64_t seed) {
  check_columns(t, j1, j2);
  check_row(t, i0);
  const auto& a = t.columns()[static_cast<std::size_t>(j1)];
  const auto& b = t.columns()[static_cast<std::size_t>(j2)];
  TableauCombo out;
  for (int r = 0; r < t.rows(); ++r) {
    std::vector<int> na = a.entries();
    std::vector<int> nb = b.entries();
    std::swap(na[static_cast<std::size_t>(i0)], nb[static_cast<std::size_t>(r)]);
    auto s = with_columns(t, j1, std::move(na), j2, std::move(nb));
    if (s.sign != 0) out.add(s.tableau, s.sign);
  }
  certify(t, out, seed, "s3_rewrite");
  return out;
}

TableauCombo shuffle_rewrite(const RectTableau& t, int left, int right, int row, std::uint64_t seed) {
  check_columns(t, left, right);
  check_row(t, row);
  TableauCombo out = shuffle_terms(t, left, right, row);
  certify(t, out, seed, "shuffle_rewrite");
  return out;
}

TableauCombo straighten(const RectTableau& t, std::uint64_t seed, StraightenTrace* trace) {
  const int n = t.max_letter();
  const Chain c = content(t.vector(), n);
  const std::size_t cap = 10 * chain_members(c, t.cols(), n, t.rows()).size();

  std::map<RectTableau, Rational> pending{{t, Rational(1)}};
  TableauCombo result;
  std::size_t rewrites = 0;
  while (!pending.empty()) {
    auto last = std::prev(pending.end());
    RectTableau current = last->first;
    Rational coeff = std::move(last->second);
    pending.erase(last);

    const auto& cols = current.columns();
    int left = -1;
    int row = -1;
    for (std::size_t j = 1; j < cols.size() && left < 0; ++j) {
      const int r = first_row_violation(cols[j - 1], cols[j]);
      if (r >= 0) {
        left = static_cast<int>(j) - 1;
        row = r;
      }
    }
    if (left < 0) {
      result.add(current, coeff);
      continue;
    }
    if (++rewrites > cap) {
      throw std::logic_error("straightening of " + t.label() + " exceeded its iteration cap");
    }
    TableauCombo step = shuffle_terms(current, left, left + 1, row);
    for (const auto& [u, q] : step.terms()) {
      auto [it, inserted] = pending.try_emplace(u, coeff * q);
      if (!inserted) {
        it->second += coeff * q;
        if (sgn(it->second) == 0) pending.erase(it);
      }
    }
    if (trace != nullptr) trace->steps.push_back({left, left + 1, row, current, std::move(step)});
  }

  certify(t, result, seed, "straighten");
  if (trace != nullptr) {
    trace->rewrites = rewrites;
    trace->iteration_cap = cap;
    trace->certificate_points = MinorEvaluator::kDefaultPoints;
  }
  return result;
}

std::vector<RectTableau> standard_basis_tableaux(const Chain& c, int m, int n, int k) {
  std::vector<RectTableau> out;
  for (const auto& v : chain_members(c, m, n, k)) {
    RectTableau t(v);
    if (is_standard(t)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<RectTableau> standard_tableaux(int m, int n, int k) {
  std::vector<RectTableau> out;
  for (const auto& c : enumerate_chains(m, n, k)) {
    auto part = standard_basis_tableaux(c, m, n, k);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SymTensor basis_tensor(const RectTableau& t, int n) {
  if (t.max_letter() > n) throw std::invalid_argument("tableau letter exceeds n");
  RMatrix rows(static_cast<std::size_t>(t.rows()), static_cast<std::size_t>(n));
  for (int i = 0; i < t.rows(); ++i) {
    for (int j = 0; j < t.cols(); ++j) {
      rows(static_cast<std::size_t>(i), static_cast<std::size_t>(t.entry(i, j) - 1)) += 1;
    }
  }
  return sym_power_of_decomposable(PointMatrix(std::move(rows)), t.cols());
}


RectTableau standardize(const RectTableau& t) {
  const int letters = t.max_letter();
  std::vector<int> offset(static_cast<std::size_t>(letters) + 1, 0);
  for (const auto& col : t.columns())
    for (int x : col) ++offset[static_cast<std::size_t>(x)];
  // offset[x] becomes the number of cells holding letters below x.
  int running = 0;
  for (int x = 1; x <= letters; ++x) {
    const int count = offset[static_cast<std::size_t>(x)];
    offset[static_cast<std::size_t>(x)] = running;
    running += count;
  }
  std::vector<MultiIndex> columns;
  for (const auto& col : t.columns()) {
    std::vector<int> renamed;
    for (int x : col) renamed.push_back(++offset[static_cast<std::size_t>(x)]);
    columns.emplace_back(std::move(renamed));
  }
  return RectTableau(std::move(columns));
}

SymTensor full_chain_tensor(const RectTableau& t) {
  const int m = t.cols(), k = t.rows();
  const Chain full = full_chain(m, k);
  if (content(t.vector(), m * k) != full) throw std::invalid_argument("tableau does not use every letter once");
  RMatrix rows(static_cast<std::size_t>(k), static_cast<std::size_t>(m * k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < m; ++j) rows(static_cast<std::size_t>(i), static_cast<std::size_t>(t.entry(i, j) - 1)) = 1;
  const ExtVector w = wedge(PointMatrix(std::move(rows)));
  SymTensor out(m, m * k, k);
  for (const auto& v : chain_members(full, m, m * k, k)) out.add(v, power_coordinate(w, v));
  return out;
}

std::vector<SymTensor> chain_v0_basis(const Chain& c, int m, int n, int k) {
  std::vector<SymTensor> out;
  for (const auto& t : standard_basis_tableaux(c, m, n, k)) {
    out.push_back(phi_push(full_chain_tensor(standardize(t)), c));
  }
  return out;
}

std::vector<SymTensor> v0_basis(int m, int n, int k) {
  std::vector<SymTensor> out;
  for (const auto& t : standard_tableaux(m, n, k)) {
    out.push_back(phi_push(full_chain_tensor(standardize(t)), content(t.vector(), n)));
  }
  return out;
}

Integer dim_v0_formula(int m, int n, int k) {
  validate_parameters(m, n, k);
  Rational value = 1;
  for (int i = 1; i <= m; ++i) value *= Rational(binomial(n + i - 1, k)) / Rational(binomial(k + i, k));
  value *= binomial(m + k, k);
  value.canonicalize();
  if (value.get_den() != 1) throw std::logic_error("dimension formula produced a non-integer");
  return value.get_num();
}

namespace {

// Positions of basis vectors in terms of positions of their components in Π.
struct CoordinatePlan {
  std::vector<MultiIndex> indices;
  std::vector<std::vector<std::size_t>> components;
  std::vector<Integer> lambdas;

  CoordinatePlan(const std::vector<SymBasisVector>& basis, int n, int k) : indices(basis_indices(n, k)) {
    std::map<MultiIndex, std::size_t> where;
    for (std::size_t i = 0; i < indices.size(); ++i) where.emplace(indices[i], i);
    for (const auto& v : basis) {
      std::vector<std::size_t> pos;
      for (const auto& c : v.components()) pos.push_back(where.at(c));
      components.push_back(std::move(pos));
      lambdas.push_back(lambda_coeff(v));
    }
  }

  RVector power_row(const ExtVector& w) const {
    std::vector<Rational> coords(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) coords[i] = w.coeff(indices[i]);
    RVector row(components.size());
    for (std::size_t r = 0; r < components.size(); ++r) {
      Rational p(lambdas[r]);
      for (std::size_t pos : components[r]) {
        p *= coords[pos];
        if (sgn(p) == 0) break;
      }
      row[r] = std::move(p);
    }
    return row;
  }
};

}  // namespace

OracleResult dim_v0_oracle(int m, int n, int k, std::uint64_t seed, OracleMode mode) {
  validate_parameters(m, n, k);
  const BasisIndex basis(canonical_basis(m, n, k));
  const CoordinatePlan plan(basis.basis(), n, k);
  Rng rng(seed);

  std::function<RVector()> sample;
  if (mode == OracleMode::decomposable_powers) {
    sample = [&] { return plan.power_row(wedge(random_point_matrix(rng, k, n))); };
  } else {
    sample = [&] {
      const RMatrix shared = random_integer_matrix(rng, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
      std::vector<ExtVector> factors;
      for (int i = 0; i < m; ++i) {
        RMatrix rows = shared;
        const RMatrix x = random_integer_matrix(rng, 1, static_cast<std::size_t>(n));
        for (std::size_t c = 0; c < static_cast<std::size_t>(n); ++c) rows(0, c) = x(0, c);
        factors.push_back(wedge(PointMatrix(std::move(rows))));
      }
      return basis.dense(sym_product(factors));
    };
  }

  const std::size_t batch = basis.size() + 10;
  const SpanEstimate est = sampled_span_rank(basis.size(), batch, sample);
  return {est.rank, est.samples, est.batches, batch};
}

std::size_t chain_rank(const Chain& c, int m, int n, int k, std::uint64_t seed) {
  const auto members = chain_members(c, m, n, k);
  const CoordinatePlan plan(members, n, k);
  Rng rng(seed);
  const auto est = sampled_span_rank(members.size(), members.size() + 10,
                                     [&] { return plan.power_row(wedge(random_point_matrix(rng, k, n))); });
  return est.rank;
}

namespace {

// Polynomials in the entries x_{r,c} of a k x n matrix; a monomial is the
// sorted list of its variable ids r*n + c.
using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, Integer>;

Polynomial minor_polynomial(const MultiIndex& alpha, int n) {
  const int k = static_cast<int>(alpha.size());
  Polynomial out;
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    Monomial mono;
    for (int r = 0; r < k; ++r) mono.push_back(r * n + alpha[static_cast<std::size_t>(perm[static_cast<std::size_t>(r)])] - 1);
    std::sort(mono.begin(), mono.end());
    out[mono] += permutation_sign(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out[m] += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

}  // namespace

std::size_t chain_rank_symbolic(const Chain& c, int m, int n, int k) {
  if (k * m > 6) throw std::invalid_argument("symbolic chain rank is limited to k * m <= 6");
  const auto members = chain_members(c, m, n, k);
  std::vector<Polynomial> polys;
  std::map<Monomial, std::size_t> columns;
  for (const auto& v : members) {
    Polynomial p{{Monomial{}, lambda_coeff(v)}};
    for (const auto& comp : v.components()) p = multiply(p, minor_polynomial(comp, n));
    for (const auto& [mono, coeff] : p) columns.try_emplace(mono, columns.size());
    polys.push_back(std::move(p));
  }
  RMatrix mat(polys.size(), columns.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [mono, coeff] : polys[r]) mat(r, columns.at(mono)) = coeff;
  }
  return rank(mat);
}

Rational LinearRelation::evaluate(const SymTensor& u) const {
  Rational total = 0;
  for (const auto& [v, q] : coefficients) total += q * u.coeff(v);
  return total;
}

std::string LinearRelation::to_string() const {
  if (coefficients.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [v, q] : coefficients) {
    const bool negative = sgn(q) < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    const Rational mag = abs(q);
    if (mag != 1) os << plucker::to_string(mag) << "*";
    os << "q" << v.label();
    first = false;
  }
  return os.str();
}

std::vector<LinearRelation> full_chain_relations_m2(int k) {
  if (k < 1) throw std::invalid_argument("full chain relations need k >= 1");
  const int letters = 2 * k;
  std::vector<LinearRelation> out;
  for (const auto& upper : subsets(1, letters, k + 1)) {
    std::vector<int> lower;
    for (int i = 1; i <= letters; ++i) {
      if (!std::binary_search(upper.begin(), upper.end(), i)) lower.push_back(i);
    }
    LinearRelation rel;
    for (std::size_t s = 0; s < upper.size(); ++s) {
      std::vector<int> first;
      for (std::size_t q = 0; q < upper.size(); ++q) {
        if (q != s) first.push_back(upper[q]);
      }
      std::vector<int> raw{upper[s]};
      raw.insert(raw.end(), lower.begin(), lower.end());
      auto second = MultiIndex::from_unsorted(std::move(raw));
      if (second.sign == 0) continue;
      const int sign = ((s + 1) % 2 == 0 ? 1 : -1) * second.sign;
      SymBasisVector v{MultiIndex(std::move(first)), second.index};
      auto [it, inserted] = rel.coefficients.try_emplace(v, sign);
      if (!inserted) {
        it->second += sign;
        if (sgn(it->second) == 0) rel.coefficients.erase(it);
      }
    }
    if (!rel.coefficients.empty() && sgn(rel.coefficients.begin()->second) < 0) {
      for (auto& [v, q] : rel.coefficients) q = -q;
    }
    out.push_back(std::move(rel));
  }
  return out;
}

}  // namespace plucker
