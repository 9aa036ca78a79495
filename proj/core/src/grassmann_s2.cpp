#include "plucker/grassmann_s2.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "plucker/combinatorics.hpp"

namespace plucker {

S2Tensor::S2Tensor(SymTensor t) : tensor_(std::move(t)) {
  if (tensor_.m() != 2) throw std::invalid_argument("S2Tensor requires a symmetric square (m = 2)");
}

Rational S2Tensor::q(const MultiIndex& a, const MultiIndex& b) const { return tensor_.coeff(SymBasisVector{a, b}); }

void S2Tensor::set(const MultiIndex& a, const MultiIndex& b, const Rational& value) {
  tensor_.set(SymBasisVector{a, b}, value);
}

void S2Tensor::add(const MultiIndex& a, const MultiIndex& b, const Rational& value) {
  tensor_.add(SymBasisVector{a, b}, value);
}

int sgn_of(const ExtVector& v) {
  if (v.is_zero()) throw std::invalid_argument("sgn is defined for nonzero vectors");
  return sgn(v.terms().begin()->second);
}

S2Tensor veronese_phi(const ExtVector& v) {
  const int s = sgn_of(v);
  S2Tensor u(v.n(), v.k());
  for (auto a = v.terms().begin(); a != v.terms().end(); ++a) {
    u.set(a->first, a->first, s * a->second * a->second);
    for (auto b = std::next(a); b != v.terms().end(); ++b) {
      u.set(a->first, b->first, 2 * s * a->second * b->second);
    }
  }
  return u;
}

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::linear:
      return "linear";
    case RelationKind::rank3:
      return "rank3";
    case RelationKind::rank4:
      return "rank4";
    case RelationKind::rank4_derived:
      return "rank4-derived";
  }
  return "unknown";
}

void RelationReport::record(Violation v, std::size_t keep) {
  pass = false;
  ++violation_count;
  if (violations.size() < keep) violations.push_back(std::move(v));
}

void RelationReport::merge(RelationReport other, std::size_t keep) {
  pass = pass && other.pass;
  violation_count += other.violation_count;
  for (auto& v : other.violations) {
    if (violations.size() >= keep) break;
    violations.push_back(std::move(v));
  }
}

namespace {

std::vector<ChainRelation> compute_linear_relations(int n, int k) {
  std::vector<ChainRelation> out;
  for (const auto& c : enumerate_chains(2, n, k)) {
    const auto members = chain_members(c, 2, n, k);
    if (members.size() == 1) continue;
    const BasisIndex index(members);
    std::vector<RVector> rows;
    for (const auto& t : chain_v0_basis(c, 2, n, k)) rows.push_back(index.dense(t));
    const RMatrix span = RMatrix::from_rows(rows, members.size());
    for (const auto& f : nullspace_basis(span)) {
      const RVector g = primitive_integer_vector(f);
      LinearRelation rel;
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (sgn(g[i]) != 0) rel.coefficients.emplace(members[i], g[i]);
      }
      out.push_back({c, std::move(rel)});
    }
  }
  return out;
}

// Dense symmetric table of q over Π.
struct QTable {
  std::vector<MultiIndex> indices;
  std::vector<Rational> values;

  explicit QTable(const S2Tensor& u) : indices(basis_indices(u.n(), u.k())) {
    const std::size_t t = indices.size();
    values.resize(t * t);
    std::map<MultiIndex, std::size_t> where;
    for (std::size_t i = 0; i < t; ++i) where.emplace(indices[i], i);
    for (const auto& [v, q] : u.tensor().terms()) {
      const std::size_t a = where.at(v.components()[0]);
      const std::size_t b = where.at(v.components()[1]);
      values[a * t + b] = q;
      values[b * t + a] = q;
    }
  }

  std::size_t size() const { return indices.size(); }
  const Rational& operator()(std::size_t a, std::size_t b) const { return values[a * indices.size() + b]; }
};

std::string pair_label(const MultiIndex& a, const MultiIndex& b) { return "q(" + a.label() + "," + b.label() + ")"; }

}  // namespace

std::vector<ChainRelation> linear_relations(int n, int k) {
  validate_parameters(2, n, k);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<ChainRelation>> cache;
  {
    std::lock_guard lock(mutex);
    const auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  auto computed = compute_linear_relations(n, k);
  std::lock_guard lock(mutex);
  return cache.try_emplace({n, k}, std::move(computed)).first->second;
}

RelationReport check_linear(const S2Tensor& u, std::size_t keep) {
  RelationReport report;
  for (const auto& [chain, rel] : linear_relations(u.n(), u.k())) {
    Rational residual = rel.evaluate(u.tensor());
    if (sgn(residual) == 0) continue;
    Violation v{RelationKind::linear, {}, "chain " + chain.label() + ": " + rel.to_string(), std::move(residual)};
    for (const auto& [key, coeff] : rel.coefficients) {
      v.indices.insert(v.indices.end(), key.components().begin(), key.components().end());
    }
    report.record(std::move(v), keep);
  }
  return report;
}

RelationReport check_quadratic(const S2Tensor& u, std::size_t keep) {
  const QTable q(u);
  const std::size_t t = q.size();
  RelationReport report;
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = a + 1; b < t; ++b) {
      Rational r = q(a, b) * q(a, b) - 4 * q(a, a) * q(b, b);
      if (sgn(r) == 0) continue;
      const auto& A = q.indices[a];
      const auto& B = q.indices[b];
      report.record({RelationKind::rank3, {A, B},
                     pair_label(A, B) + "^2 - 4*" + pair_label(A, A) + "*" + pair_label(B, B), std::move(r)},
                    keep);
    }
  }
  // symmetric in the last two indices, so each unordered pair is evaluated once
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      if (b == a) continue;
      for (std::size_t g = b + 1; g < t; ++g) {
        if (g == a) continue;
        Rational r = q(a, b) * q(a, g) - 2 * q(a, a) * q(b, g);
        if (sgn(r) == 0) continue;
        const auto& A = q.indices[a];
        const auto& B = q.indices[b];
        const auto& G = q.indices[g];
        report.record({RelationKind::rank4, {A, B, G},
                       pair_label(A, B) + "*" + pair_label(A, G) + " - 2*" + pair_label(A, A) + "*" + pair_label(B, G),
                       std::move(r)},
                      keep);
      }
    }
  }
  return report;
}

RelationReport check_d0(const S2Tensor& u, std::size_t keep) {
  if (u.is_zero()) throw std::invalid_argument("membership test is defined for nonzero tensors");
  RelationReport report = check_linear(u, keep);
  report.merge(check_quadratic(u, keep), keep);
  return report;
}

RMatrix quadratic_form_matrix(const S2Tensor& u) {
  const QTable q(u);
  const std::size_t t = q.size();
  RMatrix a(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) a(i, j) = i == j ? q(i, j) : q(i, j) / 2;
  }
  return a;
}

Recovery recover(const S2Tensor& u) {
  const RMatrix a = quadratic_form_matrix(u);
  const auto factor = rank_one_factor(a);
  if (!factor) throw std::domain_error("quadratic form does not have rank one");

  const auto indices = basis_indices(u.n(), u.k());
  std::size_t p = 0;
  while (sgn(a(p, p)) == 0) ++p;
  const int eps = sgn(a(p, p));
  const Rational d = abs(a(p, p));

  // a = eps * d * x x^T with x = factor->row, x_p = 1
  Recovery out{ExtVector(u.n(), u.k()), 1, true};
  Rational scale = eps;
  if (auto root = rational_sqrt(d)) {
    scale *= *root;
  } else {
    out.scale = 1 / d;
    out.exact = false;
  }
  for (std::size_t i = 0; i < indices.size(); ++i) out.vector.set(indices[i], scale * factor->row[i]);
  return out;
}

RelationCounts relation_counts(int n, int k) {
  validate_parameters(2, n, k);
  const Integer t = binomial(n, k);
  RelationCounts out;
  out.linear = dim_V(2, n, k) - dim_v0_formula(2, n, k);
  out.rank3 = t * (t - 1) / 2;
  out.rank4like = t * out.rank3;
  return out;
}

bool verify_r4_implication(const S2Tensor& u, RelationReport* failures) {
  const QTable q(u);
  const std::size_t t = q.size();
  bool ok = true;
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      if (b == a) continue;
      for (std::size_t g = 0; g < t; ++g) {
        if (g == a || g == b) continue;
        for (std::size_t d = 0; d < t; ++d) {
          if (d == a || d == b || d == g) continue;
          Rational r = q(a, b) * q(g, d) - q(a, d) * q(g, b);
          if (sgn(r) == 0) continue;
          ok = false;
          if (failures == nullptr) return false;
          failures->record({RelationKind::rank4_derived,
                            {q.indices[a], q.indices[b], q.indices[g], q.indices[d]},
                            pair_label(q.indices[a], q.indices[b]) + "*" + pair_label(q.indices[g], q.indices[d]) +
                                " - " + pair_label(q.indices[a], q.indices[d]) + "*" +
                                pair_label(q.indices[g], q.indices[b]),
                            std::move(r)},
                           kDefaultWitnessLimit);
        }
      }
    }
  }
  return ok;
}

}  // namespace plucker
