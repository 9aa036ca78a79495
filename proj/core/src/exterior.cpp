#include "plucker/exterior.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "plucker/combinatorics.hpp"

namespace plucker {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1) throw std::invalid_argument("multi-index entries are 1-based");
    if (i > 0 && entries_[i - 1] >= entries_[i]) {
      throw std::invalid_argument("multi-index entries must strictly increase");
    }
  }
}

SignedMultiIndex MultiIndex::from_unsorted(std::vector<int> raw) {
  const int s = sort_with_sign(raw);
  if (s == 0) return {0, MultiIndex()};
  return {s, MultiIndex(std::move(raw))};
}

bool MultiIndex::contains(int letter) const {
  return std::binary_search(entries_.begin(), entries_.end(), letter);
}

std::string MultiIndex::label() const {
  const bool compact = std::all_of(entries_.begin(), entries_.end(), [](int e) { return e < 10; });
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::vector<MultiIndex> basis_indices(int n, int k) {
  std::vector<MultiIndex> out;
  for (auto& s : subsets(1, n, k)) out.emplace_back(std::move(s));
  return out;
}

ExtVector::ExtVector(int n, int k) : n_(n), k_(k) {
  if (k < 1 || k > n) throw std::invalid_argument("exterior power requires 1 <= k <= n");
}

ExtVector ExtVector::basis(int n, const MultiIndex& alpha) {
  ExtVector v(n, static_cast<int>(alpha.size()));
  v.set(alpha, 1);
  return v;
}

void ExtVector::check(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != k_ || alpha.max_entry() > n_) {
    throw std::invalid_argument("multi-index does not belong to this exterior power");
  }
}

void ExtVector::check_compatible(const ExtVector& other) const {
  if (other.n_ != n_ || other.k_ != k_) throw std::invalid_argument("exterior power mismatch");
}

Rational ExtVector::coeff(const MultiIndex& alpha) const {
  const auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExtVector::add(const MultiIndex& alpha, const Rational& value) {
  check(alpha);
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void ExtVector::set(const MultiIndex& alpha, const Rational& value) {
  check(alpha);
  if (sgn(value) == 0) {
    terms_.erase(alpha);
  } else {
    terms_[alpha] = value;
  }
}

const MultiIndex& ExtVector::leading_index() const {
  if (terms_.empty()) throw std::invalid_argument("zero vector has no leading index");
  return terms_.begin()->first;
}

ExtVector& ExtVector::operator+=(const ExtVector& other) {
  check_compatible(other);
  for (const auto& [alpha, q] : other.terms_) add(alpha, q);
  return *this;
}

ExtVector& ExtVector::operator-=(const ExtVector& other) {
  check_compatible(other);
  for (const auto& [alpha, q] : other.terms_) add(alpha, -q);
  return *this;
}

ExtVector& ExtVector::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, q] : terms_) q *= scalar;
  return *this;
}

PointMatrix::PointMatrix(RMatrix coordinates) : coordinates_(std::move(coordinates)) {
  if (coordinates_.rows() < 1 || coordinates_.rows() > coordinates_.cols()) {
    throw std::invalid_argument("point matrix must be k x n with 1 <= k <= n");
  }
}

Rational minor(const PointMatrix& p, const MultiIndex& alpha) {
  const std::size_t k = alpha.size();
  if (static_cast<int>(k) != p.k() || alpha.max_entry() > p.n()) {
    throw std::invalid_argument("minor index does not match the point matrix");
  }
  const RMatrix& a = p.coordinates();
  if (k == 1) return a(0, alpha[0] - 1);
  if (k == 2) {
    const auto c0 = static_cast<std::size_t>(alpha[0] - 1);
    const auto c1 = static_cast<std::size_t>(alpha[1] - 1);
    return a(0, c0) * a(1, c1) - a(0, c1) * a(1, c0);
  }
  RMatrix sub(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) sub(r, c) = a(r, static_cast<std::size_t>(alpha[c] - 1));
  }
  return determinant(sub);
}

ExtVector wedge(const PointMatrix& p) {
  ExtVector v(p.n(), p.k());
  for (const auto& alpha : basis_indices(p.n(), p.k())) v.set(alpha, minor(p, alpha));
  return v;
}

Rational PluckerRelation::evaluate(const ExtVector& v) const {
  Rational total = 0;
  for (const auto& t : terms) {
    if (t.coeff == 0) continue;
    total += t.coeff * v.coeff(t.first) * v.coeff(t.second);
  }
  return total;
}

std::string PluckerRelation::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i == 0) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    if (std::abs(t.coeff) != 1) os << std::abs(t.coeff) << "*";
    os << "p" << t.first.label() << "*p" << t.second.label();
  }
  return os.str();
}

namespace {

PluckerRelation build_relation(const std::vector<int>& upper, const std::vector<int>& lower) {
  // Σ_p (-1)^p μ_{upper \ i_p} μ_{i_p lower}
  std::map<std::pair<MultiIndex, MultiIndex>, int> merged;
  for (std::size_t p = 0; p < upper.size(); ++p) {
    std::vector<int> first;
    first.reserve(upper.size() - 1);
    for (std::size_t q = 0; q < upper.size(); ++q) {
      if (q != p) first.push_back(upper[q]);
    }
    std::vector<int> raw_second{upper[p]};
    raw_second.insert(raw_second.end(), lower.begin(), lower.end());
    auto second = MultiIndex::from_unsorted(std::move(raw_second));
    if (second.sign == 0) continue;
    const int sign = ((p + 1) % 2 == 0 ? 1 : -1) * second.sign;
    MultiIndex a(std::move(first));
    MultiIndex b = std::move(second.index);
    if (higher(b, a)) std::swap(a, b);
    merged[{std::move(a), std::move(b)}] += sign;
  }

  PluckerRelation rel{upper, lower, {}};
  for (auto& [key, c] : merged) {
    if (c != 0) rel.terms.push_back({c, key.first, key.second});
  }
  if (!rel.terms.empty() && rel.terms.front().coeff < 0) {
    for (auto& t : rel.terms) t.coeff = -t.coeff;
  }
  return rel;
}

}  // namespace

std::vector<PluckerRelation> plucker_relations(int n, int k, bool drop_trivial) {
  if (k < 1 || k > n) throw std::invalid_argument("plucker relations require 1 <= k <= n");
  std::vector<PluckerRelation> out;
  const auto uppers = subsets(1, n, k + 1);
  const auto lowers = subsets(1, n, k - 1);
  for (const auto& upper : uppers) {
    for (const auto& lower : lowers) {
      PluckerRelation rel = build_relation(upper, lower);
      if (drop_trivial && rel.is_trivial()) continue;
      out.push_back(std::move(rel));
    }
  }
  return out;
}

DecomposabilityReport is_decomposable(const ExtVector& v) {
  if (v.is_zero()) throw std::invalid_argument("decomposability is defined for nonzero vectors");
  DecomposabilityReport report;
  for (auto& rel : plucker_relations(v.n(), v.k(), true)) {
    Rational value = rel.evaluate(v);
    if (sgn(value) != 0) {
      report.decomposable = false;
      report.witness = std::move(rel);
      report.witness_value = std::move(value);
      return report;
    }
  }
  report.decomposable = true;
  return report;
}

std::optional<PointMatrix> factorize(const ExtVector& v) {
  if (v.is_zero()) throw std::invalid_argument("factorization is defined for nonzero vectors");
  const int n = v.n();
  const int k = v.k();
  const MultiIndex& lead = v.leading_index();
  const Rational lead_coeff = v.coeff(lead);

  // Row r collects the coefficients of lead with its r-th entry replaced by
  // each column; the lead columns then form lead_coeff * identity.
  RMatrix rows(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
  for (int r = 0; r < k; ++r) {
    for (int col = 1; col <= n; ++col) {
      std::vector<int> raw = lead.entries();
      raw[static_cast<std::size_t>(r)] = col;
      const auto s = MultiIndex::from_unsorted(std::move(raw));
      if (s.sign == 0) continue;
      rows(static_cast<std::size_t>(r), static_cast<std::size_t>(col - 1)) = s.sign * v.coeff(s.index);
    }
  }
  Rational scale = 1;
  for (int i = 1; i < k; ++i) scale *= lead_coeff;
  for (int col = 0; col < n; ++col) rows(0, static_cast<std::size_t>(col)) /= scale;

  PointMatrix p(std::move(rows));
  if (wedge(p) != v) return std::nullopt;
  return p;
}

}  // namespace plucker
