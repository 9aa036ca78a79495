#include "plucker/sym_power.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "plucker/combinatorics.hpp"

namespace plucker {

void validate_parameters(int m, int n, int k) {
  if (m < 1) throw std::invalid_argument("symmetric degree m must be >= 1");
  if (k < 1 || k > n) throw std::invalid_argument("exterior degree requires 1 <= k <= n");
}

SymBasisVector::SymBasisVector(std::vector<MultiIndex> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.size() != components_.front().size()) {
      throw std::invalid_argument("components of a symmetric basis vector must share one arity");
    }
  }
  std::sort(components_.begin(), components_.end());
}

int SymBasisVector::max_letter() const {
  int out = 0;
  for (const auto& c : components_) out = std::max(out, c.max_entry());
  return out;
}

std::string SymBasisVector::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i > 0) out += ',';
    out += components_[i].label();
  }
  return out + ")";
}

std::string Chain::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < content.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(content[i]);
  }
  return out + ")";
}

bool satisfies_chain_conditions(const Chain& c, int m, int n, int k) {
  if (c.n() != n) return false;
  int total = 0;
  int support = 0;
  for (int ki : c.content) {
    if (ki < 0 || ki > m) return false;
    total += ki;
    if (ki > 0) ++support;
  }
  return total == m * k && support >= k;
}

SymTensor::SymTensor(int m, int n, int k) : m_(m), n_(n), k_(k) { validate_parameters(m, n, k); }

SymTensor SymTensor::basis(int n, const SymBasisVector& v) {
  SymTensor t(v.degree(), n, v.arity());
  t.set(v, 1);
  return t;
}

void SymTensor::check(const SymBasisVector& v) const {
  if (v.degree() != m_ || v.arity() != k_ || v.max_letter() > n_) {
    throw std::invalid_argument("basis vector does not belong to V(" + std::to_string(m_) + "," +
                                std::to_string(n_) + "," + std::to_string(k_) + ")");
  }
}

void SymTensor::check_compatible(const SymTensor& other) const {
  if (other.m_ != m_ || other.n_ != n_ || other.k_ != k_) {
    throw std::invalid_argument("symmetric power parameters differ");
  }
}

Rational SymTensor::coeff(const SymBasisVector& v) const {
  const auto it = terms_.find(v);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymTensor::add(const SymBasisVector& v, const Rational& value) {
  check(v);
  if (sgn(value) == 0) return;
  auto [it, inserted] = terms_.try_emplace(v, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void SymTensor::set(const SymBasisVector& v, const Rational& value) {
  check(v);
  if (sgn(value) == 0) {
    terms_.erase(v);
  } else {
    terms_[v] = value;
  }
}

SymTensor& SymTensor::operator+=(const SymTensor& other) {
  check_compatible(other);
  for (const auto& [v, q] : other.terms_) add(v, q);
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& other) {
  check_compatible(other);
  for (const auto& [v, q] : other.terms_) add(v, -q);
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [v, q] : terms_) q *= scalar;
  return *this;
}

Integer lambda_coeff(const SymBasisVector& v) {
  const auto& comps = v.components();
  Integer out = factorial(static_cast<unsigned>(comps.size()));
  std::size_t run = 1;
  for (std::size_t i = 1; i <= comps.size(); ++i) {
    if (i < comps.size() && comps[i] == comps[i - 1]) {
      ++run;
    } else {
      out /= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  return out;
}

Integer dim_V(int m, int n, int k) {
  validate_parameters(m, n, k);
  const Integer t = binomial(n, k);
  return binomial(static_cast<long>(m) + to_size(t) - 1, m);
}

Rational inner_product(const SymTensor& u, const SymTensor& w) {
  if (u.m() != w.m() || u.n() != w.n() || u.k() != w.k()) {
    throw std::invalid_argument("inner product of tensors from different spaces");
  }
  const SymTensor& small = u.terms().size() <= w.terms().size() ? u : w;
  const SymTensor& large = &small == &u ? w : u;
  Rational total = 0;
  for (const auto& [v, q] : small.terms()) {
    const auto it = large.terms().find(v);
    if (it != large.terms().end()) total += q * it->second;
  }
  return total;
}

Chain content(const SymBasisVector& v, int n) {
  Chain c{std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (const auto& comp : v.components()) {
    for (int letter : comp) {
      if (letter > n) throw std::invalid_argument("letter exceeds ambient dimension");
      ++c.content[static_cast<std::size_t>(letter - 1)];
    }
  }
  return c;
}

std::vector<SymBasisVector> canonical_basis(int m, int n, int k) {
  validate_parameters(m, n, k);
  const auto indices = basis_indices(n, k);
  std::vector<SymBasisVector> out;
  std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<MultiIndex> comps;
    comps.reserve(pos.size());
    for (std::size_t p : pos) comps.push_back(indices[p]);
    out.emplace_back(std::move(comps));
    // next nondecreasing position tuple
    int i = m - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == indices.size() - 1) --i;
    if (i < 0) break;
    const std::size_t next = pos[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < m; ++j) pos[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

std::vector<Chain> enumerate_chains(int m, int n, int k) {
  validate_parameters(m, n, k);
  std::vector<Chain> out;
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  const int total = m * k;
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == n) {
      if (remaining == 0) {
        Chain c{current};
        if (satisfies_chain_conditions(c, m, n, k)) out.push_back(std::move(c));
      }
      return;
    }
    const int slots_after = n - pos - 1;
    for (int v = std::min(m, remaining); v >= 0; --v) {
      if (remaining - v > slots_after * m) break;
      current[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, remaining - v);
    }
    current[static_cast<std::size_t>(pos)] = 0;
  };
  rec(0, total);
  // Every content with k_i <= m and sum mk is realized by filling a k x m grid
  // column by column with the letters in order, so no chain is empty.
  return out;
}

std::vector<SymBasisVector> chain_members(const Chain& c, int m, int n, int k) {
  validate_parameters(m, n, k);
  if (!satisfies_chain_conditions(c, m, n, k)) {
    throw std::invalid_argument("content " + c.label() + " is not a chain of V(" + std::to_string(m) + "," +
                                std::to_string(n) + "," + std::to_string(k) + ")");
  }
  std::vector<int> remaining = c.content;
  std::vector<MultiIndex> chosen;
  std::vector<SymBasisVector> out;

  std::function<void(int)> rec = [&](int depth) {
    if (depth == m) {
      out.emplace_back(chosen);
      return;
    }
    std::vector<int> letters;
    for (int i = 0; i < n; ++i) {
      if (remaining[static_cast<std::size_t>(i)] > 0) letters.push_back(i + 1);
    }
    const int left_after = m - depth - 1;
    for (const auto& pick : subsets(0, static_cast<int>(letters.size()) - 1, k)) {
      std::vector<int> entries;
      entries.reserve(static_cast<std::size_t>(k));
      for (int p : pick) entries.push_back(letters[static_cast<std::size_t>(p)]);
      MultiIndex comp(std::move(entries));
      if (!chosen.empty() && comp < chosen.back()) continue;
      for (int letter : comp) --remaining[static_cast<std::size_t>(letter - 1)];
      const bool feasible = std::all_of(remaining.begin(), remaining.end(), [&](int r) { return r <= left_after; });
      if (feasible) {
        chosen.push_back(comp);
        rec(depth + 1);
        chosen.pop_back();
      }
      for (int letter : comp) ++remaining[static_cast<std::size_t>(letter - 1)];
    }
  };
  rec(0);
  return out;
}

bool is_invariant(const SymBasisVector& v, int n) {
  return chain_members(content(v, n), v.degree(), n, v.arity()).size() == 1;
}

SymTensor project(const SymTensor& u, const Chain& c) {
  SymTensor out(u.m(), u.n(), u.k());
  for (const auto& [v, q] : u.terms()) {
    if (content(v, u.n()) == c) out.set(v, q);
  }
  return out;
}

Rational power_coordinate(const ExtVector& w, const SymBasisVector& v) {
  Rational product(lambda_coeff(v));
  for (const auto& comp : v.components()) {
    const auto it = w.terms().find(comp);
    if (it == w.terms().end()) return 0;
    product *= it->second;
  }
  return product;
}

SymTensor sym_power(const ExtVector& w, int m) {
  SymTensor out(m, w.n(), w.k());
  std::vector<const MultiIndex*> support;
  for (const auto& [alpha, q] : w.terms()) support.push_back(&alpha);
  if (support.empty()) return out;

  std::vector<std::size_t> pos(static_cast<std::size_t>(m), 0);
  while (true) {
    std::vector<MultiIndex> comps;
    comps.reserve(pos.size());
    for (std::size_t p : pos) comps.push_back(*support[p]);
    SymBasisVector v(std::move(comps));
    out.set(v, power_coordinate(w, v));
    int i = m - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == support.size() - 1) --i;
    if (i < 0) break;
    const std::size_t next = pos[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < m; ++j) pos[static_cast<std::size_t>(j)] = next;
  }
  return out;
}

SymTensor sym_power_of_decomposable(const PointMatrix& p, int m) { return sym_power(wedge(p), m); }

SymTensor sym_product(const std::vector<ExtVector>& factors) {
  if (factors.empty()) throw std::invalid_argument("symmetric product needs at least one factor");
  const int n = factors.front().n();
  const int k = factors.front().k();
  std::map<std::vector<MultiIndex>, Rational> partial{{{}, Rational(1)}};
  for (const auto& f : factors) {
    if (f.n() != n || f.k() != k) throw std::invalid_argument("factors from different exterior powers");
    std::map<std::vector<MultiIndex>, Rational> next;
    for (const auto& [key, q] : partial) {
      for (const auto& [alpha, c] : f.terms()) {
        std::vector<MultiIndex> grown = key;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), alpha), alpha);
        next[std::move(grown)] += q * c;
      }
    }
    partial = std::move(next);
  }
  SymTensor out(static_cast<int>(factors.size()), n, k);
  for (auto& [key, q] : partial) out.add(SymBasisVector(key), q);
  return out;
}

Chain full_chain(int m, int k) { return Chain{std::vector<int>(static_cast<std::size_t>(m * k), 1)}; }

namespace {

std::vector<int> substitution(const Chain& c) {
  std::vector<int> image;
  for (int i = 0; i < c.n(); ++i) {
    for (int r = 0; r < c.content[static_cast<std::size_t>(i)]; ++r) image.push_back(i + 1);
  }
  return image;
}

}  // namespace

std::optional<SignedBasisVector> phi_push(const SymBasisVector& v, const Chain& c) {
  const int m = v.degree();
  const int k = v.arity();
  const int letters = m * k;
  if (content(v, std::max(letters, v.max_letter())) != full_chain(m, k)) {
    throw std::invalid_argument("phi_push expects a vector of the full chain on m*k letters");
  }
  if (!satisfies_chain_conditions(c, m, c.n(), k)) {
    throw std::invalid_argument("target content is not a chain for these parameters");
  }
  const std::vector<int> image = substitution(c);
  int sign = 1;
  std::vector<MultiIndex> comps;
  comps.reserve(static_cast<std::size_t>(m));
  for (const auto& comp : v.components()) {
    std::vector<int> raw;
    raw.reserve(comp.size());
    for (int letter : comp) raw.push_back(image[static_cast<std::size_t>(letter - 1)]);
    auto s = MultiIndex::from_unsorted(std::move(raw));
    if (s.sign == 0) return std::nullopt;
    sign *= s.sign;
    comps.push_back(std::move(s.index));
  }
  return SignedBasisVector{sign, SymBasisVector(std::move(comps))};
}

SymTensor phi_push(const SymTensor& u, const Chain& c) {
  SymTensor out(u.m(), c.n(), u.k());
  for (const auto& [v, q] : u.terms()) {
    if (auto image = phi_push(v, c)) out.add(image->vector, image->sign * q);
  }
  return out;
}

BasisIndex::BasisIndex(std::vector<SymBasisVector> basis) : basis_(std::move(basis)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) positions_.emplace(basis_[i], i);
}

std::optional<std::size_t> BasisIndex::position(const SymBasisVector& v) const {
  const auto it = positions_.find(v);
  if (it == positions_.end()) return std::nullopt;
  return it->second;
}

RVector BasisIndex::dense(const SymTensor& u) const {
  RVector out(basis_.size());
  for (const auto& [v, q] : u.terms()) {
    if (auto p = position(v)) out[*p] = q;
  }
  return out;
}

}  // namespace plucker
