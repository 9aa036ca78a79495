#include <algorithm>
#include <cstdint>
#include <optional>

#include "plucker/exact_linalg.hpp"

namespace plucker {

namespace {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

// Miller-Rabin with a base set that is deterministic below 2^64.
bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = pow_mod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

const std::vector<u64>& primes() {
  static const std::vector<u64> list = [] {
    std::vector<u64> out;
    u64 candidate = (u64{1} << 62) - 1;
    while (out.size() < 8) {
      if (is_prime(candidate)) out.push_back(candidate);
      candidate -= 2;
    }
    return out;
  }();
  return list;
}

u64 residue(const Integer& x, u64 p) {
  // mpz_fdiv_ui gives the nonnegative residue.
  return mpz_fdiv_ui(x.get_mpz_t(), p);
}

// Reduced echelon basis of the row space mod p, pivots sorted ascending.
struct ModEchelon {
  std::vector<std::size_t> pivots;
  std::vector<std::vector<u64>> rows;
};

ModEchelon echelon_mod(const std::vector<IVector>& input, std::size_t cols, u64 p) {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
  std::vector<u64> v(cols);
  for (const auto& row : input) {
    for (std::size_t c = 0; c < cols; ++c) v[c] = residue(row[c], p);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const u64 f = v[pivots[i]];
      if (f == 0) continue;
      const auto& b = basis[i];
      for (std::size_t c = 0; c < cols; ++c) {
        if (b[c]) v[c] = (v[c] + p - mul_mod(f, b[c], p)) % p;
      }
    }
    std::size_t piv = 0;
    while (piv < cols && v[piv] == 0) ++piv;
    if (piv == cols) continue;
    const u64 inv = pow_mod(v[piv], p - 2, p);
    for (auto& x : v) x = mul_mod(x, inv, p);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const u64 f = basis[i][piv];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols; ++c) {
        if (v[c]) basis[i][c] = (basis[i][c] + p - mul_mod(f, v[c], p)) % p;
      }
    }
    basis.push_back(v);
    pivots.push_back(piv);
    if (basis.size() == cols) break;
  }
  std::vector<std::size_t> order(basis.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
  ModEchelon out;
  for (std::size_t i : order) {
    out.pivots.push_back(pivots[i]);
    out.rows.push_back(std::move(basis[i]));
  }
  return out;
}

// n/d with |n|, d <= sqrt(m/2) and n/d = a mod m, if one exists.
std::optional<Rational> reconstruct(const Integer& a, const Integer& m) {
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), Integer(m / 2).get_mpz_t());
  Integer r0 = m, r1 = a, t0 = 0, t1 = 1;
  while (r1 > bound) {
    const Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Rational out(r1, t1);
  out.canonicalize();
  return out;
}

std::size_t fraction_free_rank(const std::vector<IVector>& rows, std::size_t cols) {
  RowSpace space(cols);
  RVector buffer(cols);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < cols; ++c) buffer[c] = row[c];
    space.insert(buffer);
    if (space.rank() == cols) break;
  }
  return space.rank();
}

}  // namespace

std::size_t integer_rank(const std::vector<IVector>& rows, std::size_t cols) {
  if (rows.empty() || cols == 0) return 0;

  std::vector<std::size_t> pivots;
  std::vector<std::vector<Integer>> combined;  // residues of the non-pivot entries
  Integer modulus = 1;

  for (u64 p : primes()) {
    ModEchelon e = echelon_mod(rows, cols, p);
    if (e.pivots.size() == cols) return cols;

    // A prime that loses rank, or picks a later pivot set, is unlucky; a
    // better pivot set means the previous primes were the unlucky ones.
    if (e.pivots.size() < pivots.size() || (e.pivots.size() == pivots.size() && e.pivots > pivots)) continue;
    if (e.pivots != pivots || modulus == 1) {
      pivots = e.pivots;
      combined.assign(pivots.size(), std::vector<Integer>(cols));
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) combined[i][c] = Integer(std::to_string(e.rows[i][c]));
      }
      modulus = Integer(std::to_string(p));
    } else {
      const Integer pz(std::to_string(p));
      Integer inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
          // x = a + M * ((b - a) * M^{-1} mod p)
          Integer& a = combined[i][c];
          Integer t = (Integer(std::to_string(e.rows[i][c])) - a) * inv;
          mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
          a += modulus * t;
        }
      }
      modulus *= pz;
    }

    // Reconstruct the rational echelon basis and clear denominators.
    const std::size_t r = pivots.size();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis(r, std::vector<Rational>(cols));
    Integer denominator = 1;
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) {
      for (std::size_t c = 0; c < cols && ok; ++c) {
        if (is_pivot[c]) {
          basis[i][c] = c == pivots[i] ? 1 : 0;
          continue;
        }
        auto q = reconstruct(combined[i][c], modulus);
        if (!q) {
          ok = false;
          break;
        }
        basis[i][c] = *q;
        denominator = lcm(denominator, q->get_den());
      }
    }
    if (!ok) continue;
    std::vector<IVector> scaled(r, IVector(cols));
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t c = 0; c < cols; ++c) {
        scaled[i][c] = basis[i][c].get_num() * (denominator / basis[i][c].get_den());
      }
    }

    // Every input row must equal the combination of the basis selected by its
    // pivot entries; that bounds the rational rank by r.
    bool spans = true;
    Integer acc;
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < cols && spans; ++c) {
        if (is_pivot[c]) continue;
        acc = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if (sgn(row[pivots[i]]) != 0 && sgn(scaled[i][c]) != 0) acc += row[pivots[i]] * scaled[i][c];
        }
        if (acc != denominator * row[c]) spans = false;
      }
      if (!spans) break;
    }
    if (spans) return r;
  }
  return fraction_free_rank(rows, cols);
}

}  // namespace plucker
