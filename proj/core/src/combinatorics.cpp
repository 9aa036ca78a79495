#include "plucker/combinatorics.hpp"

#include <algorithm>

namespace plucker {

Integer factorial(unsigned n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<std::vector<int>> subsets(int first, int last, int k) {
  std::vector<std::vector<int>> out;
  const int size = last - first + 1;
  if (k < 0 || k > size) return out;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[i] = first + i;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[i] == last - (k - 1 - i)) --i;
    if (i < 0) break;
    ++current[i];
    for (int j = i + 1; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

int sort_with_sign(std::vector<int>& values) {
  int sign = 1;
  // insertion sort; inputs are short
  for (std::size_t i = 1; i < values.size(); ++i) {
    for (std::size_t j = i; j > 0 && values[j - 1] >= values[j]; --j) {
      if (values[j - 1] == values[j]) return 0;
      std::swap(values[j - 1], values[j]);
      sign = -sign;
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i - 1] == values[i]) return 0;
  }
  return sign;
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<int> copy = perm;
  return sort_with_sign(copy);
}

}  // namespace plucker
