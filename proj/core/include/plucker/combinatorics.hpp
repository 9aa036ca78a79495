#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "plucker/rational.hpp"

namespace plucker {

Integer factorial(unsigned n);

/// C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// All k-element subsets of {first, ..., last}, each increasing, in
/// lexicographic order.
std::vector<std::vector<int>> subsets(int first, int last, int k);

/// Sorts `values` in place and returns the sign of the sorting permutation,
/// or 0 when a value repeats.
int sort_with_sign(std::vector<int>& values);

/// Sign of the permutation given in one-line notation over 0..n-1.
int permutation_sign(const std::vector<int>& perm);

}  // namespace plucker
