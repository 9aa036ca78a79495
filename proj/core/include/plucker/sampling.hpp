#pragma once

// Seeded random samplers and the rank-stabilization loop shared by the
// sampling oracles. Integer entries are uniform in [-9, 9] unless stated.

#include <cstdint>
#include <functional>
#include <random>

#include "plucker/exact_linalg.hpp"
#include "plucker/exterior.hpp"

namespace plucker {

using Rng = std::mt19937_64;

inline constexpr long kSampleLow = -9;
inline constexpr long kSampleHigh = 9;

RMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, long low = kSampleLow,
                              long high = kSampleHigh);

PointMatrix random_point_matrix(Rng& rng, int k, int n);

/// Redraws until the k rows are independent.
PointMatrix random_full_rank_point_matrix(Rng& rng, int k, int n);

struct SpanEstimate {
  std::size_t rank = 0;
  std::size_t samples = 0;
  std::size_t batches = 0;
};

/// Inserts batches of `batch_size` sampled rows until a whole batch leaves the
/// rank unchanged (or the rank reaches `dimension`).
SpanEstimate sampled_span_rank(std::size_t dimension, std::size_t batch_size,
                               const std::function<RVector()>& sample);

}  // namespace plucker
