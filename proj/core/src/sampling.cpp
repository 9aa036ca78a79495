#include "plucker/sampling.hpp"

#include <stdexcept>

namespace plucker {

RMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, long low, long high) {
  std::uniform_int_distribution<long> dist(low, high);
  RMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
  }
  return m;
}

PointMatrix random_point_matrix(Rng& rng, int k, int n) {
  return PointMatrix(random_integer_matrix(rng, static_cast<std::size_t>(k), static_cast<std::size_t>(n)));
}

PointMatrix random_full_rank_point_matrix(Rng& rng, int k, int n) {
  while (true) {
    RMatrix m = random_integer_matrix(rng, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    if (rank(m) == static_cast<std::size_t>(k)) return PointMatrix(std::move(m));
  }
}

SpanEstimate sampled_span_rank(std::size_t dimension, std::size_t batch_size,
                               const std::function<RVector()>& sample) {
  std::vector<IVector> rows;
  SpanEstimate est;
  std::size_t previous = 0;
  while (true) {
    for (std::size_t i = 0; i < batch_size; ++i) {
      const RVector row = sample();
      if (row.size() != dimension) throw std::invalid_argument("sample has the wrong dimension");
      rows.push_back(integer_row(row));
      ++est.samples;
    }
    ++est.batches;
    const std::size_t current = integer_rank(rows, dimension);
    if (current == dimension || (est.batches > 1 && current == previous)) {
      est.rank = current;
      return est;
    }
    previous = current;
  }
}

}  // namespace plucker
