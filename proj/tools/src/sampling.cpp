#include "extremal_cli/sampling.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace extremal::cli {

std::uint64_t draw_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("draw_below needs a positive bound");
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t v = rng();
  while (v >= limit) v = rng();
  return v % bound;
}

Rational random_nonzero_rational(Rng& rng) {
  const auto magnitude = static_cast<long>(draw_below(rng, 2)) + 1;
  const long p = draw_below(rng, 2) ? magnitude : -magnitude;
  const auto q = static_cast<long>(draw_below(rng, 4)) + 1;
  return ratio(p, q);
}

SparseVec random_vector(Rng& rng, int max_index) {
  if (max_index < 1) throw std::invalid_argument("random_vector needs max_index >= 1");
  SparseVec x;
  for (int i = 1; i < max_index; ++i) {
    if (draw_below(rng, 2)) x.set(i, random_nonzero_rational(rng));
  }
  x.set(max_index, random_nonzero_rational(rng));
  return x;
}

SparseVec random_vector_with_support(Rng& rng, int window, int support) {
  if (support < 0 || support > window) throw std::invalid_argument("support size must lie in [0, window]");
  std::vector<int> indices(static_cast<std::size_t>(window));
  std::iota(indices.begin(), indices.end(), 1);
  // Partial Fisher-Yates: the first `support` slots become a uniform sample.
  for (int k = 0; k < support; ++k) {
    const auto pick = k + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(window - k)));
    std::swap(indices[static_cast<std::size_t>(k)], indices[static_cast<std::size_t>(pick)]);
  }
  SparseVec x;
  for (int k = 0; k < support; ++k) x.set(indices[static_cast<std::size_t>(k)], random_nonzero_rational(rng));
  return x;
}

}  // namespace extremal::cli
