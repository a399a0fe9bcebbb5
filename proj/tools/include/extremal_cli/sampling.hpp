#pragma once

#include <cstdint>
#include <random>

#include "extremal/sparse_vec.hpp"

// Seeded random inputs for the property runs. Only raw 64-bit draws from
// std::mt19937_64 are used (no distribution objects), so a seed reproduces
// the same inputs on every standard library.
namespace extremal::cli {

using Rng = std::mt19937_64;

std::uint64_t draw_below(Rng& rng, std::uint64_t bound);

// A random rational p/q with 1 <= |p| <= 2, 1 <= q <= 4.
Rational random_nonzero_rational(Rng& rng);

// Each index in [1, max_index] is nonzero with probability 1/2; the index
// max_index itself is always set, so max_index() == max_index.
SparseVec random_vector(Rng& rng, int max_index);

// A vector with exactly `support` nonzero coordinates spread over [1, window].
SparseVec random_vector_with_support(Rng& rng, int window, int support);

}  // namespace extremal::cli
