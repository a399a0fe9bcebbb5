#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "extremal/index_set.hpp"
#include "extremal/rational.hpp"
#include "extremal/sparse_vec.hpp"

// The James-Schreier norm on finitely supported sequences:
//   ||x|| = max over permissible A = {n_1 < ... < n_{k+1}} of
//           nu(x, A) = sum_j |x_{n_j} - x_{n_{j+1}}|.
//
// Every permissible set can be cut down to one inside [1, max_index + 1]
// without lowering nu: coordinates past the support are all zero, so runs of
// zero-valued indices contribute nothing and one representative (the index
// max_index + 1) suffices. Dropping tail elements never breaks
// 2 <= |A| <= min A + 1 as long as one support index remains.
namespace extremal::v1 {

// Largest max_index accepted by norm_bruteforce.
inline constexpr int kBruteforceMaxIndex = 20;

// Throws std::invalid_argument if a is not permissible.
Rational nu(const SparseVec& x, const IndexSet& a);

struct NormWitness {
  Rational value;
  IndexSet witness;  // lexicographically smallest maximizing permissible set
};

// Exhaustive maximum of nu over permissible subsets of [1, max_index + 1].
// The zero vector returns (0, {1,2}). Throws std::invalid_argument when
// max_index exceeds kBruteforceMaxIndex.
NormWitness norm_bruteforce(const SparseVec& x);

// Same value by dynamic programming over (last index, elements used) for each
// starting index; O(n^4) rational operations.
Rational norm_dp(const SparseVec& x);

// Vectors known to lie in the unit ball.
enum class BallFixture {
  Unit,             // e_i, i <= 2
  HalfUnit,         // e_i / 2, i >= 3
  FirstPlusHalf,    // e_1 + e_j / 2, j >= 2
  HalfPair,         // (e_i +/- e_j) / 2, i <= 2 <= j
  Interval,         // chi_[1,j], j >= 2
  HalfInterval,     // chi_[i,j] / 2, 2 <= i < j
};

struct BallFixtureParams {
  int i = 0;
  int j = 0;
  int sign = 1;  // HalfPair only
};

// Throws std::invalid_argument if the parameters violate the kind's range.
SparseVec ball_fixture(BallFixture kind, const BallFixtureParams& params);

std::string_view ball_fixture_name(BallFixture kind);
std::optional<BallFixture> ball_fixture_from_name(std::string_view name);
inline constexpr BallFixture kAllBallFixtures[] = {BallFixture::Unit,          BallFixture::HalfUnit,
                                                   BallFixture::FirstPlusHalf, BallFixture::HalfPair,
                                                   BallFixture::Interval,      BallFixture::HalfInterval};

// sum_i theta_i e_{F_i}; theta entries must be +1 or -1.
SparseVec y_theta(const IndexSet& f, std::span<const int> theta);

enum class Side { Left, Right };

// Pads x with its boundary value on the flat run from j to the support edge:
// Left:  t * chi_[j, n-1] + x with n = min supp x, t = x_n, requires j < n.
// Right: x + t * chi_[n+1, j] with n = max supp x, t = x_n, requires j > n.
SparseVec extend_flat(const SparseVec& x, Side side, int j);

}  // namespace extremal::v1
