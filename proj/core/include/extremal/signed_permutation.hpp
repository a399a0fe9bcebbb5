#pragma once

#include <functional>
#include <string>
#include <vector>

#include "extremal/sparse_vec.hpp"

namespace extremal {

// The linear map (T x)_m = eps_m * x_{pi(m)} on span{e_1, ..., e_n}.
// pi and eps are stored 1-based in value, 0-based in position: pi[m-1] is
// pi(m).
class SignedPermutation {
 public:
  SignedPermutation() = default;
  // Throws std::invalid_argument unless pi is a bijection of [1..n] and
  // every eps entry is +/-1.
  SignedPermutation(std::vector<int> pi, std::vector<int> eps);

  static SignedPermutation identity(int n, int sign = 1);

  int size() const { return static_cast<int>(pi_.size()); }
  const std::vector<int>& pi() const { return pi_; }
  const std::vector<int>& eps() const { return eps_; }

  // Throws std::invalid_argument if supp x escapes [1, n].
  SparseVec apply(const SparseVec& x) const;
  // The functional g o T, i.e. the adjoint applied to g.
  SparseVec pull_back(const SparseVec& g) const;

  SignedPermutation inverse() const;
  // (this o other)(x) = this(other(x)).
  SignedPermutation compose(const SignedPermutation& other) const;

  bool is_identity() const;
  bool is_negated_identity() const;

  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

  std::string to_string() const;

 private:
  std::vector<int> pi_;
  std::vector<int> eps_;
};

// Visits all 2^n * n! signed permutations of [1..n]: permutations in
// lexicographic order, and for each the sign vectors in binary order with
// -1 before +1. Stops early when visit returns false.
void for_each_signed_permutation(int n, const std::function<bool(const SignedPermutation&)>& visit);

}  // namespace extremal
