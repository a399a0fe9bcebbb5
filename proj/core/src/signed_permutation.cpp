#include "extremal/signed_permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace extremal {

SignedPermutation::SignedPermutation(std::vector<int> pi, std::vector<int> eps)
    : pi_(std::move(pi)), eps_(std::move(eps)) {
  if (pi_.size() != eps_.size()) throw std::invalid_argument("pi and eps must have the same length");
  std::vector<char> seen(pi_.size() + 1, 0);
  for (int p : pi_) {
    if (p < 1 || p > static_cast<int>(pi_.size()) || seen[static_cast<std::size_t>(p)]) {
      throw std::invalid_argument("pi is not a bijection of [1.." + std::to_string(pi_.size()) + "]");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
  for (int e : eps_) {
    if (e != 1 && e != -1) throw std::invalid_argument("eps entries must be +/-1");
  }
}

SignedPermutation SignedPermutation::identity(int n, int sign) {
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  return SignedPermutation(std::move(pi), std::vector<int>(static_cast<std::size_t>(n), sign));
}

SparseVec SignedPermutation::apply(const SparseVec& x) const {
  if (x.max_index() > size()) {
    throw std::invalid_argument("vector support reaches index " + std::to_string(x.max_index()) +
                                " outside the window [1," + std::to_string(size()) + "]");
  }
  SparseVec out;
  for (int m = 1; m <= size(); ++m) {
    const auto k = static_cast<std::size_t>(m - 1);
    out.set(m, Rational(eps_[k]) * x.get(pi_[k]));
  }
  return out;
}

SparseVec SignedPermutation::pull_back(const SparseVec& g) const {
  if (g.max_index() > size()) {
    throw std::invalid_argument("functional support reaches index " + std::to_string(g.max_index()) +
                                " outside the window [1," + std::to_string(size()) + "]");
  }
  // (g o T)(x) = sum_m g_m eps_m x_{pi(m)}.
  SparseVec out;
  for (const auto& [m, v] : g) {
    const auto k = static_cast<std::size_t>(m - 1);
    out.set(pi_[k], Rational(eps_[k]) * v);
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  // x_{pi(m)} = eps_m y_m, so (T^-1 y)_k = eps_{pi^-1(k)} y_{pi^-1(k)}.
  std::vector<int> pi(pi_.size()), eps(eps_.size());
  for (std::size_t m = 0; m < pi_.size(); ++m) {
    const auto k = static_cast<std::size_t>(pi_[m] - 1);
    pi[k] = static_cast<int>(m) + 1;
    eps[k] = eps_[m];
  }
  return SignedPermutation(std::move(pi), std::move(eps));
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing signed permutations of different sizes");
  // (S(T x))_m = eps^S_m eps^T_{pi_S(m)} x_{pi_T(pi_S(m))}.
  std::vector<int> pi(pi_.size()), eps(eps_.size());
  for (std::size_t m = 0; m < pi_.size(); ++m) {
    const auto mid = static_cast<std::size_t>(pi_[m] - 1);
    pi[m] = other.pi_[mid];
    eps[m] = eps_[m] * other.eps_[mid];
  }
  return SignedPermutation(std::move(pi), std::move(eps));
}

bool SignedPermutation::is_identity() const { return *this == identity(size(), 1); }

bool SignedPermutation::is_negated_identity() const { return *this == identity(size(), -1); }

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (std::size_t m = 0; m < pi_.size(); ++m) {
    if (m > 0) out += " ";
    out += (eps_[m] < 0 ? "-" : "+") + std::to_string(pi_[m]);
  }
  return out + "]";
}

void for_each_signed_permutation(int n, const std::function<bool(const SignedPermutation&)>& visit) {
  if (n < 1) throw std::invalid_argument("signed permutations need n >= 1");
  std::vector<int> pi(static_cast<std::size_t>(n));
  std::iota(pi.begin(), pi.end(), 1);
  const unsigned long sign_patterns = 1UL << n;
  do {
    for (unsigned long mask = 0; mask < sign_patterns; ++mask) {
      std::vector<int> eps(static_cast<std::size_t>(n));
      for (int b = 0; b < n; ++b) eps[static_cast<std::size_t>(b)] = (mask >> (n - 1 - b)) & 1UL ? 1 : -1;
      if (!visit(SignedPermutation(pi, std::move(eps)))) return;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
}

}  // namespace extremal
