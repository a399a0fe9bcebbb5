#pragma once

#include <optional>
#include <string>
#include <vector>

#include "extremal/rational.hpp"
#include "extremal/signed_permutation.hpp"
#include "extremal/sparse_vec.hpp"

// Lorentz sequence space d(w,1) and its predual d_*(w,1) on finitely
// supported vectors.
//
//   ||x||_{w,1} = sum_i x~_i w_i              (x~ the decreasing rearrangement of |x|)
//   ||x||_W     = max_n (x~_1 + ... + x~_n) / W(n),   W(n) = w_1 + ... + w_n
namespace extremal::lorentz {

// w_1..w_n together with the prefix sums W(0) = 0, W(1), ..., W(n).
class TruncatedWeights {
 public:
  TruncatedWeights(std::vector<Rational> weights);

  int size() const { return static_cast<int>(weights_.size()); }
  const Rational& weight(int n) const { return weights_.at(static_cast<std::size_t>(n - 1)); }
  const Rational& prefix(int n) const { return prefix_.at(static_cast<std::size_t>(n)); }

 private:
  std::vector<Rational> weights_;
  std::vector<Rational> prefix_;
};

// Strictly decreasing positive weights. Only generators with exact rational
// values are representable; anything else is rejected at construction or
// when a weight cannot be materialized exactly.
class WeightSeq {
 public:
  enum class Generator { Harmonic, Power, Explicit };

  // w_n = 1/n.
  static WeightSeq harmonic();
  // w_n = n^{-q}, 0 < q <= 1. Materializing w_n throws std::invalid_argument
  // when n^{-q} is irrational, so only q = 1 survives past n = 1.
  static WeightSeq power(const Rational& q);
  // A finite explicit list; must be strictly decreasing and positive.
  static WeightSeq explicit_values(std::vector<Rational> values);

  // lambda * w, lambda > 0.
  WeightSeq scaled(const Rational& factor) const;

  Generator generator() const { return generator_; }
  const Rational& scale() const { return scale_; }
  const Rational& exponent() const { return exponent_; }
  const std::vector<Rational>& values() const { return values_; }

  Rational weight(int n) const;
  // Throws std::invalid_argument past the end of an explicit list or when a
  // weight is not exactly representable.
  TruncatedWeights truncate(int n) const;

  // Explicit lists say nothing about w in c_0 \ l_1; reports flag them.
  bool asymptotics_unverified() const { return generator_ == Generator::Explicit; }

  std::string describe() const;

 private:
  Generator generator_ = Generator::Harmonic;
  Rational scale_ = 1;
  Rational exponent_ = 1;
  std::vector<Rational> values_;
};

std::vector<Rational> decreasing_rearrangement(const SparseVec& x);

Rational lorentz_norm(const SparseVec& x, const WeightSeq& w);

// x is an extreme point of the unit ball iff its nonzero coordinates all have
// absolute value 1/W(n_0), n_0 = |supp x| (and w_1 > w_{n_0} when n_0 > 1,
// automatic for strictly decreasing weights).
bool lorentz_extreme_check(const SparseVec& x, const WeightSeq& w);

// (1/W(|A|)) * eps * chi_A for every nonempty A in [1, n] and every sign
// pattern eps; ordered by A (lexicographic), then eps with -1 before +1.
// 3^n - 1 points.
std::vector<SparseVec> enumerate_lorentz_extremes(int n, const WeightSeq& w);

// Partial sums of x~ stop growing past |supp x| while W keeps increasing, so
// the maximum is over n <= |supp x|.
Rational predual_norm(const SparseVec& x, const WeightSeq& w);

struct PairingCheck {
  Rational pairing;  // sum_i x_i y_i
  bool bound_holds;  // |pairing| <= ||x||_W * ||y||_{w,1}
};

PairingCheck pairing_check(const SparseVec& y, const SparseVec& x, const WeightSeq& w);

// y(pi, n) = sum_{i<=n} sgn(y_{pi(i)}) w_i e_{pi(i)} with pi ordering |y|
// decreasingly (ties by index) and n = |supp y|: a unit vector of the
// predual at which y attains its Lorentz norm.
SparseVec attaining_predual_vector(const SparseVec& y, const WeightSeq& w);

// lambda = v_1 / w_1 if v_n = lambda w_n for every n <= depth.
std::optional<Rational> weights_proportional(const WeightSeq& v, const WeightSeq& w, int depth);

// x -> (lambda eps_n x_{pi(n)})_n.
struct StandardIsometry {
  Rational lambda = 1;
  SignedPermutation map;
};

// Throws std::invalid_argument if lambda <= 0 or supp x leaves the window.
SparseVec standard_isometry_apply(const StandardIsometry& t, const SparseVec& x);

// True iff t maps the unit ball of the n-dimensional truncation of d(v,1)
// onto that of d(w,1): t sends every extreme point of B_v to the sphere of w
// and t^{-1} sends every extreme point of B_w to the sphere of v.
bool is_truncated_isometry(const StandardIsometry& t, const WeightSeq& v, const WeightSeq& w, int n);

struct RigidityReport {
  Rational lambda;                          // candidate scale v_1 / w_1
  std::optional<Rational> proportional;     // weights_proportional(v, w, n)
  std::vector<SignedPermutation> isometries;  // signed permutations that work at scale lambda
  bool asymptotics_unverified = false;
};

// Searches all lambda-scaled signed permutations of [1..n] for isometries
// between the truncations. Requires 2 <= n <= 6.
RigidityReport rigidity_check(const WeightSeq& v, const WeightSeq& w, int n);

inline constexpr int kRigidityMaxN = 6;

}  // namespace extremal::lorentz
