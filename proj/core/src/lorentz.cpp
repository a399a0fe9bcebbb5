#include "extremal/lorentz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "extremal/dualspace.hpp"

namespace extremal::lorentz {

TruncatedWeights::TruncatedWeights(std::vector<Rational> weights) : weights_(std::move(weights)) {
  prefix_.assign(weights_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0) throw std::invalid_argument("weights must be positive");
    if (i > 0 && weights_[i] >= weights_[i - 1]) throw std::invalid_argument("weights must be strictly decreasing");
    prefix_[i + 1] = prefix_[i] + weights_[i];
  }
}

WeightSeq WeightSeq::harmonic() { return WeightSeq{}; }

WeightSeq WeightSeq::power(const Rational& q) {
  if (q <= 0 || q > 1) throw std::invalid_argument("power weights need 0 < q <= 1, got " + to_string(q));
  WeightSeq w;
  w.generator_ = Generator::Power;
  w.exponent_ = q;
  return w;
}

WeightSeq WeightSeq::explicit_values(std::vector<Rational> values) {
  if (values.empty()) throw std::invalid_argument("explicit weights need at least one value");
  TruncatedWeights check(values);  // validates
  WeightSeq w;
  w.generator_ = Generator::Explicit;
  w.values_ = std::move(values);
  return w;
}

WeightSeq WeightSeq::scaled(const Rational& factor) const {
  if (factor <= 0) throw std::invalid_argument("weight scale must be positive, got " + to_string(factor));
  WeightSeq w = *this;
  w.scale_ *= factor;
  return w;
}

Rational WeightSeq::weight(int n) const {
  if (n < 1) throw std::invalid_argument("weights are indexed from 1");
  switch (generator_) {
    case Generator::Harmonic:
      return Rational(scale_ / n);
    case Generator::Power: {
      const mpz_class& a = exponent_.get_num();
      const mpz_class& b = exponent_.get_den();
      mpz_class base;
      mpz_pow_ui(base.get_mpz_t(), mpz_class(n).get_mpz_t(), a.get_ui());
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), base.get_mpz_t(), b.get_ui()) == 0) {
        throw std::invalid_argument("power weight " + std::to_string(n) + "^(-" + to_string(exponent_) +
                                    ") is irrational");
      }
      return Rational(scale_ / root);
    }
    case Generator::Explicit:
      if (n > static_cast<int>(values_.size())) {
        throw std::invalid_argument("explicit weights have only " + std::to_string(values_.size()) +
                                    " values, weight " + std::to_string(n) + " requested");
      }
      return Rational(scale_ * values_[static_cast<std::size_t>(n - 1)]);
  }
  throw std::logic_error("unknown weight generator");
}

TruncatedWeights WeightSeq::truncate(int n) const {
  if (n < 0) throw std::invalid_argument("negative truncation length");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) out.push_back(weight(i));
  return TruncatedWeights(std::move(out));
}

std::string WeightSeq::describe() const {
  std::string base;
  switch (generator_) {
    case Generator::Harmonic:
      base = "harmonic";
      break;
    case Generator::Power:
      base = "power(" + to_string(exponent_) + ")";
      break;
    case Generator::Explicit: {
      base = "explicit(";
      for (std::size_t i = 0; i < values_.size(); ++i) base += (i ? "," : "") + to_string(values_[i]);
      base += ")";
      break;
    }
  }
  return scale_ == 1 ? base : to_string(scale_) + "*" + base;
}

std::vector<Rational> decreasing_rearrangement(const SparseVec& x) {
  std::vector<Rational> out;
  out.reserve(x.support_size());
  for (const auto& [_, v] : x) out.push_back(abs(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

Rational lorentz_norm_with(const std::vector<Rational>& sorted, const TruncatedWeights& w) {
  Rational total = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) total += sorted[i] * w.weight(static_cast<int>(i) + 1);
  return total;
}

Rational lorentz_norm_with(const SparseVec& x, const TruncatedWeights& w) {
  return lorentz_norm_with(decreasing_rearrangement(x), w);
}

}  // namespace

Rational lorentz_norm(const SparseVec& x, const WeightSeq& w) {
  return lorentz_norm_with(x, w.truncate(static_cast<int>(x.support_size())));
}

bool lorentz_extreme_check(const SparseVec& x, const WeightSeq& w) {
  if (x.is_zero()) return false;
  const int n0 = static_cast<int>(x.support_size());
  const TruncatedWeights tw = w.truncate(n0);
  const Rational height = 1 / tw.prefix(n0);
  for (const auto& [_, v] : x) {
    if (abs(v) != height) return false;
  }
  return n0 == 1 || tw.weight(1) > tw.weight(n0);
}

std::vector<SparseVec> enumerate_lorentz_extremes(int n, const WeightSeq& w) {
  if (n < 1) throw std::invalid_argument("enumerate_lorentz_extremes needs n >= 1");
  const TruncatedWeights tw = w.truncate(n);
  std::vector<SparseVec> out;
  std::vector<int> subset;
  std::function<void(int)> visit = [&](int from) {
    if (!subset.empty()) {
      const auto k = subset.size();
      const Rational height = 1 / tw.prefix(static_cast<int>(k));
      for (unsigned long mask = 0; mask < (1UL << k); ++mask) {
        SparseVec v;
        for (std::size_t b = 0; b < k; ++b) {
          const bool plus = (mask >> (k - 1 - b)) & 1UL;
          v.set(subset[b], plus ? height : Rational(-height));
        }
        out.push_back(std::move(v));
      }
    }
    for (int next = from; next <= n; ++next) {
      subset.push_back(next);
      visit(next + 1);
      subset.pop_back();
    }
  };
  visit(1);
  return out;
}

Rational predual_norm(const SparseVec& x, const WeightSeq& w) {
  if (x.is_zero()) return 0;
  const auto sorted = decreasing_rearrangement(x);
  const TruncatedWeights tw = w.truncate(static_cast<int>(sorted.size()));
  Rational best = 0;
  Rational partial = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    partial += sorted[i];
    Rational ratio = partial / tw.prefix(static_cast<int>(i) + 1);
    if (ratio > best) best = std::move(ratio);
  }
  return best;
}

PairingCheck pairing_check(const SparseVec& y, const SparseVec& x, const WeightSeq& w) {
  Rational pairing = dual::evaluate(y, x);
  const Rational bound = predual_norm(x, w) * lorentz_norm(y, w);
  const bool holds = abs(pairing) <= bound;
  return {std::move(pairing), holds};
}

SparseVec attaining_predual_vector(const SparseVec& y, const WeightSeq& w) {
  std::vector<std::pair<int, Rational>> entries(y.begin(), y.end());
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return abs(a.second) > abs(b.second); });
  const TruncatedWeights tw = w.truncate(static_cast<int>(entries.size()));
  SparseVec out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out.set(entries[i].first, Rational(sgn(entries[i].second)) * tw.weight(static_cast<int>(i) + 1));
  }
  return out;
}

std::optional<Rational> weights_proportional(const WeightSeq& v, const WeightSeq& w, int depth) {
  if (depth < 1) throw std::invalid_argument("proportionality depth must be >= 1");
  const TruncatedWeights tv = v.truncate(depth);
  const TruncatedWeights tw = w.truncate(depth);
  Rational lambda = tv.weight(1) / tw.weight(1);
  for (int n = 2; n <= depth; ++n) {
    if (tv.weight(n) != lambda * tw.weight(n)) return std::nullopt;
  }
  return lambda;
}

SparseVec standard_isometry_apply(const StandardIsometry& t, const SparseVec& x) {
  if (t.lambda <= 0) throw std::invalid_argument("standard isometry scale must be positive");
  return t.lambda * t.map.apply(x);
}

namespace {

struct TruncatedSpace {
  TruncatedWeights weights;
  std::vector<SparseVec> extremes;

  TruncatedSpace(const WeightSeq& w, int n) : weights(w.truncate(n)), extremes(enumerate_lorentz_extremes(n, w)) {}
};

bool maps_sphere(const StandardIsometry& t, const TruncatedSpace& from, const TruncatedSpace& to) {
  for (const auto& e : from.extremes) {
    if (lorentz_norm_with(standard_isometry_apply(t, e), to.weights) != 1) return false;
  }
  return true;
}

bool is_isometry_between(const StandardIsometry& t, const TruncatedSpace& from, const TruncatedSpace& to) {
  if (!maps_sphere(t, from, to)) return false;
  const StandardIsometry back{1 / t.lambda, t.map.inverse()};
  return maps_sphere(back, to, from);
}

}  // namespace

bool is_truncated_isometry(const StandardIsometry& t, const WeightSeq& v, const WeightSeq& w, int n) {
  if (t.map.size() != n) throw std::invalid_argument("isometry window does not match the truncation");
  return is_isometry_between(t, TruncatedSpace(v, n), TruncatedSpace(w, n));
}

RigidityReport rigidity_check(const WeightSeq& v, const WeightSeq& w, int n) {
  if (n < 2 || n > kRigidityMaxN) {
    throw std::invalid_argument("rigidity_check needs 2 <= n <= " + std::to_string(kRigidityMaxN) + ", got " +
                                std::to_string(n));
  }
  const TruncatedSpace from(v, n);
  const TruncatedSpace to(w, n);
  RigidityReport report;
  report.lambda = from.weights.weight(1) / to.weights.weight(1);
  report.proportional = weights_proportional(v, w, n);
  report.asymptotics_unverified = v.asymptotics_unverified() || w.asymptotics_unverified();
  for_each_signed_permutation(n, [&](const SignedPermutation& p) {
    if (is_isometry_between(StandardIsometry{report.lambda, p}, from, to)) report.isometries.push_back(p);
    return true;
  });
  return report;
}

}  // namespace extremal::lorentz
