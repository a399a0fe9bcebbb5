#include "extremal/vnorm.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "extremal/schreier.hpp"

namespace extremal::v1 {

namespace {

// x_1..x_{n+1} with the trailing virtual zero; slot 0 unused.
std::vector<Rational> window_values(const SparseVec& x) {
  const int top = x.max_index() + 1;
  std::vector<Rational> values(static_cast<std::size_t>(top) + 1);
  for (const auto& [i, v] : x) values[static_cast<std::size_t>(i)] = v;
  return values;
}

struct BruteState {
  const std::vector<Rational>& values;
  int top;
  std::vector<int> current;
  Rational best;
  std::vector<int> best_set;
  bool found = false;
};

void brute_extend(BruteState& st, const Rational& acc, std::size_t cap) {
  if (st.current.size() >= 2 && (!st.found || acc > st.best)) {
    st.best = acc;
    st.best_set = st.current;
    st.found = true;
  }
  if (st.current.size() == cap) return;
  const auto last = static_cast<std::size_t>(st.current.back());
  for (int next = st.current.back() + 1; next <= st.top; ++next) {
    st.current.push_back(next);
    Rational step = abs(st.values[last] - st.values[static_cast<std::size_t>(next)]);
    brute_extend(st, acc + step, cap);
    st.current.pop_back();
  }
}

}  // namespace

Rational nu(const SparseVec& x, const IndexSet& a) {
  if (a.empty() || !schreier::is_permissible(a)) {
    throw std::invalid_argument("nu requires a permissible set, got " + a.to_string());
  }
  Rational total = 0;
  for (std::size_t j = 0; j + 1 < a.size(); ++j) total += abs(x.get(a[j]) - x.get(a[j + 1]));
  return total;
}

NormWitness norm_bruteforce(const SparseVec& x) {
  if (x.is_zero()) return {Rational(0), IndexSet{1, 2}};
  if (x.max_index() > kBruteforceMaxIndex) {
    throw std::invalid_argument("norm_bruteforce supports max_index <= " + std::to_string(kBruteforceMaxIndex) +
                                ", got " + std::to_string(x.max_index()));
  }
  const auto values = window_values(x);
  BruteState st{values, x.max_index() + 1, {}, Rational(0), {}, false};
  for (int first = 1; first <= st.top; ++first) {
    st.current.assign(1, first);
    brute_extend(st, Rational(0), static_cast<std::size_t>(first) + 1);
  }
  return {st.best, IndexSet(std::move(st.best_set))};
}

Rational norm_dp(const SparseVec& x) {
  if (x.is_zero()) return 0;
  const auto values = window_values(x);
  const int top = x.max_index() + 1;
  const auto n = static_cast<std::size_t>(top);

  std::vector<std::vector<Rational>> jump(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) jump[i][j] = abs(values[i] - values[j]);
  }

  Rational best = 0;
  // layer[i]: best accumulated variation of a chain from `start` ending at i
  // using the current number of elements.
  std::vector<Rational> layer(n + 1), next_layer(n + 1);
  std::vector<char> alive(n + 1), next_alive(n + 1);
  for (int start = 1; start <= top; ++start) {
    std::fill(alive.begin(), alive.end(), 0);
    layer[static_cast<std::size_t>(start)] = 0;
    alive[static_cast<std::size_t>(start)] = 1;
    // A chain from `start` holds at most start + 1 elements.
    for (int used = 1; used <= start; ++used) {
      std::fill(next_alive.begin(), next_alive.end(), 0);
      bool any = false;
      for (std::size_t i = static_cast<std::size_t>(start); i <= n; ++i) {
        if (!alive[i]) continue;
        for (std::size_t j = i + 1; j <= n; ++j) {
          Rational cand = layer[i] + jump[i][j];
          if (!next_alive[j] || cand > next_layer[j]) {
            next_layer[j] = std::move(cand);
            next_alive[j] = 1;
          }
          any = true;
        }
      }
      if (!any) break;
      for (std::size_t j = 1; j <= n; ++j) {
        if (next_alive[j] && next_layer[j] > best) best = next_layer[j];
      }
      std::swap(layer, next_layer);
      std::swap(alive, next_alive);
    }
  }
  return best;
}

namespace {

[[noreturn]] void bad_fixture(BallFixture kind, const std::string& why) {
  throw std::invalid_argument("ball fixture " + std::string(ball_fixture_name(kind)) + ": " + why);
}

}  // namespace

SparseVec ball_fixture(BallFixture kind, const BallFixtureParams& p) {
  const Rational half(1, 2);
  switch (kind) {
    case BallFixture::Unit:
      if (p.i < 1 || p.i > 2) bad_fixture(kind, "requires 1 <= i <= 2");
      return SparseVec::unit(p.i);
    case BallFixture::HalfUnit:
      if (p.i < 3) bad_fixture(kind, "requires i >= 3");
      return SparseVec::unit(p.i, half);
    case BallFixture::FirstPlusHalf: {
      if (p.j < 2) bad_fixture(kind, "requires j >= 2");
      SparseVec v = SparseVec::unit(1);
      v.set(p.j, half);
      return v;
    }
    case BallFixture::HalfPair: {
      if (p.i < 1 || p.i > 2 || p.j < 2) bad_fixture(kind, "requires i <= 2 <= j");
      if (p.sign != 1 && p.sign != -1) bad_fixture(kind, "sign must be +1 or -1");
      SparseVec v = SparseVec::unit(p.i, half);
      v += SparseVec::unit(p.j, Rational(p.sign) * half);
      return v;
    }
    case BallFixture::Interval:
      if (p.j < 2) bad_fixture(kind, "requires j >= 2");
      return SparseVec::interval(1, p.j);
    case BallFixture::HalfInterval:
      if (p.i < 2 || p.j <= p.i) bad_fixture(kind, "requires 2 <= i < j");
      return SparseVec::interval(p.i, p.j, half);
  }
  bad_fixture(kind, "unknown kind");
}

namespace {

constexpr std::array<std::pair<BallFixture, std::string_view>, 6> kFixtureNames{{
    {BallFixture::Unit, "e_i"},
    {BallFixture::HalfUnit, "half_e_i"},
    {BallFixture::FirstPlusHalf, "e1_plus_half_ej"},
    {BallFixture::HalfPair, "half_pair"},
    {BallFixture::Interval, "chi"},
    {BallFixture::HalfInterval, "half_chi"},
}};

}  // namespace

std::string_view ball_fixture_name(BallFixture kind) {
  for (const auto& [k, name] : kFixtureNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<BallFixture> ball_fixture_from_name(std::string_view name) {
  for (const auto& [k, n] : kFixtureNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

SparseVec y_theta(const IndexSet& f, std::span<const int> theta) {
  if (f.empty()) throw std::invalid_argument("y_theta requires a nonempty index set");
  if (theta.size() != f.size()) {
    throw std::invalid_argument("y_theta: " + std::to_string(theta.size()) + " signs for " +
                                std::to_string(f.size()) + " indices");
  }
  SparseVec y;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (theta[i] != 1 && theta[i] != -1) throw std::invalid_argument("y_theta signs must be +1 or -1");
    y.set(f[i], theta[i]);
  }
  return y;
}

SparseVec extend_flat(const SparseVec& x, Side side, int j) {
  if (x.is_zero()) throw std::invalid_argument("extend_flat requires a nonzero vector");
  SparseVec out = x;
  if (side == Side::Left) {
    const int n = x.min_index();
    if (j < 1 || j >= n) {
      throw std::invalid_argument("extend_flat left: need 1 <= j < " + std::to_string(n) + ", got " +
                                  std::to_string(j));
    }
    const Rational t = x.get(n);
    for (int i = j; i < n; ++i) out.set(i, t);
  } else {
    const int n = x.max_index();
    if (j <= n) {
      throw std::invalid_argument("extend_flat right: need j > " + std::to_string(n) + ", got " +
                                  std::to_string(j));
    }
    const Rational t = x.get(n);
    for (int i = n + 1; i <= j; ++i) out.set(i, t);
  }
  return out;
}

}  // namespace extremal::v1
