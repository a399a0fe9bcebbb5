#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace extremal::oracle {

std::vector<std::vector<int>> all_subsets(int bound) {
  std::vector<std::vector<int>> out;
  for (unsigned long mask = 1; mask < (1UL << bound); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < bound; ++b) {
      if (mask & (1UL << b)) s.push_back(b + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool permissible_list(const std::vector<int>& a) {
  return a.size() >= 2 && static_cast<int>(a.size()) <= a.front() + 1;
}

std::vector<std::vector<int>> permissible_by_bitmask(int bound) {
  std::vector<std::vector<int>> out;
  for (auto& s : all_subsets(bound)) {
    if (permissible_list(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational nu_reference(const SparseVec& x, const std::vector<int>& a) {
  Rational total = 0;
  for (std::size_t k = 0; k + 1 < a.size(); ++k) total += abs(x.get(a[k]) - x.get(a[k + 1]));
  return total;
}

Rational v1_norm_reference(const SparseVec& x, int window) {
  Rational best = 0;
  for (const auto& a : permissible_by_bitmask(window)) best = std::max(best, nu_reference(x, a));
  return best;
}

bool compatible_reference(const SparseVec& f) {
  std::vector<std::pair<int, Rational>> c(f.begin(), f.end());
  if (c.empty()) return false;
  if (c.size() > static_cast<std::size_t>(c.front().first) + 1) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Rational a = abs(c[k].second);
    const bool first = k == 0, last = k + 1 == c.size();
    if (first && a != 1) return false;
    if (!first && !last && a != 2) return false;
    if (!first && last && a != 1 && a != 2) return false;
    if (k > 0 && sgn(c[k].second) == sgn(c[k - 1].second)) return false;
  }
  if (c.size() >= 2 && c.size() == static_cast<std::size_t>(c.front().first) + 1 && abs(c.back().second) != 1) {
    return false;
  }
  return true;
}

std::vector<SparseVec> compatible_by_bitmask(int bound) {
  std::vector<SparseVec> out;
  for (const auto& s : all_subsets(bound)) {
    // Every coefficient in {-2,-1,1,2}; keep the compatible combinations.
    const std::size_t k = s.size();
    if (k > 6) continue;  // too long to be compatible within small bounds
    std::vector<int> choice(k, 0);
    const int values[] = {-2, -1, 1, 2};
    while (true) {
      SparseVec f;
      for (std::size_t i = 0; i < k; ++i) f.set(s[i], Rational(values[choice[i]]));
      if (compatible_reference(f)) out.push_back(std::move(f));
      std::size_t pos = 0;
      while (pos < k && ++choice[pos] == 4) choice[pos++] = 0;
      if (pos == k) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational lorentz_norm_reference(const SparseVec& x, const std::vector<Rational>& w) {
  const int n = x.max_index();
  if (n == 0) return 0;
  if (static_cast<int>(w.size()) < n) throw std::invalid_argument("reference weights too short");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  Rational best = 0;
  do {
    Rational total = 0;
    for (int i = 0; i < n; ++i) total += abs(x.get(sigma[static_cast<std::size_t>(i)])) * w[static_cast<std::size_t>(i)];
    best = std::max(best, total);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

Rational predual_norm_reference(const SparseVec& x, const std::vector<Rational>& w) {
  std::vector<Rational> values;
  for (const auto& [_, v] : x) values.push_back(abs(v));
  const auto k = values.size();
  Rational best = 0;
  for (unsigned long mask = 1; mask < (1UL << k); ++mask) {
    Rational sum = 0, weight = 0;
    int size = 0;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask & (1UL << b)) {
        sum += values[b];
        weight += w.at(static_cast<std::size_t>(size++));
      }
    }
    best = std::max(best, Rational(sum / weight));
  }
  return best;
}

std::vector<Rational> harmonic_weights(int n) {
  std::vector<Rational> w;
  for (int i = 1; i <= n; ++i) w.emplace_back(1, i);
  return w;
}

}  // namespace extremal::oracle
