#include "extremal/dualspace.hpp"

#include <functional>
#include <stdexcept>

#include "extremal/lp.hpp"
#include "extremal/schreier.hpp"

namespace extremal::dual {

namespace {

std::string str(const Rational& r) { return extremal::to_string(r); }

// Supports of compatible functionals inside [1, bound] (singletons and
// permissible sets), lexicographic.
void for_each_support(int bound, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> current;
  std::function<void(std::size_t)> extend = [&](std::size_t cap) {
    visit(current);
    if (current.size() == cap) return;
    for (int next = current.back() + 1; next <= bound; ++next) {
      current.push_back(next);
      extend(cap);
      current.pop_back();
    }
  };
  for (int first = 1; first <= bound; ++first) {
    current.assign(1, first);
    extend(static_cast<std::size_t>(first) + 1);
  }
}

SparseVec build_coords(const std::vector<int>& support, int last_abs, int global_sign) {
  SparseVec f;
  const std::size_t count = support.size();
  for (std::size_t i = 0; i < count; ++i) {
    int magnitude = 2;
    if (i == 0) {
      magnitude = 1;
    } else if (i + 1 == count) {
      magnitude = last_abs;
    }
    const int alternating = (i % 2 == 0) ? 1 : -1;
    f.set(support[i], Rational(global_sign * alternating * magnitude));
  }
  return f;
}

}  // namespace

std::optional<std::string> incompatibility(const SparseVec& f) {
  if (f.is_zero()) return "zero functional";
  const IndexSet support = f.support();
  const std::size_t count = support.size();
  const int first = support.min();
  if (!schreier::embeds_in_permissible(support)) {
    return "support " + support.to_string() + " has " + std::to_string(count) +
           " elements, more than min + 1 = " + std::to_string(first + 1);
  }
  Rational previous;
  for (std::size_t i = 0; i < count; ++i) {
    const Rational value = f.get(support[i]);
    const Rational magnitude = abs(value);
    if (i == 0 && magnitude != 1) {
      return "first coefficient " + str(value) + " at index " + std::to_string(support[i]) + " is not +/-1";
    }
    if (i > 0 && i + 1 < count && magnitude != 2) {
      return "middle coefficient " + str(value) + " at index " + std::to_string(support[i]) + " is not +/-2";
    }
    if (i > 0 && i + 1 == count && magnitude != 1 && magnitude != 2) {
      return "last coefficient " + str(value) + " at index " + std::to_string(support[i]) + " is not +/-1 or +/-2";
    }
    if (i > 0 && sgn(value) == sgn(previous)) {
      return "coefficients at indices " + std::to_string(support[i - 1]) + " and " + std::to_string(support[i]) +
             " do not alternate in sign";
    }
    previous = value;
  }
  if (count >= 2 && schreier::is_permissible_maximal(support) && abs(f.get(support.max())) != 1) {
    return "support " + support.to_string() + " is permissible-maximal, so the last coefficient must be +/-1";
  }
  return std::nullopt;
}

std::optional<CompatibleFunctional> recognize(const SparseVec& f) {
  if (incompatibility(f)) return std::nullopt;
  IndexSet support = f.support();
  const Rational last = abs(f.get(support.max()));
  const int global = sgn(f.get(support.min()));
  return CompatibleFunctional{f, std::move(support), last == 2 ? 2 : 1, global};
}

bool is_compatible(const SparseVec& f) { return !incompatibility(f).has_value(); }

CompatibleFunctional make_compatible(const IndexSet& support, int last_abs, int global_sign) {
  if (support.empty()) throw std::invalid_argument("compatible functional needs a nonempty support");
  if (last_abs != 1 && last_abs != 2) throw std::invalid_argument("last_abs must be 1 or 2");
  if (global_sign != 1 && global_sign != -1) throw std::invalid_argument("global_sign must be +1 or -1");
  if (support.size() == 1 && last_abs != 1) {
    throw std::invalid_argument("a singleton compatible functional has coefficient +/-1");
  }
  std::vector<int> elems(support.begin(), support.end());
  SparseVec f = build_coords(elems, last_abs, global_sign);
  if (auto why = incompatibility(f)) throw std::invalid_argument("not compatible: " + *why);
  return CompatibleFunctional{std::move(f), support, last_abs, global_sign};
}

std::vector<CompatibleFunctional> enumerate_compatible(int bound) {
  if (bound < 1) throw std::invalid_argument("enumeration bound must be >= 1, got " + std::to_string(bound));
  std::vector<CompatibleFunctional> out;
  for_each_support(bound, [&](const std::vector<int>& support) {
    const bool singleton = support.size() == 1;
    const bool maximal = support.size() == static_cast<std::size_t>(support.front()) + 1;
    const int max_last = (singleton || maximal) ? 1 : 2;
    IndexSet set(support);
    for (int last_abs = 1; last_abs <= max_last; ++last_abs) {
      for (int sign : {-1, 1}) {
        out.push_back(CompatibleFunctional{build_coords(support, last_abs, sign), set, last_abs, sign});
      }
    }
  });
  return out;
}

Rational evaluate(const SparseVec& f, const SparseVec& x) {
  Rational total = 0;
  const auto& a = f.coords();
  const auto& b = x.coords();
  auto it = a.begin();
  auto jt = b.begin();
  while (it != a.end() && jt != b.end()) {
    if (it->first < jt->first) {
      ++it;
    } else if (jt->first < it->first) {
      ++jt;
    } else {
      total += it->second * jt->second;
      ++it;
      ++jt;
    }
  }
  return total;
}

std::vector<std::vector<Rational>> truncated_norming_points(int n) {
  std::vector<std::vector<Rational>> points;
  for (const auto& g : enumerate_compatible(n)) points.push_back(g.coords.to_dense(n));
  return points;
}

namespace {

Rational gauge(const std::vector<Rational>& target, const std::vector<std::vector<Rational>>& points) {
  const std::size_t dim = target.size();
  lp::Problem problem;
  problem.objective.assign(points.size(), Rational(-1));
  problem.lower_bounds.assign(points.size(), Rational(0));
  for (std::size_t j = 0; j < dim; ++j) {
    lp::Constraint row{lp::Row(points.size()), lp::Relation::Equal, target[j]};
    for (std::size_t k = 0; k < points.size(); ++k) row.coefficients[k] = points[k][j];
    problem.constraints.push_back(std::move(row));
  }
  const lp::Result result = lp::maximize(problem);
  if (result.status != lp::Status::Optimal) {
    throw std::logic_error(std::string("gauge LP did not reach an optimum: ") + lp::to_string(result.status));
  }
  return -result.value;
}

void check_dual_args(const SparseVec& f, int bound) {
  if (bound < 2) throw std::invalid_argument("dual_norm bound must be >= 2, got " + std::to_string(bound));
  if (f.max_index() > bound - 1) {
    throw std::invalid_argument("functional support reaches index " + std::to_string(f.max_index()) +
                                ", beyond bound - 1 = " + std::to_string(bound - 1));
  }
}

}  // namespace

Rational dual_norm(const SparseVec& f, int bound) {
  check_dual_args(f, bound);
  if (f.is_zero()) return 0;
  const int dim = bound - 1;
  return gauge(f.to_dense(dim), truncated_norming_points(dim));
}

Rational dual_norm_primal(const SparseVec& f, int bound) {
  check_dual_args(f, bound);
  const int dim = bound - 1;
  lp::Problem problem;
  problem.objective = f.to_dense(dim);
  for (const auto& g : enumerate_compatible(bound)) {
    lp::Row row(static_cast<std::size_t>(dim));
    bool nonzero = false;
    for (const auto& [i, v] : g.coords) {
      if (i > dim) continue;
      row[static_cast<std::size_t>(i - 1)] = v;
      nonzero = true;
    }
    if (nonzero) problem.constraints.push_back({std::move(row), lp::Relation::LessEqual, Rational(1)});
  }
  const lp::Result result = lp::maximize(problem);
  if (result.status != lp::Status::Optimal) {
    throw std::logic_error(std::string("primal dual-norm LP did not reach an optimum: ") +
                           lp::to_string(result.status));
  }
  return result.value;
}

bool in_truncated_dual_ball(const SparseVec& f, int n) { return dual_norm(f, n + 1) <= 1; }

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::NotCompatible:
      return "NotCompatible";
    case Verdict::ExtremeSingleton:
      return "ExtremeSingleton";
    case Verdict::ExtremeMaxSupport:
      return "ExtremeMaxSupport";
    case Verdict::ExtremeLastTwo:
      return "ExtremeLastTwo";
    case Verdict::NotExtreme:
      return "NotExtreme";
  }
  return "Unknown";
}

ExtremeClass classify_extreme(const SparseVec& f) {
  const auto meta = recognize(f);
  if (!meta) return {Verdict::NotCompatible, *incompatibility(f)};
  const IndexSet& support = meta->support;
  const int first = support.min();
  const auto count = static_cast<int>(support.size());

  if (count == 1) {
    if (first <= 2) return {Verdict::ExtremeSingleton, "+/-e*_" + std::to_string(first) + " with index in {1,2}"};
    return {Verdict::NotExtreme, "singleton at index " + std::to_string(first) + "; only e*_1 and e*_2 are extreme"};
  }
  if (meta->last_abs == 1) {
    if (schreier::is_permissible_maximal(support)) {
      return {Verdict::ExtremeMaxSupport, "support " + support.to_string() + " is permissible-maximal"};
    }
    return {Verdict::NotExtreme, "last coefficient is +/-1 but support " + support.to_string() +
                                     " is not permissible-maximal (" + std::to_string(count) + " < min + 1 = " +
                                     std::to_string(first + 1) + ")"};
  }
  if (count >= first - 1) {
    return {Verdict::ExtremeLastTwo, "last coefficient is +/-2 and n_1 - 1 <= |supp| = " + std::to_string(count) +
                                         " <= n_1 = " + std::to_string(first)};
  }
  return {Verdict::NotExtreme, "last coefficient is +/-2 but |supp| = " + std::to_string(count) +
                                   " < n_1 - 1 = " + std::to_string(first - 1)};
}

std::vector<CompatibleFunctional> enumerate_extreme(int bound) {
  std::vector<CompatibleFunctional> out;
  for (auto& g : enumerate_compatible(bound)) {
    if (classify_extreme(g.coords).is_extreme()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace extremal::dual
