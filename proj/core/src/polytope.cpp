#include "extremal/polytope.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "extremal/vnorm.hpp"

namespace extremal::polytope {

bool in_convex_hull(const Point& p, std::span<const Point> vertices) {
  if (vertices.empty()) throw std::invalid_argument("in_convex_hull needs a nonempty vertex list");
  const std::size_t dim = p.size();
  for (const auto& v : vertices) {
    if (v.size() != dim) throw std::invalid_argument("in_convex_hull: points have mixed dimensions");
  }
  lp::Problem problem;
  problem.objective.assign(vertices.size(), Rational(0));
  problem.lower_bounds.assign(vertices.size(), Rational(0));
  for (std::size_t j = 0; j < dim; ++j) {
    lp::Constraint row{lp::Row(vertices.size()), lp::Relation::Equal, p[j]};
    for (std::size_t k = 0; k < vertices.size(); ++k) row.coefficients[k] = vertices[k][j];
    problem.constraints.push_back(std::move(row));
  }
  problem.constraints.push_back({lp::Row(vertices.size(), Rational(1)), lp::Relation::Equal, Rational(1)});
  return lp_max(problem).status == lp::Status::Optimal;
}

std::vector<Point> filter_vertices(std::span<const Point> points) {
  std::vector<Point> distinct;
  std::set<Point> seen;
  for (const auto& p : points) {
    if (seen.insert(p).second) distinct.push_back(p);
  }
  if (distinct.size() <= 1) return distinct;
  std::vector<Point> out;
  std::vector<Point> others;
  others.reserve(distinct.size() - 1);
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    others.clear();
    for (std::size_t k = 0; k < distinct.size(); ++k) {
      if (k != i) others.push_back(distinct[k]);
    }
    if (!in_convex_hull(distinct[i], others)) out.push_back(distinct[i]);
  }
  return out;
}

OracleReport compare_theorem_oracle(int bound, int window) {
  if (window < 1 || window > bound - 2) {
    throw std::invalid_argument("compare_theorem_oracle needs 1 <= window <= bound - 2, got window " +
                                std::to_string(window) + " with bound " + std::to_string(bound));
  }
  const auto functionals = dual::enumerate_compatible(bound);
  std::vector<Point> dense;
  dense.reserve(functionals.size());
  for (const auto& g : functionals) dense.push_back(g.coords.to_dense(bound));

  OracleReport report;
  report.bound = bound;
  report.window = window;
  std::vector<Point> others;
  for (std::size_t i = 0; i < functionals.size(); ++i) {
    const auto& f = functionals[i].coords;
    if (f.max_index() > window) continue;
    others.clear();
    for (std::size_t k = 0; k < dense.size(); ++k) {
      if (k != i) others.push_back(dense[k]);
    }
    const bool oracle_vertex = !in_convex_hull(dense[i], others);
    dual::ExtremeClass verdict = dual::classify_extreme(f);
    ++report.checked;
    if (verdict.is_extreme() == oracle_vertex) {
      ++report.agreements;
    } else {
      report.disagreements.push_back({f, std::move(verdict), oracle_vertex});
    }
  }
  return report;
}

std::vector<SparseVec> truncated_dual_vertices(int n) {
  if (n < 1) throw std::invalid_argument("truncated_dual_vertices needs n >= 1");
  std::vector<SparseVec> out;
  for (const auto& p : filter_vertices(dual::truncated_norming_points(n))) out.push_back(SparseVec::from_dense(p));
  return out;
}

namespace {

// Vectors with entries in {-1, 0, 1} on at most two coordinates of [1, n].
std::vector<SparseVec> probe_vectors(int n) {
  std::vector<SparseVec> out;
  for (int i = 1; i <= n; ++i) {
    out.push_back(SparseVec::unit(i));
    for (int j = i + 1; j <= n; ++j) {
      for (int s : {-1, 1}) out.push_back(SparseVec::unit(i) + SparseVec::unit(j, Rational(s)));
    }
  }
  return out;
}

std::vector<SignedPermutation> scan_v1(int n) {
  std::vector<SparseVec> vertices;
  for (auto& g : dual::enumerate_extreme(n)) vertices.push_back(std::move(g.coords));
  const std::vector<SparseVec> probes = probe_vectors(n);
  std::map<SparseVec, Rational> norms;
  const auto norm = [&](const SparseVec& x) -> const Rational& {
    auto it = norms.find(x);
    if (it == norms.end()) it = norms.emplace(x, v1::norm_dp(x)).first;
    return it->second;
  };
  std::map<SparseVec, bool> in_ball;
  const auto contained = [&](const SparseVec& g) {
    auto it = in_ball.find(g);
    if (it == in_ball.end()) it = in_ball.emplace(g, dual::in_truncated_dual_ball(g, n)).first;
    return it->second;
  };

  std::vector<SignedPermutation> out;
  for_each_signed_permutation(n, [&](const SignedPermutation& t) {
    // Any probe whose norm changes refutes t outright.
    for (const auto& x : probes) {
      if (norm(t.apply(x)) != norm(x)) return true;
    }
    const SignedPermutation back = t.inverse();
    for (const auto& g : vertices) {
      if (!contained(t.pull_back(g)) || !contained(back.pull_back(g))) return true;
    }
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<SignedPermutation> scan_lorentz(const lorentz::WeightSeq& w, int n) {
  std::vector<SignedPermutation> out;
  for_each_signed_permutation(n, [&](const SignedPermutation& t) {
    if (lorentz::is_truncated_isometry(lorentz::StandardIsometry{Rational(1), t}, w, w, n)) out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace

std::vector<SignedPermutation> signed_perm_isometry_scan(const Space& space, int n) {
  if (n < 2 || n > kScanMaxN) {
    throw std::invalid_argument("signed_perm_isometry_scan needs 2 <= n <= " + std::to_string(kScanMaxN) +
                                ", got " + std::to_string(n));
  }
  if (std::holds_alternative<V1Space>(space)) return scan_v1(n);
  return scan_lorentz(std::get<LorentzSpace>(space).weights, n);
}

}  // namespace extremal::polytope
