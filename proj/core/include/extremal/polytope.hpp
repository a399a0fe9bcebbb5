#pragma once

#include <span>
#include <variant>
#include <vector>

#include "extremal/dualspace.hpp"
#include "extremal/lorentz.hpp"
#include "extremal/lp.hpp"
#include "extremal/signed_permutation.hpp"

// Exact verification machinery on finite point sets: hull membership,
// vertex filtering, the dual-ball classification checked against the
// vertices of conv(M_bound), and signed-permutation isometry scans.
namespace extremal::polytope {

using Point = std::vector<Rational>;

inline lp::Result lp_max(const lp::Problem& problem) { return lp::maximize(problem); }

// p in conv(V), decided by the feasibility LP p = sum l_i v_i, l >= 0,
// sum l_i = 1. Throws std::invalid_argument for empty V or mixed dimensions.
bool in_convex_hull(const Point& p, std::span<const Point> vertices);

// The points of V that are not in the hull of the others, in input order.
// Repeated points are collapsed to their first occurrence.
std::vector<Point> filter_vertices(std::span<const Point> points);

struct Disagreement {
  SparseVec functional;
  dual::ExtremeClass theorem_verdict;
  bool oracle_vertex = false;
};

struct OracleReport {
  int bound = 0;
  int window = 0;
  int checked = 0;
  int agreements = 0;
  std::vector<Disagreement> disagreements;
};

// For every compatible f with max(supp f) <= window, compares
// classify_extreme(f).is_extreme() with vertex-hood of f in conv(M_bound)
// embedded in coordinates [1, bound]. Requires 1 <= window <= bound - 2 so
// the perturbations that witness non-extremality fit inside [1, bound].
OracleReport compare_theorem_oracle(int bound, int window);

struct V1Space {};
struct LorentzSpace {
  lorentz::WeightSeq weights;
};
using Space = std::variant<V1Space, LorentzSpace>;

inline constexpr int kScanMaxN = 8;

// All signed permutations of [1..n] that are isometries of the n-dimensional
// truncation, in for_each_signed_permutation order. Requires 2 <= n <= 8.
//
// V1: T is kept iff g o T and g o T^-1 lie in the dual ball for every g in
// enumerate_extreme(n). Candidates are first screened by comparing ||Tx||
// with ||x|| on small {-1,0,1} probes, which can only refute.
// Lorentz: T is kept iff T and T^-1 preserve the norm of every extreme point.
std::vector<SignedPermutation> signed_perm_isometry_scan(const Space& space, int n);

// Vertices of the dual ball of the n-dimensional V1 truncation, i.e.
// filter_vertices of the compatible functionals supported in [1, n].
std::vector<SparseVec> truncated_dual_vertices(int n);

}  // namespace extremal::polytope
