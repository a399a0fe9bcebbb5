#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/index_set.hpp"
#include "extremal/rational.hpp"
#include "extremal/sparse_vec.hpp"

// Compatible functionals: the norming set of the James-Schreier dual ball.
//
// f = +/- sum_{i=1}^{k+1} (-1)^i lambda_i e*_{n_i} with supp f = {n_1 < ... <
// n_{k+1}} contained in a permissible set, lambda_1 = 1, lambda_i = 2 in the
// middle, lambda_{k+1} in {1,2}, and lambda_{k+1} = 1 whenever the support is
// permissible-maximal.
namespace extremal::dual {

struct CompatibleFunctional {
  SparseVec coords;
  IndexSet support;
  int last_abs = 1;     // |f at max support|, 1 or 2
  int global_sign = 1;  // sign of f at min support
};

// Returns the metadata if f is compatible, nullopt otherwise. The metadata is
// always recomputed from the coordinates.
std::optional<CompatibleFunctional> recognize(const SparseVec& f);

// Human-readable reason f is not compatible, nullopt if it is.
std::optional<std::string> incompatibility(const SparseVec& f);

bool is_compatible(const SparseVec& f);

// The compatible functional with the given support, last coefficient and
// sign of its first coefficient. Throws std::invalid_argument when the
// combination is not compatible.
CompatibleFunctional make_compatible(const IndexSet& support, int last_abs, int global_sign);

// Every compatible functional with support in [1, bound], sorted by
// (support, last_abs, global_sign). Throws for bound < 1.
std::vector<CompatibleFunctional> enumerate_compatible(int bound);

// sum_i f_i x_i.
Rational evaluate(const SparseVec& f, const SparseVec& x);

// Norm of f as a functional on span{e_1, ..., e_{bound-1}} with the
// James-Schreier norm. Solved as the gauge of f with respect to the
// compatible functionals restricted to those coordinates:
//   min sum mu_g  s.t.  sum mu_g g = f, mu >= 0.
// Requires bound >= 2 and supp f in [1, bound - 1].
Rational dual_norm(const SparseVec& f, int bound);

// The same quantity from the primal side:
//   max f(x) s.t. |g(x)| <= 1 for every compatible g with supp g in [1, bound],
// over x supported in [1, bound - 1]. Much larger LP; kept as a second route.
Rational dual_norm_primal(const SparseVec& f, int bound);

// Dual ball of the n-dimensional truncation: conv of the compatible
// functionals supported in [1, n] (as dense points of length n).
std::vector<std::vector<Rational>> truncated_norming_points(int n);

// True iff f, with support in [1, n], lies in the dual unit ball of the
// n-dimensional truncation.
bool in_truncated_dual_ball(const SparseVec& f, int n);

enum class Verdict { NotCompatible, ExtremeSingleton, ExtremeMaxSupport, ExtremeLastTwo, NotExtreme };

struct ExtremeClass {
  Verdict verdict = Verdict::NotCompatible;
  std::string reason;

  bool is_extreme() const {
    return verdict == Verdict::ExtremeSingleton || verdict == Verdict::ExtremeMaxSupport ||
           verdict == Verdict::ExtremeLastTwo;
  }
};

std::string_view to_string(Verdict verdict);

// Closed-form classification of the extreme points of the dual ball: a
// compatible f is extreme iff
//   (1) f = +/- e*_i with i in {1, 2}, or
//   (2) supp f is permissible-maximal, or
//   (3) |last coefficient| = 2 and n_1 - 1 <= |supp f| <= n_1.
ExtremeClass classify_extreme(const SparseVec& f);

// enumerate_compatible(bound) filtered through classify_extreme.
std::vector<CompatibleFunctional> enumerate_extreme(int bound);

}  // namespace extremal::dual
