#pragma once

#include <optional>
#include <vector>

#include "extremal/rational.hpp"

namespace extremal::lp {

using Row = std::vector<Rational>;

enum class Relation { LessEqual, Equal };

struct Constraint {
  Row coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

// maximize objective . x subject to the constraints. Variables are free
// unless lower_bounds is non-empty, in which case it must have one entry per
// variable (nullopt = free).
struct Problem {
  Row objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;

  std::size_t dimension() const { return objective.size(); }
};

enum class Status { Optimal, Unbounded, Infeasible };

struct Result {
  Status status = Status::Infeasible;
  Rational value;           // meaningful when Optimal
  std::vector<Rational> x;  // vertex witness when Optimal
};

// Two-phase dense-tableau simplex in exact arithmetic with Bland's rule.
// Throws std::invalid_argument on dimension mismatch.
Result maximize(const Problem& problem);

const char* to_string(Status status);

}  // namespace extremal::lp
