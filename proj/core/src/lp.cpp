#include "extremal/lp.hpp"

#include <stdexcept>
#include <string>

namespace extremal::lp {

namespace {

// Dense tableau over nonnegative columns. Row i reads
// sum_j rows[i][j] * y_j = rows[i][width] with basis[i] basic in it.
// objective[j] holds the reduced cost of column j and objective[width] the
// negated current objective value.
class Tableau {
 public:
  Tableau(std::vector<Row> rows, std::vector<std::size_t> basis, std::size_t width)
      : rows_(std::move(rows)), basis_(std::move(basis)), width_(width) {}

  void set_costs(const Row& costs) {
    objective_.assign(width_ + 1, Rational(0));
    for (std::size_t j = 0; j < width_; ++j) objective_[j] = costs[j];
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Rational& cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) {
        if (rows_[i][j] != 0) objective_[j] -= cb * rows_[i][j];
      }
    }
  }

  // Runs simplex over columns [0, allowed). Returns false when unbounded.
  bool optimize(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (objective_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;

      std::size_t leave = rows_.size();
      Rational best_ratio;
      for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (leave == rows_.size() || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          best_ratio = std::move(ratio);
          leave = i;
        }
      }
      if (leave == rows_.size()) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    Row& prow = rows_[p];
    const Rational inv = 1 / prow[q];
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j] != 0) prow[j] *= inv;
    }
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j <= width_; ++j) {
      if (prow[j] != 0) nz.push_back(j);
    }
    auto eliminate = [&](Row& row) {
      if (row[q] == 0) return;
      const Rational factor = row[q];
      for (std::size_t j : nz) row[j] -= factor * prow[j];
    };
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != p) eliminate(rows_[i]);
    }
    eliminate(objective_);
    basis_[p] = q;
  }

  Rational value() const { return -objective_[width_]; }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  const Rational& entry(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const Rational& rhs(std::size_t i) const { return rows_[i][width_]; }

  void drop_row(std::size_t i) {
    rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
  }

 private:
  std::vector<Row> rows_;
  std::vector<std::size_t> basis_;
  std::size_t width_;
  Row objective_;
};

struct ColumnMap {
  // Original variable j is offset + plus - minus, where minus is absent for
  // bounded variables.
  std::size_t plus;
  std::optional<std::size_t> minus;
  Rational offset;
};

}  // namespace

const char* to_string(Status status) {
  switch (status) {
    case Status::Optimal:
      return "optimal";
    case Status::Unbounded:
      return "unbounded";
    case Status::Infeasible:
      return "infeasible";
  }
  return "unknown";
}

Result maximize(const Problem& problem) {
  const std::size_t n = problem.dimension();
  if (!problem.lower_bounds.empty() && problem.lower_bounds.size() != n) {
    throw std::invalid_argument("lower_bounds has " + std::to_string(problem.lower_bounds.size()) +
                                " entries for " + std::to_string(n) + " variables");
  }
  for (const auto& c : problem.constraints) {
    if (c.coefficients.size() != n) {
      throw std::invalid_argument("constraint row of length " + std::to_string(c.coefficients.size()) +
                                  " in a problem of dimension " + std::to_string(n));
    }
  }

  std::vector<ColumnMap> columns;
  std::size_t structural = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const bool bounded = !problem.lower_bounds.empty() && problem.lower_bounds[j].has_value();
    ColumnMap map{structural++, std::nullopt, Rational(0)};
    if (bounded) {
      map.offset = *problem.lower_bounds[j];
    } else {
      map.minus = structural++;
    }
    columns.push_back(std::move(map));
  }

  const std::size_t m = problem.constraints.size();
  std::size_t slack_count = 0;
  for (const auto& c : problem.constraints) {
    if (c.relation == Relation::LessEqual) ++slack_count;
  }

  struct Shaped {
    Row coeffs;  // over structural columns
    Rational rhs;
    std::optional<std::size_t> slack;
    bool negated = false;
  };
  std::vector<Shaped> shaped;
  shaped.reserve(m);
  std::size_t next_slack = structural;
  std::size_t artificial_count = 0;
  for (const auto& c : problem.constraints) {
    Shaped s{Row(structural), c.rhs, std::nullopt, false};
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& a = c.coefficients[j];
      if (a == 0) continue;
      s.coeffs[columns[j].plus] = a;
      if (columns[j].minus) s.coeffs[*columns[j].minus] = -a;
      if (columns[j].offset != 0) s.rhs -= a * columns[j].offset;
    }
    if (c.relation == Relation::LessEqual) s.slack = next_slack++;
    if (s.rhs < 0) {
      s.negated = true;
      s.rhs = -s.rhs;
      for (auto& v : s.coeffs) v = -v;
    }
    if (!s.slack || s.negated) ++artificial_count;
    shaped.push_back(std::move(s));
  }

  const std::size_t first_artificial = structural + slack_count;
  const std::size_t width = first_artificial + artificial_count;
  std::vector<Row> rows;
  std::vector<std::size_t> basis;
  rows.reserve(m);
  std::size_t next_artificial = first_artificial;
  for (auto& s : shaped) {
    Row row(width + 1);
    for (std::size_t j = 0; j < structural; ++j) row[j] = std::move(s.coeffs[j]);
    if (s.slack) row[*s.slack] = s.negated ? -1 : 1;
    row[width] = s.rhs;
    if (s.slack && !s.negated) {
      basis.push_back(*s.slack);
    } else {
      row[next_artificial] = 1;
      basis.push_back(next_artificial++);
    }
    rows.push_back(std::move(row));
  }

  Tableau tab(std::move(rows), std::move(basis), width);

  if (artificial_count > 0) {
    Row phase1(width, Rational(0));
    for (std::size_t j = first_artificial; j < width; ++j) phase1[j] = -1;
    tab.set_costs(phase1);
    tab.optimize(width);
    if (tab.value() < 0) return {Status::Infeasible, Rational(0), {}};
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = 0; i < tab.row_count();) {
      if (tab.basic(i) < first_artificial) {
        ++i;
        continue;
      }
      std::size_t col = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (tab.entry(i, j) != 0) {
          col = j;
          break;
        }
      }
      if (col == first_artificial) {
        tab.drop_row(i);  // redundant equality
      } else {
        tab.pivot(i, col);
        ++i;
      }
    }
  }

  Row costs(width, Rational(0));
  Rational constant = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& c = problem.objective[j];
    if (c == 0) continue;
    costs[columns[j].plus] = c;
    if (columns[j].minus) costs[*columns[j].minus] = -c;
    constant += c * columns[j].offset;
  }
  tab.set_costs(costs);
  if (!tab.optimize(first_artificial)) return {Status::Unbounded, Rational(0), {}};

  std::vector<Rational> y(width);
  for (std::size_t i = 0; i < tab.row_count(); ++i) y[tab.basic(i)] = tab.rhs(i);
  Result result{Status::Optimal, tab.value() + constant, std::vector<Rational>(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rational v = columns[j].offset + y[columns[j].plus];
    if (columns[j].minus) v -= y[*columns[j].minus];
    result.x[j] = std::move(v);
  }
  return result;
}

}  // namespace extremal::lp
