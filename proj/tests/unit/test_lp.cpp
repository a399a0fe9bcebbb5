#include <array>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "extremal/lp.hpp"

using namespace extremal;
using namespace extremal::lp;

namespace {

Constraint le(Row row, Rational rhs) { return {std::move(row), Relation::LessEqual, std::move(rhs)}; }

// det of a 3x3 matrix.
Rational det3(const std::array<std::array<Rational, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Max of c.x over the vertices of {A x <= b}: every triple of tight rows,
// solved by Cramer's rule, kept if feasible.
std::optional<Rational> vertex_max(const Row& c, const std::vector<Constraint>& rows) {
  std::optional<Rational> best;
  const std::size_t m = rows.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t d = b + 1; d < m; ++d) {
        const std::array<const Constraint*, 3> pick{&rows[a], &rows[b], &rows[d]};
        std::array<std::array<Rational, 3>, 3> mat;
        for (int r = 0; r < 3; ++r) {
          for (int k = 0; k < 3; ++k) mat[r][k] = pick[r]->coefficients[k];
        }
        const Rational det = det3(mat);
        if (det == 0) continue;
        Row x(3);
        for (int k = 0; k < 3; ++k) {
          auto replaced = mat;
          for (int r = 0; r < 3; ++r) replaced[r][k] = pick[r]->rhs;
          x[k] = det3(replaced) / det;
        }
        bool feasible = true;
        for (const auto& row : rows) {
          Rational lhs = 0;
          for (int k = 0; k < 3; ++k) lhs += row.coefficients[k] * x[k];
          if (lhs > row.rhs) feasible = false;
        }
        if (!feasible) continue;
        Rational value = 0;
        for (int k = 0; k < 3; ++k) value += c[k] * x[k];
        if (!best || value > *best) best = value;
      }
    }
  }
  return best;
}

}  // namespace

TEST(Lp, BoxExample) {
  Problem p;
  p.objective = {1, 1};
  p.constraints = {le({1, 0}, 1), le({0, 1}, 1), le({-1, 0}, 1), le({0, -1}, 1)};
  const Result r = maximize(p);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, 2);
  EXPECT_EQ(r.x, (Row{1, 1}));
}

TEST(Lp, Infeasible) {
  Problem p;
  p.objective = {1};
  p.constraints = {le({1}, 0), le({-1}, -1)};
  EXPECT_EQ(maximize(p).status, Status::Infeasible);
}

TEST(Lp, Unbounded) {
  Problem p;
  p.objective = {1};
  EXPECT_EQ(maximize(p).status, Status::Unbounded);
}

TEST(Lp, LowerBoundsAndEqualities) {
  // max -a - b s.t. a + 2b = 3, a, b >= 0 -> b = 3/2.
  Problem p;
  p.objective = {-1, -1};
  p.constraints = {{Row{1, 2}, Relation::Equal, 3}};
  p.lower_bounds = {Rational(0), Rational(0)};
  const Result r = maximize(p);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, Rational(-3, 2));
  EXPECT_EQ(r.x, (Row{0, Rational(3, 2)}));
}

TEST(Lp, RedundantEqualities) {
  Problem p;
  p.objective = {1, 0};
  p.constraints = {{Row{1, 1}, Relation::Equal, 2}, {Row{2, 2}, Relation::Equal, 4}, le({0, -1}, 0)};
  const Result r = maximize(p);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, 2);
}

TEST(Lp, DimensionMismatchThrows) {
  Problem p;
  p.objective = {1, 1};
  p.constraints = {le({1}, 1)};
  EXPECT_THROW(maximize(p), std::invalid_argument);
  Problem q;
  q.objective = {1, 1};
  q.lower_bounds = {Rational(0)};
  EXPECT_THROW(maximize(q), std::invalid_argument);
}

TEST(Lp, DegenerateVertexTerminates) {
  // Many constraints tight at the optimum (0,0,1): a cycling-prone setup.
  Problem p;
  p.objective = {0, 0, 1};
  p.constraints = {le({1, 1, 1}, 1), le({-1, 1, 1}, 1), le({1, -1, 1}, 1), le({-1, -1, 1}, 1),
                   le({0, 0, 1}, 1),  le({1, 0, 1}, 1),  le({0, 1, 1}, 1),  le({0, 0, -1}, 0)};
  const Result r = maximize(p);
  ASSERT_EQ(r.status, Status::Optimal);
  EXPECT_EQ(r.value, 1);
}

TEST(Lp, AgreesWithVertexEnumerationOnRandomPolytopes) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Constraint> rows;
    for (int k = 0; k < 3; ++k) {
      Row up(3), down(3);
      up[k] = 1;
      down[k] = -1;
      rows.push_back(le(up, 5));
      rows.push_back(le(down, 5));
    }
    const int extra = static_cast<int>(rng() % 3);
    for (int e = 0; e < extra; ++e) {
      Row r(3);
      for (auto& v : r) v = static_cast<long>(rng() % 7) - 3;
      rows.push_back(le(r, static_cast<long>(rng() % 6)));
    }
    Row c(3);
    for (auto& v : c) v = ratio(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
    Problem p;
    p.objective = c;
    p.constraints = rows;
    const Result r = maximize(p);
    const auto expected = vertex_max(c, rows);
    ASSERT_EQ(r.status, Status::Optimal);
    ASSERT_TRUE(expected.has_value());
    EXPECT_EQ(r.value, *expected) << trial;
  }
}
