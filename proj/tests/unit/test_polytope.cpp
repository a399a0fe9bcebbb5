#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "extremal/polytope.hpp"

using namespace extremal;
using namespace extremal::polytope;

namespace {

Point pt(std::initializer_list<Rational> v) { return Point(v); }

const std::vector<Point> kCross{pt({1, 0}), pt({-1, 0}), pt({0, 1}), pt({0, -1})};

std::set<SignedPermutation> as_set(const std::vector<SignedPermutation>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ConvexHull, CrossPolytope) {
  EXPECT_TRUE(in_convex_hull(pt({0, 0}), kCross));
  EXPECT_FALSE(in_convex_hull(pt({1, 1}), kCross));
  EXPECT_TRUE(in_convex_hull(pt({Rational(1, 2), Rational(1, 2)}), kCross));
  EXPECT_FALSE(in_convex_hull(pt({Rational(1, 2), Rational(2, 3)}), kCross));
  EXPECT_TRUE(in_convex_hull(pt({1, 0}), kCross));
}

TEST(ConvexHull, Errors) {
  EXPECT_THROW(in_convex_hull(pt({0, 0}), std::vector<Point>{}), std::invalid_argument);
  EXPECT_THROW(in_convex_hull(pt({0, 0, 0}), kCross), std::invalid_argument);
  const std::vector<Point> mixed{pt({1, 0}), pt({1})};
  EXPECT_THROW(in_convex_hull(pt({0, 0}), mixed), std::invalid_argument);
}

TEST(FilterVertices, Examples) {
  const std::vector<Point> square{pt({1, 1}), pt({1, -1}), pt({-1, 1}), pt({-1, -1}), pt({0, 0})};
  EXPECT_EQ(filter_vertices(square), (std::vector<Point>(square.begin(), square.begin() + 4)));
  const std::vector<Point> line{pt({0, 0}), pt({1, 0}), pt({2, 0})};
  EXPECT_EQ(filter_vertices(line), (std::vector<Point>{pt({0, 0}), pt({2, 0})}));
  const auto hexagon = dual::truncated_norming_points(2);
  EXPECT_EQ(hexagon.size(), 6u);
  EXPECT_EQ(filter_vertices(hexagon), hexagon);
  const std::vector<Point> repeated{pt({1}), pt({1}), pt({-1})};
  EXPECT_EQ(filter_vertices(repeated), (std::vector<Point>{pt({1}), pt({-1})}));
}

TEST(FilterVertices, SubsetWhoseHullCoversTheInput) {
  const auto points = dual::truncated_norming_points(5);
  const auto vertices = filter_vertices(points);
  for (const auto& v : vertices) EXPECT_NE(std::find(points.begin(), points.end(), v), points.end());
  for (const auto& p : points) EXPECT_TRUE(in_convex_hull(p, vertices));
}

TEST(TheoremOracle, AgreesOnSmallBounds) {
  for (auto [bound, window] : {std::pair{4, 2}, std::pair{5, 3}, std::pair{6, 4}}) {
    const auto report = compare_theorem_oracle(bound, window);
    EXPECT_GT(report.checked, 0);
    EXPECT_EQ(report.agreements, report.checked);
    EXPECT_TRUE(report.disagreements.empty());
  }
  EXPECT_EQ(compare_theorem_oracle(4, 2).checked, 6);
}

TEST(TheoremOracle, WindowNeedsRoom) {
  EXPECT_THROW(compare_theorem_oracle(3, 3), std::invalid_argument);
  EXPECT_THROW(compare_theorem_oracle(5, 4), std::invalid_argument);
  EXPECT_THROW(compare_theorem_oracle(5, 0), std::invalid_argument);
}

TEST(TruncatedDualVertices, MatchClosedFormClassification) {
  for (int n = 2; n <= 6; ++n) {
    const auto vertices = truncated_dual_vertices(n);
    std::set<SparseVec> got(vertices.begin(), vertices.end());
    std::set<SparseVec> expected;
    for (const auto& g : dual::enumerate_extreme(n)) expected.insert(g.coords);
    EXPECT_EQ(got, expected) << n;
  }
}

TEST(IsometryScan, V1SmallTruncations) {
  const auto two = signed_perm_isometry_scan(V1Space{}, 2);
  EXPECT_TRUE(as_set(two).contains(SignedPermutation::identity(2)));
  EXPECT_TRUE(as_set(two).contains(SignedPermutation::identity(2, -1)));
  // The 2-dimensional norm is max(|x1|, |x2|, |x1 - x2|), symmetric in the swap.
  EXPECT_EQ(as_set(two), (std::set<SignedPermutation>{SignedPermutation::identity(2), SignedPermutation::identity(2, -1),
                                                      SignedPermutation({2, 1}, {1, 1}),
                                                      SignedPermutation({2, 1}, {-1, -1})}));
  for (int n = 3; n <= 5; ++n) {
    EXPECT_EQ(as_set(signed_perm_isometry_scan(V1Space{}, n)),
              (std::set<SignedPermutation>{SignedPermutation::identity(n), SignedPermutation::identity(n, -1)}))
        << n;
  }
}

TEST(IsometryScan, LorentzIsTheFullSignedPermutationGroup) {
  const auto w = lorentz::WeightSeq::harmonic();
  EXPECT_EQ(signed_perm_isometry_scan(LorentzSpace{w}, 3).size(), 48u);
  const auto four = signed_perm_isometry_scan(LorentzSpace{w}, 4);
  EXPECT_EQ(four.size(), 384u);
  const auto group = as_set(four);
  for (const auto& a : four) {
    EXPECT_TRUE(group.contains(a.inverse()));
    for (const auto& b : std::vector<SignedPermutation>(four.begin(), four.begin() + 24)) {
      EXPECT_TRUE(group.contains(a.compose(b)));
    }
  }
}

TEST(IsometryScan, Budget) {
  EXPECT_THROW(signed_perm_isometry_scan(V1Space{}, 1), std::invalid_argument);
  EXPECT_THROW(signed_perm_isometry_scan(V1Space{}, kScanMaxN + 1), std::invalid_argument);
}
