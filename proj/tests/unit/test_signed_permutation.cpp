#include <gtest/gtest.h>

#include "extremal/signed_permutation.hpp"

using namespace extremal;

namespace {

SparseVec vec(std::initializer_list<std::pair<int, int>> entries) {
  SparseVec x;
  for (const auto& [i, v] : entries) x.set(i, v);
  return x;
}

}  // namespace

TEST(SignedPermutation, Validation) {
  EXPECT_NO_THROW(SignedPermutation({2, 1}, {1, -1}));
  EXPECT_THROW(SignedPermutation({1, 1}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({1, 3}, {1, 1}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({1, 2}, {1, 0}), std::invalid_argument);
  EXPECT_THROW(SignedPermutation({1, 2}, {1}), std::invalid_argument);
}

TEST(SignedPermutation, ApplyFollowsCoordinateFormula) {
  // (T x)_m = eps_m x_{pi(m)}
  const SignedPermutation t({2, 3, 1}, {1, -1, 1});
  EXPECT_EQ(t.apply(vec({{1, 5}, {2, 7}, {3, 9}})), vec({{1, 7}, {2, -9}, {3, 5}}));
  EXPECT_THROW(t.apply(vec({{4, 1}})), std::invalid_argument);
}

TEST(SignedPermutation, PullBackIsTheAdjoint) {
  const SignedPermutation t({3, 1, 4, 2}, {-1, 1, 1, -1});
  const SparseVec g = vec({{1, 1}, {2, -2}, {4, 1}});
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const SparseVec x = SparseVec::unit(i) + SparseVec::unit(j, 3);
      Rational lhs = 0, rhs = 0;
      const SparseVec tx = t.apply(x), gt = t.pull_back(g);
      for (const auto& [k, v] : g) lhs += v * tx.get(k);
      for (const auto& [k, v] : gt) rhs += v * x.get(k);
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST(SignedPermutation, InverseAndCompose) {
  const SignedPermutation t({3, 1, 4, 2}, {-1, 1, 1, -1});
  const SignedPermutation s({2, 4, 1, 3}, {1, 1, -1, -1});
  EXPECT_TRUE(t.compose(t.inverse()).is_identity());
  EXPECT_TRUE(t.inverse().compose(t).is_identity());
  const SparseVec x = vec({{1, 1}, {2, 2}, {3, 3}, {4, 4}});
  EXPECT_EQ(s.compose(t).apply(x), s.apply(t.apply(x)));
  EXPECT_THROW(s.compose(SignedPermutation::identity(3)), std::invalid_argument);
}

TEST(SignedPermutation, IdentityHelpers) {
  EXPECT_TRUE(SignedPermutation::identity(3).is_identity());
  EXPECT_TRUE(SignedPermutation::identity(3, -1).is_negated_identity());
  EXPECT_FALSE(SignedPermutation({2, 1}, {1, 1}).is_identity());
  EXPECT_EQ(SignedPermutation({2, 1}, {-1, 1}).to_string(), "[-2 +1]");
}

TEST(SignedPermutation, EnumerationCountOrderAndEarlyStop) {
  std::vector<SignedPermutation> all;
  for_each_signed_permutation(3, [&](const SignedPermutation& p) {
    all.push_back(p);
    return true;
  });
  EXPECT_EQ(all.size(), 48u);
  EXPECT_TRUE(all.front().is_negated_identity());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(a.pi(), a.eps()) < std::tie(b.pi(), b.eps());
  }));
  int visited = 0;
  for_each_signed_permutation(4, [&](const SignedPermutation&) { return ++visited < 5; });
  EXPECT_EQ(visited, 5);
  EXPECT_THROW(for_each_signed_permutation(0, [](const SignedPermutation&) { return true; }), std::invalid_argument);
}
