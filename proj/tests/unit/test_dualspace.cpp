#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "extremal/dualspace.hpp"
#include "extremal/vnorm.hpp"
#include "oracles.hpp"

using namespace extremal;
using namespace extremal::dual;

namespace {

SparseVec vec(std::initializer_list<std::pair<int, int>> entries) {
  SparseVec x;
  for (const auto& [i, v] : entries) x.set(i, v);
  return x;
}

std::vector<SparseVec> coords(const std::vector<CompatibleFunctional>& list) {
  std::vector<SparseVec> out;
  for (const auto& g : list) out.push_back(g.coords);
  return out;
}

}  // namespace

TEST(Compatible, Examples) {
  EXPECT_TRUE(is_compatible(vec({{1, 1}})));
  EXPECT_TRUE(is_compatible(vec({{2, 1}, {4, -2}, {6, 1}})));
  EXPECT_FALSE(is_compatible(vec({{1, 1}, {3, -2}})));
  EXPECT_FALSE(is_compatible(SparseVec()));
  EXPECT_TRUE(is_compatible(vec({{9, -1}})));
}

TEST(Compatible, ReasonsNameTheFailedClause) {
  EXPECT_NE(incompatibility(vec({{1, 1}, {3, -2}}))->find("permissible-maximal"), std::string::npos);
  EXPECT_NE(incompatibility(vec({{2, 2}}))->find("first coefficient"), std::string::npos);
  EXPECT_NE(incompatibility(vec({{2, 1}, {3, -1}, {4, 1}}))->find("middle coefficient"), std::string::npos);
  EXPECT_NE(incompatibility(vec({{2, 1}, {3, 2}}))->find("alternate"), std::string::npos);
  EXPECT_NE(incompatibility(vec({{1, 1}, {2, -1}, {3, 1}}))->find("more than"), std::string::npos);
  EXPECT_NE(incompatibility(vec({{2, 1}, {3, -3}}))->find("last coefficient"), std::string::npos);
  EXPECT_FALSE(incompatibility(vec({{2, -1}, {3, 2}})).has_value());
}

TEST(Compatible, RecognizeRecomputesMetadata) {
  const auto meta = recognize(vec({{3, -1}, {5, 2}, {6, -2}}));
  ASSERT_TRUE(meta.has_value());
  EXPECT_EQ(meta->support, IndexSet({3, 5, 6}));
  EXPECT_EQ(meta->last_abs, 2);
  EXPECT_EQ(meta->global_sign, -1);
  EXPECT_FALSE(recognize(vec({{3, 1}, {5, 1}})).has_value());
}

TEST(Compatible, MakeCompatible) {
  EXPECT_EQ(make_compatible({2, 4, 6}, 1, 1).coords, vec({{2, 1}, {4, -2}, {6, 1}}));
  EXPECT_EQ(make_compatible({2, 3}, 2, -1).coords, vec({{2, -1}, {3, 2}}));
  EXPECT_THROW(make_compatible({1, 3}, 2, 1), std::invalid_argument);
  EXPECT_THROW(make_compatible({4}, 2, 1), std::invalid_argument);
  EXPECT_THROW(make_compatible({1, 2, 3}, 1, 1), std::invalid_argument);
  EXPECT_THROW(make_compatible({2, 3}, 3, 1), std::invalid_argument);
  EXPECT_THROW(make_compatible({2, 3}, 1, 0), std::invalid_argument);
}

TEST(Enumerate, SmallBounds) {
  EXPECT_EQ(coords(enumerate_compatible(1)), (std::vector<SparseVec>{vec({{1, -1}}), vec({{1, 1}})}));
  const auto two = coords(enumerate_compatible(2));
  EXPECT_EQ(two, (std::vector<SparseVec>{vec({{1, -1}}), vec({{1, 1}}), vec({{1, -1}, {2, 1}}),
                                         vec({{1, 1}, {2, -1}}), vec({{2, -1}}), vec({{2, 1}})}));
  const auto three = coords(enumerate_compatible(3));
  EXPECT_NE(std::find(three.begin(), three.end(), vec({{2, 1}, {3, -2}})), three.end());
  EXPECT_NE(std::find(three.begin(), three.end(), vec({{2, -1}, {3, 2}})), three.end());
  EXPECT_THROW(enumerate_compatible(0), std::invalid_argument);
}

TEST(Enumerate, MatchesBitmaskOracle) {
  for (int bound = 1; bound <= 9; ++bound) {
    auto got = coords(enumerate_compatible(bound));
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::compatible_by_bitmask(bound)) << bound;
  }
}

TEST(Enumerate, SortedAndMetadataConsistent) {
  const auto list = enumerate_compatible(8);
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    const auto key = [](const CompatibleFunctional& g) { return std::tuple(g.support, g.last_abs, g.global_sign); };
    EXPECT_LT(key(list[i]), key(list[i + 1]));
  }
  for (const auto& g : list) {
    const auto meta = recognize(g.coords);
    ASSERT_TRUE(meta.has_value());
    EXPECT_EQ(meta->support, g.support);
    EXPECT_EQ(meta->last_abs, g.last_abs);
    EXPECT_EQ(meta->global_sign, g.global_sign);
  }
}

TEST(Enumerate, SymmetricAndClosedUnderPartialSums) {
  const auto list = coords(enumerate_compatible(9));
  const std::set<SparseVec> all(list.begin(), list.end());
  for (const auto& f : list) {
    EXPECT_TRUE(all.contains(-f));
    SparseVec partial;
    for (const auto& [i, v] : f) {
      partial.set(i, v);
      EXPECT_TRUE(is_compatible(partial)) << f.to_string() << " prefix " << partial.to_string();
    }
  }
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(evaluate(vec({{1, 1}, {2, -1}}), vec({{1, 1}, {2, -1}})), 2);
  EXPECT_EQ(evaluate(vec({{1, 1}}), vec({{2, 1}})), 0);
  EXPECT_EQ(evaluate(vec({{2, 1}, {4, -2}, {6, 1}}), SparseVec::interval(1, 6)), 0);
}

TEST(DualNorm, Examples) {
  EXPECT_EQ(dual_norm(vec({{1, 1}, {2, -1}}), 4), 1);
  EXPECT_EQ(dual_norm(vec({{1, 1}}), 3), 1);
  EXPECT_EQ(dual_norm(vec({{1, 3}}), 3), 3);
  EXPECT_EQ(dual_norm(SparseVec(), 3), 0);
  EXPECT_THROW(dual_norm(vec({{3, 1}}), 3), std::invalid_argument);
  EXPECT_THROW(dual_norm(vec({{1, 1}}), 1), std::invalid_argument);
}

TEST(DualNorm, BothRoutesAgree) {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 40; ++s) {
    const int bound = 3 + static_cast<int>(rng() % 4);
    SparseVec f;
    for (int i = 1; i < bound; ++i) {
      if (rng() % 2) f.set(i, ratio(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
    }
    EXPECT_EQ(dual_norm(f, bound), dual_norm_primal(f, bound)) << f.to_string() << " bound " << bound;
  }
}

TEST(DualNorm, DualOfPrimalNormAgreesOnUnitVectors) {
  // ||e_i*|| over the (bound-1)-truncation is the max |x_i| on its unit ball.
  for (int bound = 3; bound <= 7; ++bound) {
    for (int i = 1; i < bound; ++i) EXPECT_EQ(dual_norm(SparseVec::unit(i), bound), 1) << i << " " << bound;
  }
}

TEST(DualNorm, CompatibleFunctionalsLieInTheBall) {
  for (int b = 1; b <= 5; ++b) {
    for (const auto& g : enumerate_compatible(b)) EXPECT_LE(dual_norm(g.coords, b + 2), 1) << g.coords.to_string();
  }
}

TEST(DualNorm, TruncatedBallMembership) {
  EXPECT_TRUE(in_truncated_dual_ball(vec({{2, 1}, {4, -1}}), 4));
  EXPECT_FALSE(in_truncated_dual_ball(vec({{1, 1}, {2, 1}}), 3));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_extreme(vec({{3, 1}})).verdict, Verdict::NotExtreme);
  EXPECT_EQ(classify_extreme(vec({{1, 1}, {7, -1}})).verdict, Verdict::ExtremeMaxSupport);
  EXPECT_EQ(classify_extreme(vec({{3, 1}, {5, -2}})).verdict, Verdict::ExtremeLastTwo);
  EXPECT_EQ(classify_extreme(vec({{4, 1}, {6, -2}})).verdict, Verdict::NotExtreme);
  EXPECT_EQ(classify_extreme(vec({{2, 1}, {4, -1}})).verdict, Verdict::NotExtreme);
  EXPECT_EQ(classify_extreme(vec({{1, -1}})).verdict, Verdict::ExtremeSingleton);
  EXPECT_EQ(classify_extreme(vec({{2, 1}})).verdict, Verdict::ExtremeSingleton);
  EXPECT_EQ(classify_extreme(vec({{1, 1}, {3, -2}})).verdict, Verdict::NotCompatible);
  EXPECT_FALSE(classify_extreme(vec({{1, 1}, {3, -2}})).reason.empty());
}

TEST(Classify, ReasonsMentionTheFailedCondition) {
  EXPECT_NE(classify_extreme(vec({{4, 1}, {6, -2}})).reason.find("n_1 - 1"), std::string::npos);
  EXPECT_NE(classify_extreme(vec({{2, 1}, {4, -1}})).reason.find("not permissible-maximal"), std::string::npos);
  EXPECT_NE(classify_extreme(vec({{3, 1}})).reason.find("singleton"), std::string::npos);
}

TEST(Classify, SignInvariant) {
  for (const auto& g : enumerate_compatible(9)) {
    EXPECT_EQ(classify_extreme(g.coords).verdict, classify_extreme(-g.coords).verdict);
  }
}

TEST(EnumerateExtreme, SmallBounds) {
  EXPECT_EQ(coords(enumerate_extreme(2)), coords(enumerate_compatible(2)));
  const auto three = coords(enumerate_extreme(3));
  EXPECT_NE(std::find(three.begin(), three.end(), vec({{2, 1}, {3, -2}})), three.end());
  EXPECT_EQ(std::find(three.begin(), three.end(), vec({{3, 1}})), three.end());
  EXPECT_EQ(std::find(three.begin(), three.end(), vec({{3, -1}})), three.end());
}

TEST(NormingProperty, MaxOfCompatibleEqualsNorm) {
  std::mt19937_64 rng(3);
  for (int s = 0; s < 60; ++s) {
    SparseVec x;
    const int m = 1 + static_cast<int>(rng() % 8);
    for (int i = 1; i <= m; ++i) {
      if (rng() % 2) x.set(i, ratio(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 4) + 1));
    }
    Rational best = 0;
    for (const auto& g : enumerate_compatible(x.max_index() + 1)) best = std::max(best, evaluate(g.coords, x));
    EXPECT_EQ(best, v1::norm_bruteforce(x).value) << x.to_string();
  }
}
