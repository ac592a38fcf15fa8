#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "twq/mincycle.hpp"
#include "twq/oracles.hpp"

namespace twq {
namespace {

TEST(MinCycle, FixtureA) {
  auto g = test::fixture_a();
  auto r = min_cycle(g, build_decomposition(g));
  ASSERT_TRUE(r.c);
  EXPECT_EQ(*r.c, 6);
  EXPECT_TRUE(r.exact());
}

TEST(MinCycle, AcyclicChain) {
  auto g = make_graph(3, {{0, 1, -4, 1}, {1, 2, 2, 1}});
  EXPECT_FALSE(min_cycle(g, build_decomposition(g)).c);
}

TEST(MinCycle, FixtureCUnderApproximates) {
  auto g = test::fixture_c();
  auto t = build_decomposition(g);
  auto r = min_cycle(g, t);
  ASSERT_TRUE(r.c);
  EXPECT_LE(*r.c, -2);
  EXPECT_LE(abs(*r.c), BigInt(2) * g.m() * (BigInt(1) << r.height));
  EXPECT_FALSE(r.exact());
}

TEST(MinCycle, NegativeCycleDecision) {
  auto a = test::fixture_a();
  auto c = test::fixture_c();
  auto loop = make_graph(1, {{0, 0, 0, 1}});
  std::vector<std::int64_t> wa, wc, wl{0};
  for (const Edge& e : a.edges()) wa.push_back(e.weight);
  for (const Edge& e : c.edges()) wc.push_back(e.weight);
  EXPECT_FALSE(has_negative_cycle<std::int64_t>(a, build_decomposition(a), wa));
  EXPECT_TRUE(has_negative_cycle<std::int64_t>(c, build_decomposition(c), wc));
  EXPECT_FALSE(has_negative_cycle<std::int64_t>(loop, build_decomposition(loop), wl));
}

TEST(MinCycle, SelfLoops) {
  auto g = make_graph(2, {{0, 0, 7, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}});
  auto r = min_cycle(g, build_decomposition(g));
  ASSERT_TRUE(r.c);
  EXPECT_EQ(*r.c, 2);
}

TEST(MinCycle, MatchesEnumerationOracle) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 400; ++i) {
    auto g = test::random_ktree(rng, {2, 10, 3, 10, 1, i % 3 != 0});
    auto t = build_decomposition(g);
    auto s = summarize_cycles(enumerate_cycles(g));
    auto r = min_cycle(g, t);
    EXPECT_LE(r.peak_maps, r.height + 1u);
    EXPECT_EQ(r.height, t.height());
    if (!s.min_weight) {
      EXPECT_FALSE(r.c);
      continue;
    }
    ASSERT_TRUE(r.c);
    const BigInt star(*s.min_weight);
    if (star >= 0) {
      EXPECT_EQ(*r.c, star);
    } else {
      EXPECT_LE(*r.c, star);
      EXPECT_LE(abs(*r.c), abs(star) * g.m() * (BigInt(1) << r.height));
    }
    std::vector<std::int64_t> w;
    for (const Edge& e : g.edges()) w.push_back(e.weight);
    auto narrow = min_cycle<std::int64_t>(g, t, w);
    ASSERT_TRUE(narrow.c);
    EXPECT_EQ(BigInt(*narrow.c), *r.c);
    EXPECT_EQ(min_cycle(g, t).c, r.c);
  }
}

TEST(MinCycle, WeightOverrides) {
  auto g = test::fixture_a();
  auto t = build_decomposition(g);
  std::vector<BigInt> w{BigInt(-1), BigInt(0), BigInt(1)};
  auto r = min_cycle<BigInt>(g, t, w);
  ASSERT_TRUE(r.c);
  EXPECT_EQ(*r.c, 0);
}

TEST(MinCycle, Int64OverflowThrows) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
  auto g = make_graph(3, {{0, 1, big, 1}, {1, 2, big, 1}, {2, 0, big, 1}});
  std::vector<std::int64_t> w{big, big, big};
  EXPECT_THROW(min_cycle<std::int64_t>(g, build_decomposition(g), w), std::overflow_error);
  auto r = min_cycle(g, build_decomposition(g));
  ASSERT_TRUE(r.c);
  EXPECT_EQ(*r.c, BigInt(big) * 3);
}

}  // namespace
}  // namespace twq
