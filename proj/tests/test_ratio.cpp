#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "twq/errors.hpp"
#include "twq/oracles.hpp"
#include "twq/ratio.hpp"

namespace twq {
namespace {

Rational frac(std::int64_t p, std::int64_t q) { return Rational(BigInt(p), BigInt(q)); }

DecompositionBuilder default_builder() {
  return [](const WeightedDigraph& g) { return build_decomposition(g); };
}

TEST(Ratio, DecideOnFixtureD) {
  auto g = test::fixture_d();
  auto t = build_decomposition(g);
  EXPECT_TRUE(decide_ratio_geq(g, t, frac(3, 2)));
  EXPECT_TRUE(decide_ratio_eq(g, t, frac(3, 2)));
  EXPECT_FALSE(decide_ratio_geq(g, t, Rational(2)));
  EXPECT_FALSE(decide_ratio_eq(g, t, Rational(1)));
  EXPECT_TRUE(decide_ratio_geq(g, t, Rational(1)));
}

TEST(Ratio, DecideMeanOnFixtureA) {
  auto g = test::fixture_a();
  auto t = build_decomposition(g);
  EXPECT_TRUE(decide_ratio_geq(g, t, Rational(0), Objective::kMean));
  EXPECT_TRUE(decide_ratio_eq(g, t, Rational(2), Objective::kMean));
}

TEST(Ratio, DecideRejectsAcyclic) {
  auto g = make_graph(2, {{0, 1, 1, 1}});
  EXPECT_THROW(decide_ratio_geq(g, build_decomposition(g), Rational(0)), DomainError);
  EXPECT_THROW(ratio_value(g, build_decomposition(g)), DomainError);
}

TEST(Ratio, ExactValues) {
  auto d = test::fixture_d();
  EXPECT_EQ(ratio_value(d, build_decomposition(d)).value, frac(3, 2));
  auto a = test::fixture_a();
  EXPECT_EQ(ratio_value(a, build_decomposition(a), Objective::kMean).value, Rational(2));

  // Cycle 0->1->2->0 of ratio 7/3 and cycle 0->3->0 of ratio 5/2.
  auto two = make_graph(4, {{0, 1, 3, 1}, {1, 2, 2, 1}, {2, 0, 2, 1}, {0, 3, 2, 1}, {3, 0, 3, 1}});
  EXPECT_EQ(ratio_value(two, build_decomposition(two)).value, frac(7, 3));
}

TEST(Ratio, ZeroValueNeedsAtMostTwoCalls) {
  auto loop = make_graph(1, {{0, 0, 0, 1}});
  auto r = ratio_value(loop, build_decomposition(loop), Objective::kMean);
  EXPECT_EQ(r.value, Rational(0));
  EXPECT_LE(r.stats.calls, 2u);
  auto b = test::fixture_b_internal();
  auto vals = ratio_values_all_nodes(b, default_builder(), Objective::kMean);
  EXPECT_LE(vals.stats.calls, 2u);
}

TEST(Ratio, AllNodes) {
  auto b = test::fixture_b_internal();
  for (const auto& v : ratio_values_all_nodes(b, default_builder(), Objective::kMean).values) EXPECT_EQ(v, Rational(0));

  auto dag = make_graph(3, {{0, 1, 1, 1}, {1, 2, 1, 1}});
  for (const auto& v : ratio_values_all_nodes(dag, default_builder()).values) EXPECT_FALSE(v);

  // Means 1 on {0,1} and -1 on {2,3}; bridge 1->2.
  auto bridged = make_graph(4, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 2, 9, 1}, {2, 3, -1, 1}, {3, 2, -1, 1}});
  auto vals = ratio_values_all_nodes(bridged, default_builder(), Objective::kMean).values;
  for (const auto& v : vals) EXPECT_EQ(v, Rational(-1));
}

TEST(Ratio, SternBrocotAgrees) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 150; ++i) {
    auto g = test::random_ktree(rng, {2, 10, 3, 20, 5, true});
    auto t = build_decomposition(g);
    EXPECT_EQ(ratio_value(g, t, Objective::kRatio, Refinement::kSternBrocot).value, ratio_value(g, t).value);
  }
}

TEST(Ratio, MatchesOracles) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto g = test::random_ktree(rng, {2, 10, 3, 20, 5, true});
    auto t = build_decomposition(g);
    auto s = summarize_cycles(enumerate_cycles(g));
    EXPECT_EQ(ratio_value(g, t).value, *s.min_ratio);
    EXPECT_EQ(ratio_value(g, t, Objective::kMean).value, *s.min_mean);
    EXPECT_EQ(karp_mean(g), *s.min_mean);
  }
}

TEST(Ratio, DecisionIsMonotone) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 60; ++i) {
    auto g = test::random_ktree(rng, {2, 8, 3, 10, 3, true});
    auto t = build_decomposition(g);
    bool seen_false = false;
    for (int p = -40; p <= 40; ++p) {
      bool geq = decide_ratio_geq(g, t, frac(p, 4));
      if (seen_false) {
        EXPECT_FALSE(geq);
      }
      seen_false = seen_false || !geq;
    }
  }
}

TEST(Approx, Examples) {
  auto a = test::fixture_a();
  auto ra = approx_mean(a, build_decomposition(a), frac(1, 10));
  EXPECT_LE((ra.value - Rational(2)).abs(), frac(2, 10));
  EXPECT_FALSE(ra.shifted);

  auto c = test::fixture_c();
  auto rc = approx_mean(c, build_decomposition(c), frac(1, 2));
  EXPECT_LE((rc.value + Rational(1)).abs(), frac(1, 2));
  EXPECT_TRUE(rc.shifted);

  auto loop = make_graph(1, {{0, 0, 0, 1}});
  EXPECT_EQ(approx_mean(loop, build_decomposition(loop), frac(1, 2)).value, Rational(0));
}

TEST(Approx, RejectsBadEpsilon) {
  auto a = test::fixture_a();
  auto t = build_decomposition(a);
  EXPECT_THROW(approx_mean(a, t, Rational(0)), DomainError);
  EXPECT_THROW(approx_mean(a, t, Rational(1)), DomainError);
  EXPECT_THROW(approx_mean(a, t, Rational(-1)), DomainError);
}

TEST(Approx, GuaranteeAndStepBound) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 60; ++i) {
    auto g = test::random_ktree(rng, {2, 10, 3, 20, 1, true});
    auto t = build_decomposition(g);
    Rational star = *summarize_cycles(enumerate_cycles(g)).min_mean;
    for (auto eps : {frac(1, 2), frac(1, 10), frac(1, 100)}) {
      auto r = approx_mean(g, t, eps);
      EXPECT_LE((r.value - star).abs(), eps * star.abs());
      EXPECT_LE(static_cast<std::int64_t>(r.stats.approx_steps), r.step_bound + 1);
    }
  }
}

TEST(Approx, AllNodes) {
  auto b = test::fixture_b_internal();
  for (const auto& v : approx_mean_all_nodes(b, default_builder(), frac(1, 10)).values) EXPECT_EQ(v, Rational(0));
}

}  // namespace
}  // namespace twq
