#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "twq/errors.hpp"
#include "twq/oracles.hpp"

namespace twq {
namespace {

TEST(Oracles, KarpMean) {
  EXPECT_EQ(karp_mean(test::fixture_a()), Rational(2));
  EXPECT_EQ(karp_mean(test::fixture_c()), Rational(-1));
  EXPECT_EQ(karp_mean(test::fixture_b_internal()), Rational(0));
  EXPECT_THROW(karp_mean(make_graph(2, {{0, 1, 1, 1}})), DomainError);
  auto vals = karp_values_all_nodes(make_graph(3, {{0, 1, 5, 1}, {1, 1, -2, 1}}));
  EXPECT_EQ(vals.values[0], Rational(-2));
  EXPECT_FALSE(vals.values[2]);
}

TEST(Oracles, EnumerateCycles) {
  auto c = enumerate_cycles(test::fixture_c());
  ASSERT_EQ(c.size(), 2u);
  auto s = summarize_cycles(c);
  EXPECT_EQ(s.min_weight, -2);
  EXPECT_EQ(s.min_mean, Rational(-1));
  EXPECT_TRUE(s.has_nonpositive);

  // Complete digraph on 4 nodes: 6 two-cycles, 8 three-cycles, 6 four-cycles.
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = 0; v < 4; ++v)
      if (u != v) edges.push_back({u, v, 1, 1});
  auto k4 = make_graph(4, edges);
  EXPECT_EQ(enumerate_cycles(k4).size(), 20u);
  EXPECT_THROW(enumerate_cycles(k4, 19), OracleTooBig);
  EXPECT_TRUE(enumerate_cycles(make_graph(2, {{0, 1, 1, 1}})).empty());
}

TEST(Oracles, CycleValuesPerNode) {
  auto d = test::fixture_d();
  auto r = cycle_values_all_nodes(d, Objective::kRatio);
  EXPECT_EQ(r[0], Rational(BigInt(3), BigInt(2)));
  auto bridged = make_graph(4, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 2, 9, 1}, {2, 3, -1, 1}, {3, 2, -1, 1}});
  auto m = cycle_values_all_nodes(bridged, Objective::kMean);
  EXPECT_EQ(m[0], Rational(-1));
  EXPECT_EQ(m[3], Rational(-1));
}

TEST(Oracles, KarpAgreesWithEnumeration) {
  std::mt19937_64 rng(51);
  for (int i = 0; i < 300; ++i) {
    auto g = test::random_sparse(rng, 10, 10, 1.6);
    EXPECT_EQ(karp_values_all_nodes(g).values, cycle_values_all_nodes(g, Objective::kMean));
  }
}

TEST(Oracles, EnergyFixpoint) {
  EXPECT_EQ(energy_fixpoint(test::fixture_b()), (EnergyVector{0, 2, 3, 0, 1}));
  auto sink = energy_fixpoint(make_graph(2, {{0, 1, 3, 1}}));
  EXPECT_FALSE(sink[0]);
  EXPECT_FALSE(sink[1]);
  EXPECT_EQ(energy_fixpoint(make_graph(1, {{0, 0, -1, 1}})), EnergyVector{std::nullopt});
  EXPECT_EQ(energy_fixpoint(make_graph(2, {{0, 1, -4, 1}, {1, 1, 0, 1}})), (EnergyVector{4, 0}));
}

TEST(Oracles, BellmanFord) {
  auto g = make_graph(3, {{0, 1, 4, 1}, {0, 2, 1, 1}, {2, 1, 1, 1}});
  auto r = bellman_ford(g, 0);
  EXPECT_FALSE(r.negative_cycle);
  EXPECT_EQ(r.dist, (std::vector<std::optional<std::int64_t>>{0, 2, 1}));
  EXPECT_EQ(r.pred[1], 2u);

  std::vector<std::int64_t> w{4, 1, -5};
  auto loop = make_graph(3, {{0, 1, 4, 1}, {1, 2, 1, 1}, {2, 1, -5, 1}});
  auto neg = bellman_ford(loop, 0, w);
  ASSERT_TRUE(neg.negative_cycle);
  std::vector<NodeId> c = *neg.negative_cycle;
  std::sort(c.begin(), c.end());
  EXPECT_EQ(c, (std::vector<NodeId>{1, 2}));
}

}  // namespace
}  // namespace twq
