#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "twq/energy.hpp"
#include "twq/errors.hpp"
#include "twq/oracles.hpp"

namespace twq {
namespace {

using test::id;

std::int64_t cycle_weight(const WeightedDigraph& g, const std::vector<NodeId>& c) {
  std::int64_t w = 0;
  for (std::size_t i = 0; i < c.size(); ++i) w += g.edge(*g.find_edge(c[i], c[(i + 1) % c.size()])).weight;
  return w;
}

ArcWeight weight_of(const WeightedDigraph& g) {
  return [&g](NodeId u, NodeId v) { return g.edge(*g.find_edge(u, v)).weight; };
}

TEST(Energy, DetectNonpositiveCycle) {
  auto b = test::fixture_b_internal();
  auto c = detect_nonpositive_cycle(b);
  ASSERT_TRUE(c);
  EXPECT_LE(cycle_weight(b, *c), 0);
  EXPECT_FALSE(detect_nonpositive_cycle(test::fixture_a()));
  EXPECT_FALSE(detect_nonpositive_cycle(make_graph(1, {{0, 0, 1, 1}})));
  auto zero = detect_nonpositive_cycle(make_graph(1, {{0, 0, 0, 1}}));
  ASSERT_TRUE(zero);
  EXPECT_EQ(*zero, std::vector<NodeId>{0});
}

TEST(Energy, DetectMatchesEnumeration) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 400; ++i) {
    auto g = test::random_sparse(rng, 10, 5, 1.5);
    auto s = summarize_cycles(enumerate_cycles(g));
    auto c = detect_nonpositive_cycle(g);
    EXPECT_EQ(c.has_value(), s.has_nonpositive);
    if (!c) continue;
    std::vector<NodeId> sorted = *c;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    EXPECT_LE(cycle_weight(g, *c), 0);
  }
}

TEST(Energy, HighestEnergyNode) {
  auto b = test::fixture_b_internal();
  std::vector<NodeId> cyc{id(b, "v"), id(b, "w"), id(b, "x"), id(b, "y")};
  auto h = highest_energy_node(cyc, weight_of(b));
  EXPECT_EQ(h.node, id(b, "x"));
  EXPECT_EQ(h.prefix, 2);

  auto loop = make_graph(1, {{0, 0, -5, 1}});
  auto hl = highest_energy_node(std::vector<NodeId>{0}, weight_of(loop));
  EXPECT_EQ(hl.node, 0u);
  EXPECT_EQ(hl.prefix, 0);

  // (a, b, a) with weights -3, +3: prefixes 0, -3, 0.
  auto ab = make_graph(2, {{0, 1, -3, 1}, {1, 0, 3, 1}});
  EXPECT_EQ(highest_energy_node(std::vector<NodeId>{0, 1}, weight_of(ab)).node, 0u);
  auto rot = highest_energy_node(std::vector<NodeId>{1, 0}, weight_of(ab));
  EXPECT_EQ(rot.node, 0u);
  EXPECT_EQ(rot.prefix, 3);
}

TEST(Energy, HighestEnergySkipsNode) {
  // Walk z -> a -> z where z attains the maximum at the empty prefix.
  auto g = make_graph(2, {{1, 0, 0, 1}, {0, 1, -2, 1}});
  auto h = highest_energy_node(std::vector<NodeId>{1, 0}, weight_of(g), 1);
  EXPECT_EQ(h.node, 0u);
  EXPECT_EQ(h.prefix, 0);
}

TEST(Energy, Decision) {
  auto b = test::fixture_b_internal();
  EXPECT_TRUE(decision_energy_nonpositive(b, id(b, "v"), -2));
  EXPECT_FALSE(decision_energy_nonpositive(b, id(b, "v"), -1));
  EXPECT_TRUE(decision_energy_nonpositive(b, id(b, "x"), 0));
  auto dag = make_graph(3, {{0, 1, -1, 1}, {1, 2, -1, 1}});
  for (NodeId u = 0; u < 3; ++u) EXPECT_FALSE(decision_energy_nonpositive(dag, u, 0));
  EXPECT_THROW(decision_energy_nonpositive(b, 0, 1), DomainError);
  EXPECT_THROW(decision_energy_nonpositive(b, 9, 0), DomainError);

  auto pub = test::fixture_b();
  EXPECT_TRUE(decide_energy(pub, id(pub, "v"), 2));
  EXPECT_FALSE(decide_energy(pub, id(pub, "v"), 1));
  EXPECT_THROW(decide_energy(pub, 0, -1), DomainError);
}

TEST(Energy, ZeroEnergyNodes) {
  auto b = test::fixture_b_internal();
  auto z = zero_energy_nodes(b);
  std::vector<NodeId> x = z.zero_nodes;
  std::sort(x.begin(), x.end());
  EXPECT_EQ(x, (std::vector<NodeId>{id(b, "u"), id(b, "x")}));
  EXPECT_LE(z.passes, z.zero_nodes.size() + 1);

  EXPECT_TRUE(zero_energy_nodes(test::fixture_a()).zero_nodes.empty());
  auto loop = make_graph(1, {{0, 0, -5, 1}});
  EXPECT_EQ(zero_energy_nodes(loop).zero_nodes, std::vector<NodeId>{0});
}

TEST(Energy, ValuesOnFixtures) {
  auto b = test::fixture_b_internal();
  auto r = energy_values_nonpositive(b);
  EnergyVector want{0, -2, -3, 0, -1};
  EXPECT_EQ(r.values, want);
  auto pub = energy_values(test::fixture_b()).values;
  EXPECT_EQ(pub, (EnergyVector{0, 2, 3, 0, 1}));

  auto dag = make_graph(3, {{0, 1, 4, 1}, {1, 2, 4, 1}});
  for (const auto& v : energy_values(dag).values) EXPECT_FALSE(v);
  EXPECT_EQ(energy_values(make_graph(1, {{0, 0, 0, 1}})).values, EnergyVector{0});
}

TEST(Energy, MatchesFixpointOracle) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 400; ++i) {
    auto g = i % 2 ? test::random_sparse(rng, 10, 5, 1.5) : test::random_ktree(rng, {1, 10, 3, 5, 1, false});
    auto r = energy_values(g);
    EXPECT_EQ(r.values, energy_fixpoint(g));
    EXPECT_LE(r.zero.passes, r.zero.zero_nodes.size() + 1);
  }
}

TEST(Energy, DecisionConsistentWithValues) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 150; ++i) {
    auto g = test::random_sparse(rng, 9, 5, 1.6);
    auto internal = energy_values_nonpositive(g).values;
    for (NodeId u = 0; u < g.n(); ++u) {
      if (!internal[u]) {
        EXPECT_FALSE(decision_energy_nonpositive(g, u, 0));
        continue;
      }
      const std::int64_t e = *internal[u];
      for (std::int64_t c : {e - 1, e, e + 1}) {
        if (c > 0) continue;
        EXPECT_EQ(decision_energy_nonpositive(g, u, c), e >= c) << "u=" << u << " c=" << c;
      }
    }
  }
}

TEST(Energy, RewiringIsMonotone) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 200; ++i) {
    auto g = test::random_sparse(rng, 10, 5, 1.8);
    auto z = zero_energy_nodes(g);
    std::vector<std::optional<std::int64_t>> last(g.n());
    for (auto [x, w] : z.rewires) {
      if (last[x]) {
        EXPECT_LE(w, *last[x]);
      }
      last[x] = w;
    }
    EXPECT_EQ(last, z.to_z);
    std::vector<NodeId> sorted = z.zero_nodes;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
  }
}

}  // namespace
}  // namespace twq
