#include <random>

#include <gtest/gtest.h>

#include "support.hpp"
#include "twq/generators.hpp"
#include "twq/treedec.hpp"

namespace twq {
namespace {

void expect_normalized(const TreeDecomposition& t, const WeightedDigraph& g) {
  auto v = validate(t, g);
  EXPECT_FALSE(v.has_value()) << to_string(v->kind) << ": " << v->message;
  EXPECT_LE(t.height(), height_bound(g.n()));
  for (const Bag& b : t.bags()) {
    EXPECT_LE(b.children.size(), 2u);
    EXPECT_LE(b.rooted.size(), 1u);
  }
  for (NodeId u = 0; u < g.n(); ++u) {
    const std::uint32_t level = t.bag(t.root_bag_of(u)).level;
    for (BagId b = 0; b < t.size(); ++b)
      if (t.contains(b, u)) {
        EXPECT_GE(t.bag(b).level, level);
      }
  }
}

TEST(Treedec, TreeHasWidthOne) {
  auto g = make_graph(7, {{0, 1, 1, 1}, {0, 2, 1, 1}, {1, 3, 1, 1}, {1, 4, 1, 1}, {2, 5, 1, 1}, {6, 2, 1, 1}});
  auto t = build_decomposition(g);
  EXPECT_EQ(t.width(), 1);
  expect_normalized(t, g);
}

TEST(Treedec, TwoTreeKeepsSmallWidth) {
  GenOptions o;
  o.n = 50;
  o.k = 2;
  o.seed = 5;
  auto g = generate_ktree(o);
  EXPECT_EQ(eliminate(g, EliminationHeuristic::kMinDegree).width(), 2);
  auto t = build_decomposition(g);
  EXPECT_LE(t.width(), 6);
  expect_normalized(t, g);
}

TEST(Treedec, CliqueK4) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < 4; ++u)
    for (NodeId v = u + 1; v < 4; ++v) edges.push_back({u, v, 1, 1});
  auto g = make_graph(4, edges);
  auto t = build_decomposition(g);
  EXPECT_EQ(t.width(), 3);
  expect_normalized(t, g);
}

TEST(Treedec, SingleNode) {
  auto g = make_graph(1, {});
  auto t = build_decomposition(g);
  EXPECT_EQ(t.size(), 1u);
  EXPECT_EQ(t.height(), 0u);
  expect_normalized(t, g);
}

TEST(Treedec, ValidateReportsEdgeCoverage) {
  auto g = make_graph(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {0, 2, 1, 1}});
  auto t = TreeDecomposition::from_bags(3, {{0, 1}, {1, 2}}, {kNoBag, 0});
  auto v = validate(t, g, {false, false});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::kEdgeCoverage);
  EXPECT_EQ(v->nodes, (std::vector<NodeId>{0, 2}));
}

TEST(Treedec, ValidateReportsConnectedness) {
  auto g = make_graph(2, {{0, 1, 1, 1}});
  auto t = TreeDecomposition::from_bags(2, {{0, 1}, {1}, {0}}, {kNoBag, 0, 1});
  auto v = validate(t, g, {false, false});
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, Violation::Kind::kConnectedness);
  EXPECT_EQ(v->nodes, (std::vector<NodeId>{0}));
}

TEST(Treedec, ValidateReportsCoverageAndShape) {
  auto g = make_graph(3, {{0, 1, 1, 1}});
  auto missing = TreeDecomposition::from_bags(3, {{0, 1}}, {kNoBag});
  ASSERT_TRUE(validate(missing, g, {false, false}));
  EXPECT_EQ(validate(missing, g, {false, false})->kind, Violation::Kind::kNodeCoverage);

  auto wide = TreeDecomposition::from_bags(3, {{0, 1, 2}, {0}, {1}, {2}}, {kNoBag, 0, 0, 0});
  EXPECT_FALSE(validate(wide, g, {false, false}));
  auto v = validate(wide, g);
  ASSERT_TRUE(v);
  EXPECT_TRUE(v->kind == Violation::Kind::kNotBinary || v->kind == Violation::Kind::kMultipleRoots);
}

TEST(Treedec, PathDecompositionGetsBalanced) {
  std::vector<Edge> edges;
  std::vector<std::vector<NodeId>> bags;
  std::vector<BagId> parent;
  for (NodeId i = 0; i + 1 < 64; ++i) {
    edges.push_back({i, i + 1, 1, 1});
    bags.push_back({i, i + 1});
    parent.push_back(i == 0 ? kNoBag : i - 1);
  }
  auto g = make_graph(64, edges);
  auto path = TreeDecomposition::from_bags(64, bags, parent);
  EXPECT_EQ(path.height(), 62u);
  auto t = balance_and_binarize(path);
  EXPECT_LE(t.width(), 3 * (path.width() + 1) - 1);
  expect_normalized(t, g);
}

TEST(Treedec, BagRootingThreeNodesBecomesChain) {
  auto g = make_graph(3, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 0, 1, 1}});
  auto one = TreeDecomposition::from_bags(3, {{0, 1, 2}}, {kNoBag});
  auto t = balance_and_binarize(one);
  ASSERT_EQ(t.size(), 3u);
  BagId b = t.root();
  std::vector<NodeId> prev;
  for (std::size_t i = 0; i < 3; ++i) {
    const Bag& bag = t.bag(b);
    EXPECT_EQ(bag.nodes.size(), i + 1);
    EXPECT_TRUE(std::includes(bag.nodes.begin(), bag.nodes.end(), prev.begin(), prev.end()));
    EXPECT_EQ(bag.rooted.size(), 1u);
    prev = bag.nodes;
    if (i < 2) {
      ASSERT_EQ(bag.children.size(), 1u);
      b = bag.children[0];
    }
  }
  expect_normalized(t, g);
}

TEST(Treedec, ExtendWithZ) {
  auto g = make_graph(2, {{0, 1, 1, 1}, {1, 0, 1, 1}});
  auto single = TreeDecomposition::from_bags(2, {{0, 1}}, {kNoBag});
  auto t2 = extend_with_z(single);
  EXPECT_EQ(t2.node_count(), 3u);
  EXPECT_EQ(t2.bag(t2.root()).nodes, (std::vector<NodeId>{2}));
  ASSERT_EQ(t2.bag(t2.root()).children.size(), 1u);
  EXPECT_EQ(t2.bag(t2.bag(t2.root()).children[0]).nodes, (std::vector<NodeId>{0, 1, 2}));

  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) {
    auto h = test::random_ktree(rng, {});
    auto t = build_decomposition(h);
    auto tz = extend_with_z(t);
    EXPECT_EQ(tz.width(), t.width() + 1);
    std::vector<Edge> edges = h.edges();
    for (NodeId v = 0; v < h.n(); ++v) edges.push_back({static_cast<NodeId>(h.n()), v, 0, 1});
    auto h2 = make_graph(h.n() + 1, edges);
    EXPECT_FALSE(validate(tz, h2));
    EXPECT_EQ(tz.root_bag_of(static_cast<NodeId>(h.n())), tz.root());
  }
}

TEST(Treedec, RandomGraphsBothHeuristics) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    auto g = i % 2 ? test::random_ktree(rng, {1, 40, 4, 5, 1, false}) : test::random_sparse(rng, 40, 5, 1.5);
    for (auto h : {EliminationHeuristic::kMinDegree, EliminationHeuristic::kMinFill}) {
      auto raw = eliminate(g, h);
      EXPECT_FALSE(validate(raw, g, {false, false}));
      auto t = build_decomposition(g, h);
      EXPECT_LE(t.width(), 3 * (raw.width() + 1) - 1);
      expect_normalized(t, g);
    }
  }
}

// Two nodes separated by bag B in the tree are disconnected in g minus B.
TEST(Treedec, SeparatorProperty) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 150; ++i) {
    auto g = i % 2 ? test::random_ktree(rng, {2, 12, 3, 5, 1, true}) : test::random_sparse(rng, 12, 5, 1.3);
    auto t = build_decomposition(g);
    const std::size_t n = g.n();
    for (BagId b = 0; b < t.size(); ++b) {
      std::vector<char> in_bag(n, 0);
      for (NodeId u : t.bag(b).nodes) in_bag[u] = 1;
      // Tree component of every other bag after deleting b.
      std::vector<int> comp(t.size(), -1);
      int next = 0;
      for (BagId s = 0; s < t.size(); ++s) {
        if (s == b || comp[s] >= 0) continue;
        std::vector<BagId> stack{s};
        comp[s] = next;
        while (!stack.empty()) {
          BagId x = stack.back();
          stack.pop_back();
          std::vector<BagId> nb = t.bag(x).children;
          if (t.bag(x).parent != kNoBag) nb.push_back(t.bag(x).parent);
          for (BagId y : nb)
            if (y != b && comp[y] < 0) {
              comp[y] = next;
              stack.push_back(y);
            }
        }
        ++next;
      }
      std::vector<int> side(n, -1);
      for (NodeId u = 0; u < n; ++u)
        if (!in_bag[u]) side[u] = comp[t.root_bag_of(u)];
      for (NodeId u = 0; u < n; ++u) {
        if (in_bag[u]) continue;
        std::vector<char> seen(n, 0);
        std::vector<NodeId> stack{u};
        seen[u] = 1;
        while (!stack.empty()) {
          NodeId x = stack.back();
          stack.pop_back();
          ASSERT_EQ(side[x], side[u]) << "bag " << b << " does not separate " << u << " and " << x;
          for (EdgeId e : g.out_edges(x)) {
            NodeId y = g.edge(e).dst;
            if (!in_bag[y] && !seen[y]) {
              seen[y] = 1;
              stack.push_back(y);
            }
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace twq
