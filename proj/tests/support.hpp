#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "twq/energy_tw.hpp"
#include "twq/generators.hpp"
#include "twq/graph.hpp"

namespace twq::test {

inline std::string data_file(const std::string& name) { return std::string(TWQ_TEST_DATA) + "/" + name; }

struct LabelledEdge {
  const char* src;
  const char* dst;
  std::int64_t weight;
  std::int64_t transit = 1;
};

inline WeightedDigraph labelled(std::initializer_list<LabelledEdge> edges) {
  GraphBuilder b;
  for (const auto& e : edges) {
    NodeId u = b.node(e.src);
    NodeId v = b.node(e.dst);
    b.add_edge(u, v, e.weight, e.transit);
  }
  return b.build();
}

// a -> b -> c -> a, weights 1, 2, 3.
inline WeightedDigraph fixture_a() { return labelled({{"a", "b", 1}, {"b", "c", 2}, {"c", "a", 3}}); }

// Energy example in the non-positive convention; nodes u, v, w, x, y.
inline WeightedDigraph fixture_b_internal() {
  return labelled({{"u", "v", -2}, {"v", "w", -1}, {"w", "x", 3}, {"x", "y", -1}, {"y", "v", -1}});
}
inline WeightedDigraph fixture_b() { return negated(fixture_b_internal()); }

inline WeightedDigraph fixture_c() {
  return labelled({{"s", "t", -1}, {"t", "s", -1}, {"t", "r", 2}, {"r", "t", 2}});
}

inline WeightedDigraph fixture_d() { return labelled({{"1", "2", 1, 1}, {"2", "1", 2, 1}}); }

inline NodeId id(const WeightedDigraph& g, const std::string& label) { return *g.find_node(label); }

struct RandomSpec {
  std::size_t min_n = 2;
  std::size_t max_n = 10;
  std::size_t max_k = 3;
  std::int64_t weight = 20;
  std::int64_t transit = 1;
  bool strong = true;
};

inline WeightedDigraph random_ktree(std::mt19937_64& rng, const RandomSpec& spec) {
  GenOptions o;
  o.n = std::uniform_int_distribution<std::size_t>(spec.min_n, spec.max_n)(rng);
  o.k = std::uniform_int_distribution<std::size_t>(1, spec.max_k)(rng);
  o.min_weight = -spec.weight;
  o.max_weight = spec.weight;
  o.max_transit = spec.transit;
  o.seed = rng();
  o.strongly_connected = spec.strong;
  return generate_ktree(o);
}

inline WeightedDigraph random_sparse(std::mt19937_64& rng, std::size_t max_n, std::int64_t weight, double density) {
  GenOptions o;
  o.n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  o.min_weight = -weight;
  o.max_weight = weight;
  o.edges_per_node = density;
  o.seed = rng();
  return generate_sparse_random(o);
}

// Triple of an explicit path by a direct prefix scan. Every edge nominates
// a node: its source when the edge is negative or enters z, else its
// target. The result keeps the first nomination of maximal prefix weight.
inline EnergyTriple scan_triple(const std::vector<NodeId>& nodes, const std::vector<std::int64_t>& weights, NodeId z) {
  std::int64_t prefix = 0;
  std::int64_t best = 0;
  NodeId best_node = kNoNode;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    bool at_source = weights[i] < 0 || nodes[i + 1] == z;
    std::int64_t cand = at_source ? prefix : prefix + weights[i];
    NodeId node = at_source ? nodes[i] : nodes[i + 1];
    if (best_node == kNoNode || cand > best) {
      best = cand;
      best_node = node;
    }
    prefix += weights[i];
  }
  return {prefix, best_node, best};
}

}  // namespace twq::test
