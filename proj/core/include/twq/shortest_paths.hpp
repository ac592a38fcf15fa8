#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twq/graph.hpp"

namespace twq {

struct ArcRef {
  NodeId src;
  NodeId dst;
  std::int64_t weight;
};

struct BellmanFordResult {
  std::vector<std::optional<std::int64_t>> dist;  // nullopt: unreachable
  std::vector<NodeId> pred;                       // kNoNode at the source and unreached nodes
  // Nodes of a negative cycle in edge order, each once.
  std::optional<std::vector<NodeId>> negative_cycle;
  std::size_t rounds = 0;
};

// Bellman-Ford over an arc list on nodes 0..n-1. Stops early on a stable
// round or as soon as the predecessor graph closes a cycle. Distances are
// only meaningful when no negative cycle was found. Throws
// std::overflow_error if a distance leaves the 64-bit range.
BellmanFordResult bellman_ford_arcs(std::size_t n, std::span<const ArcRef> arcs, NodeId source);

}  // namespace twq
