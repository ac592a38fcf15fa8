#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "twq/graph.hpp"

namespace twq {

enum class GraphKind { kKTree, kSparseRandom, kCfgLike };

std::optional<GraphKind> graph_kind_from_name(std::string_view name);
const char* to_string(GraphKind kind);

struct GenOptions {
  std::size_t n = 10;
  std::size_t k = 2;                // k-tree width; ignored elsewhere
  std::int64_t min_weight = -10;
  std::int64_t max_weight = 10;
  std::int64_t max_transit = 1;     // transit drawn from [1, max_transit]
  std::uint64_t seed = 1;
  double both_directions = 0.3;     // k-tree: chance an edge gets both orientations
  double edges_per_node = 3.0;      // sparse-random density
  bool strongly_connected = false;  // add reverse edges until one component remains
};

// Random k-tree from a (k+1)-clique by attaching each new node to a random
// existing k-clique. Treewidth <= k by construction. Requires k <= 5.
WeightedDigraph generate_ktree(const GenOptions& opt);

// About edges_per_node * n distinct random edges, no self-loops.
WeightedDigraph generate_sparse_random(const GenOptions& opt);

// Structured control flow: nested sequences, branches and loops, exactly n
// nodes. With strongly_connected the exit jumps back to the entry.
WeightedDigraph generate_cfg_like(const GenOptions& opt);

WeightedDigraph generate(GraphKind kind, const GenOptions& opt);

}  // namespace twq
