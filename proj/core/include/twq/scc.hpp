#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twq/graph.hpp"

namespace twq {

struct SccPartition {
  std::vector<std::uint32_t> component;           // node -> component id
  std::vector<std::vector<NodeId>> members;        // sorted node ids per component
  std::vector<std::vector<std::uint32_t>> successors;  // condensation edges, deduplicated
  std::vector<bool> cyclic;                        // more than one node, or a self-loop

  // Component ids are already in reverse topological order: every
  // condensation edge goes from a larger id to a smaller one.
  std::size_t count() const { return members.size(); }
};

// Iterative Tarjan, linear time.
SccPartition tarjan_scc(const WeightedDigraph& g);

// value(u) = min over components reachable from u; nullopt means +infinity.
template <class T>
std::vector<std::optional<T>> propagate_component_values(const WeightedDigraph& g, const SccPartition& scc,
                                                         const std::vector<std::optional<T>>& per_component) {
  std::vector<std::optional<T>> best(scc.count());
  for (std::uint32_t c = 0; c < scc.count(); ++c) {
    best[c] = per_component[c];
    for (std::uint32_t d : scc.successors[c]) {
      if (best[d] && (!best[c] || *best[d] < *best[c])) best[c] = best[d];
    }
  }
  std::vector<std::optional<T>> out(g.n());
  for (NodeId u = 0; u < g.n(); ++u) out[u] = best[scc.component[u]];
  return out;
}

}  // namespace twq
