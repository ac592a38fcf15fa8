#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "twq/graph.hpp"
#include "twq/shortest_paths.hpp"

namespace twq {

// Per-node energies. In the non-positive convention values are <= 0 and
// nullopt means minus infinity; in the standard convention values are >= 0
// and nullopt means plus infinity.
using EnergyVector = std::vector<std::optional<std::int64_t>>;

// A simple cycle of weight <= 0 in edge order, found by Bellman-Ford on the
// integer weights n*wt - 1.
std::optional<std::vector<NodeId>> detect_nonpositive_cycle(std::size_t n, std::span<const ArcRef> arcs);
std::optional<std::vector<NodeId>> detect_nonpositive_cycle(const WeightedDigraph& g);

struct HighestEnergy {
  std::size_t index = 0;  // position in the cycle
  NodeId node = kNoNode;
  std::int64_t prefix = 0;
};

using ArcWeight = std::function<std::int64_t(NodeId, NodeId)>;

// First maximum prefix of the walk cycle[0] -> cycle[1] -> ... -> cycle[0],
// counting the empty prefix. If that lands on `skip`, the next node is
// taken instead; this is only sound when edges leaving `skip` weigh 0.
HighestEnergy highest_energy_node(std::span<const NodeId> cycle, const ArcWeight& weight, NodeId skip = kNoNode);

// E(u) >= c in the non-positive convention, c <= 0.
bool decision_energy_nonpositive(const WeightedDigraph& g, NodeId u, std::int64_t c);
// E(u) <= credit in the standard convention, credit >= 0.
bool decide_energy(const WeightedDigraph& g, NodeId u, std::int64_t credit);

struct ZeroEnergyResult {
  std::vector<NodeId> zero_nodes;                 // discovery order
  std::vector<std::optional<std::int64_t>> to_z;  // final weight of (x,z)
  std::vector<std::pair<NodeId, std::int64_t>> rewires;  // every assignment to (x,z), in order
  std::size_t passes = 0;                         // Bellman-Ford runs
  std::vector<ArcRef> final_arcs;                 // last working graph, z = n
};

// Non-positive convention. The working graph adds z = n with 0-weight
// edges to every node; each pass kills one highest-energy node.
ZeroEnergyResult zero_energy_nodes(const WeightedDigraph& g);

struct EnergyResult {
  EnergyVector values;
  ZeroEnergyResult zero;
};

EnergyResult energy_values_nonpositive(const WeightedDigraph& g);
// Standard convention: weights and results are negated around the above.
EnergyResult energy_values(const WeightedDigraph& g);

}  // namespace twq
