#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twq/energy.hpp"
#include "twq/graph.hpp"
#include "twq/treedec.hpp"

namespace twq {

// Path summary: weight a, a highest-energy node b and the weight c of the
// prefix ending there. b == kNoNode is the absorbing "no path" element.
struct EnergyTriple {
  std::int64_t a = 0;
  NodeId b = kNoNode;
  std::int64_t c = 0;

  static EnergyTriple none() { return {}; }
  bool is_none() const { return b == kNoNode; }
  friend bool operator==(const EnergyTriple&, const EnergyTriple&) = default;
};

// Smaller a wins; ties keep x.
EnergyTriple triple_min(const EnergyTriple& x, const EnergyTriple& y);
// Concatenation: (a1+a2, b, max(c1, a1+c2)) with b = b1 when c1 attains the max.
EnergyTriple triple_plus(const EnergyTriple& x, const EnergyTriple& y);
// Triple of the single edge (u,v) of weight f; nullopt is an absent edge.
EnergyTriple lift(std::optional<std::int64_t> f, NodeId u, NodeId v, NodeId z);

// Mutable edge weights of the working graph; nullopt means infinity.
struct WorkingWeights {
  std::vector<std::optional<std::int64_t>> edge;    // per edge of g
  std::vector<std::optional<std::int64_t>> from_z;  // (z,v)
  std::vector<std::optional<std::int64_t>> to_z;    // (x,z)

  static WorkingWeights initial(const WeightedDigraph& g);
  std::optional<std::int64_t> get(const WeightedDigraph& g, NodeId u, NodeId v) const;
};

using TripleMap = std::vector<EnergyTriple>;  // row-major over the sorted bag nodes

struct EnergyTwStats {
  std::size_t kills = 0;
  std::size_t killed_edges = 0;
  std::size_t recomputations = 0;      // bag maps computed, first passes included
  std::size_t update_path_total = 0;   // bags queued by edge kills
  std::uint32_t height = 0;
  std::size_t bags = 0;
};

struct ZeroEnergyTwResult {
  std::vector<NodeId> zero_nodes;  // discovery order
  WorkingWeights weights;          // final
  std::vector<TripleMap> maps;     // final map of every bag of t2
  EnergyTwStats stats;
};

// t2 must come from extend_with_z on a decomposition of g; z = g.n().
// Non-positive convention.
ZeroEnergyTwResult zero_energy_nodes_tw(const WeightedDigraph& g, const TreeDecomposition& t2);

// Fresh bottom-up maps of every bag for the given weights.
std::vector<TripleMap> extended_local_maps(const WeightedDigraph& g, const TreeDecomposition& t2,
                                           const WorkingWeights& weights);

// d(u,z) for u in 0..n, from final maps. Throws InternalError if a map
// still shows a cycle of weight <= 0.
std::vector<std::optional<std::int64_t>> sssp_to_z_treedec(const TreeDecomposition& t2,
                                                           const std::vector<TripleMap>& maps);

struct EnergyTwResult {
  EnergyVector values;
  ZeroEnergyTwResult zero;
};

// t is a decomposition of g itself; z is added internally.
EnergyTwResult energy_values_tw_nonpositive(const WeightedDigraph& g, const TreeDecomposition& t);
// Standard convention.
EnergyTwResult energy_values_tw(const WeightedDigraph& g, const TreeDecomposition& t);

}  // namespace twq
