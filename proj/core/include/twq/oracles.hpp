#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twq/energy.hpp"
#include "twq/graph.hpp"
#include "twq/ratio.hpp"
#include "twq/rational.hpp"
#include "twq/shortest_paths.hpp"

namespace twq {

// Karp's recurrence per cyclic strongly connected component; the minimum
// over all of them. Throws DomainError on an acyclic graph.
Rational karp_mean(const WeightedDigraph& g);
NodeValues karp_values_all_nodes(const WeightedDigraph& g);

struct CycleRecord {
  std::vector<NodeId> nodes;  // each once, starting at the smallest id
  std::int64_t weight = 0;
  std::int64_t transit = 0;

  std::size_t length() const { return nodes.size(); }
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

// Every simple cycle. Throws OracleTooBig past `cap` cycles.
std::vector<CycleRecord> enumerate_cycles(const WeightedDigraph& g, std::size_t cap = kDefaultCycleCap);

struct CycleSummary {
  std::size_t count = 0;
  std::optional<Rational> min_mean;
  std::optional<Rational> min_ratio;
  std::optional<std::int64_t> min_weight;
  bool has_nonpositive = false;
};

CycleSummary summarize_cycles(std::span<const CycleRecord> cycles);

// Per node, the minimum over cycles reachable from it; nullopt if none.
std::vector<std::optional<Rational>> cycle_values_all_nodes(const WeightedDigraph& g, Objective objective,
                                                            std::size_t cap = kDefaultCycleCap);

// Standard convention: f(u) = min over (u,v) of max(0, f(v) - wt(u,v)),
// iterated up from 0; values above n*W become infinity.
EnergyVector energy_fixpoint(const WeightedDigraph& g);

// Plain Bellman-Ford; `weights` overrides edge weights when non-empty.
BellmanFordResult bellman_ford(const WeightedDigraph& g, NodeId source, std::span<const std::int64_t> weights = {});

}  // namespace twq
