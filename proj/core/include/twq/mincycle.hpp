#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twq/graph.hpp"
#include "twq/rational.hpp"
#include "twq/treedec.hpp"

namespace twq {

template <class W>
struct MinCycleResult {
  std::optional<W> c;         // nullopt: the graph is acyclic
  std::uint32_t height = 0;   // of the decomposition used
  std::size_t peak_maps = 0;  // local distance maps alive at once
  std::size_t bags = 0;

  // c equals the minimum cycle weight whenever it is non-negative.
  bool exact() const { return !c || *c >= 0; }
};

// Bottom-up local distances over t. weights[e] replaces the weight of edge e.
// Without negative cycles c is the minimum simple-cycle weight; otherwise
// c <= that minimum and |c| <= |minimum| * m * 2^height.
// The int64 instantiation throws std::overflow_error instead of wrapping.
template <class W>
MinCycleResult<W> min_cycle(const WeightedDigraph& g, const TreeDecomposition& t, std::span<const W> weights);

extern template MinCycleResult<std::int64_t> min_cycle(const WeightedDigraph&, const TreeDecomposition&,
                                                       std::span<const std::int64_t>);
extern template MinCycleResult<BigInt> min_cycle(const WeightedDigraph&, const TreeDecomposition&,
                                                 std::span<const BigInt>);

// Uses the graph's own weights, in arbitrary precision.
MinCycleResult<BigInt> min_cycle(const WeightedDigraph& g, const TreeDecomposition& t);

template <class W>
bool has_negative_cycle(const WeightedDigraph& g, const TreeDecomposition& t, std::span<const W> weights) {
  auto r = min_cycle<W>(g, t, weights);
  return r.c && *r.c < 0;
}

}  // namespace twq
