#include "twq/mincycle.hpp"

#include <stdexcept>

namespace twq {

namespace {

bool checked_add(std::int64_t a, std::int64_t b, std::int64_t& out) { return !__builtin_add_overflow(a, b, &out); }

bool checked_add(const BigInt& a, const BigInt& b, BigInt& out) {
  out = a + b;
  return true;
}

template <class W>
void relax(std::optional<W>& slot, const W& value) {
  if (!slot || value < *slot) slot = value;
}

// Index in `outer` of every element of `inner`, or -1. Both sorted.
std::vector<int> positions(const std::vector<NodeId>& outer, const std::vector<NodeId>& inner) {
  std::vector<int> pos(inner.size(), -1);
  std::size_t j = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    while (j < outer.size() && outer[j] < inner[i]) ++j;
    if (j < outer.size() && outer[j] == inner[i]) pos[i] = static_cast<int>(j);
  }
  return pos;
}

}  // namespace

template <class W>
MinCycleResult<W> min_cycle(const WeightedDigraph& g, const TreeDecomposition& t, std::span<const W> weights) {
  using Dist = std::optional<W>;
  MinCycleResult<W> result;
  result.height = t.height();
  std::vector<std::vector<Dist>> maps(t.size());
  std::size_t live = 0;
  std::vector<Dist> old;

  for (BagId b : t.post_order()) {
    const Bag& bag = t.bag(b);
    const std::size_t k = bag.nodes.size();
    std::vector<Dist> ld(k * k);
    for (BagId child : bag.children) {
      const auto& cn = t.bag(child).nodes;
      const std::size_t ck = cn.size();
      auto pos = positions(cn, bag.nodes);
      for (std::size_t i = 0; i < k; ++i) {
        if (pos[i] < 0) continue;
        for (std::size_t j = 0; j < k; ++j) {
          if (pos[j] < 0) continue;
          const Dist& d = maps[child][pos[i] * ck + pos[j]];
          if (d) relax(ld[i * k + j], *d);
        }
      }
      std::vector<Dist>().swap(maps[child]);
      --live;
    }

    // An edge enters only at the root bag of one of its endpoints.
    auto index_of = [&](NodeId u) {
      return static_cast<std::size_t>(std::lower_bound(bag.nodes.begin(), bag.nodes.end(), u) - bag.nodes.begin());
    };
    for (NodeId x : bag.rooted) {
      std::size_t xi = index_of(x);
      for (std::size_t j = 0; j < k; ++j) {
        NodeId v = bag.nodes[j];
        if (auto e = g.find_edge(x, v)) relax(ld[xi * k + j], weights[*e]);
        if (v != x)
          if (auto e = g.find_edge(v, x)) relax(ld[j * k + xi], weights[*e]);
      }
    }
    for (NodeId x : bag.rooted) {
      std::size_t xi = index_of(x);
      old = ld;
      for (std::size_t i = 0; i < k; ++i) {
        const Dist& ux = old[i * k + xi];
        if (!ux) continue;
        for (std::size_t j = 0; j < k; ++j) {
          const Dist& xv = old[xi * k + j];
          if (!xv) continue;
          W s;
          if (!checked_add(*ux, *xv, s)) throw std::overflow_error("min_cycle: 64-bit overflow in local distances");
          relax(ld[i * k + j], s);
        }
      }
      if (ld[xi * k + xi]) relax(result.c, *ld[xi * k + xi]);
    }

    maps[b] = std::move(ld);
    ++live;
    ++result.bags;
    result.peak_maps = std::max(result.peak_maps, live);
  }
  return result;
}

template MinCycleResult<std::int64_t> min_cycle(const WeightedDigraph&, const TreeDecomposition&,
                                                std::span<const std::int64_t>);
template MinCycleResult<BigInt> min_cycle(const WeightedDigraph&, const TreeDecomposition&, std::span<const BigInt>);

MinCycleResult<BigInt> min_cycle(const WeightedDigraph& g, const TreeDecomposition& t) {
  std::vector<BigInt> w(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) w[e] = g.edge(e).weight;
  return min_cycle<BigInt>(g, t, w);
}

}  // namespace twq
