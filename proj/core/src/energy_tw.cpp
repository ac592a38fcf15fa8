#include "twq/energy_tw.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "twq/errors.hpp"

namespace twq {

namespace {

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("energy_tw: 64-bit overflow");
  return out;
}

std::vector<int> positions(const std::vector<NodeId>& outer, const std::vector<NodeId>& inner) {
  std::vector<int> pos(inner.size(), -1);
  std::size_t j = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    while (j < outer.size() && outer[j] < inner[i]) ++j;
    if (j < outer.size() && outer[j] == inner[i]) pos[i] = static_cast<int>(j);
  }
  return pos;
}

// Bottom-up map of bag b from its children's maps. Edges enter only at the
// root bag of an endpoint, so a killed edge is stale only on one bag path.
TripleMap compute_map(const WeightedDigraph& g, const TreeDecomposition& t, const WorkingWeights& w,
                      const std::vector<TripleMap>& maps, BagId b) {
  const NodeId z = static_cast<NodeId>(g.n());
  const Bag& bag = t.bag(b);
  const std::size_t k = bag.nodes.size();
  TripleMap ld(k * k);
  for (BagId child : bag.children) {
    const auto& cn = t.bag(child).nodes;
    const std::size_t ck = cn.size();
    const TripleMap& cm = maps[child];
    auto pos = positions(cn, bag.nodes);
    for (std::size_t i = 0; i < k; ++i) {
      if (pos[i] < 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        if (pos[j] < 0) continue;
        ld[i * k + j] = triple_min(ld[i * k + j], cm[pos[i] * ck + pos[j]]);
      }
    }
  }
  auto index_of = [&](NodeId u) {
    return static_cast<std::size_t>(std::lower_bound(bag.nodes.begin(), bag.nodes.end(), u) - bag.nodes.begin());
  };
  for (NodeId x : bag.rooted) {
    const std::size_t xi = index_of(x);
    for (std::size_t j = 0; j < k; ++j) {
      const NodeId v = bag.nodes[j];
      ld[xi * k + j] = triple_min(ld[xi * k + j], lift(w.get(g, x, v), x, v, z));
      if (v != x) ld[j * k + xi] = triple_min(ld[j * k + xi], lift(w.get(g, v, x), v, x, z));
    }
  }
  TripleMap old;
  for (NodeId x : bag.rooted) {
    const std::size_t xi = index_of(x);
    old = ld;
    for (std::size_t i = 0; i < k; ++i) {
      const EnergyTriple& ux = old[i * k + xi];
      if (ux.is_none()) continue;
      for (std::size_t j = 0; j < k; ++j)
        ld[i * k + j] = triple_min(old[i * k + j], triple_plus(ux, old[xi * k + j]));
    }
  }
  return ld;
}

class ZeroEnergyTw {
 public:
  ZeroEnergyTw(const WeightedDigraph& g, const TreeDecomposition& t)
      : g_(g), t_(t), examined_(t.size(), 0), queued_(t.size(), 0), in_x_(g.n(), 0) {
    out_.weights = WorkingWeights::initial(g);
    out_.maps.resize(t.size());
    out_.stats.height = t.height();
    out_.stats.bags = t.size();
  }

  ZeroEnergyTwResult run() {
    for (BagId b : t_.post_order()) {
      examined_[b] = 1;
      push(b);
      drain();
    }
    return std::move(out_);
  }

 private:
  void push(BagId b) {
    if (queued_[b]) return;
    queued_[b] = 1;
    queue_.emplace(t_.bag(b).level, b);
  }

  // Deepest first, so children are current before their parent is rebuilt.
  void drain() {
    while (!queue_.empty()) {
      BagId b = queue_.top().second;
      queue_.pop();
      queued_[b] = 0;
      out_.maps[b] = compute_map(g_, t_, out_.weights, out_.maps, b);
      ++out_.stats.recomputations;
      if (auto w = qualifying(b)) {
        kill(*w);
        push(b);
      }
    }
  }

  // Highest-energy node of the lowest-id closed walk with weight <= 0.
  std::optional<NodeId> qualifying(BagId b) const {
    const std::size_t k = t_.bag(b).nodes.size();
    const TripleMap& ld = out_.maps[b];
    for (std::size_t i = 0; i < k; ++i) {
      const EnergyTriple& e = ld[i * k + i];
      if (!e.is_none() && e.a <= 0) return e.b;
    }
    return std::nullopt;
  }

  void kill(NodeId w) {
    if (w >= g_.n() || in_x_[w]) throw InternalError("zero-energy node selected twice");
    in_x_[w] = 1;
    out_.zero_nodes.push_back(w);
    ++out_.stats.kills;
    WorkingWeights& wt = out_.weights;
    for (EdgeId e : g_.in_edges(w)) {
      if (!wt.edge[e]) continue;
      const NodeId x = g_.edge(e).src;
      auto& slot = wt.to_z[x];
      if (!slot || g_.edge(e).weight < *slot) slot = g_.edge(e).weight;
      wt.edge[e].reset();
      ++out_.stats.killed_edges;
      const BagId bx = t_.root_bag_of(x), bw = t_.root_bag_of(w);
      mark_path(t_.bag(bx).level >= t_.bag(bw).level ? bx : bw);
    }
    // (z,w) dies without producing a (z,z) loop.
    if (wt.from_z[w]) {
      wt.from_z[w].reset();
      ++out_.stats.killed_edges;
      mark_path(t_.root_bag_of(w));
    }
  }

  // The examined bags from `from` upwards: exactly those whose maps may hold
  // the old weights.
  void mark_path(BagId from) {
    for (BagId b = from; b != kNoBag && examined_[b]; b = t_.bag(b).parent) {
      push(b);
      ++out_.stats.update_path_total;
    }
  }

  const WeightedDigraph& g_;
  const TreeDecomposition& t_;
  ZeroEnergyTwResult out_;
  std::vector<char> examined_, queued_, in_x_;
  std::priority_queue<std::pair<std::uint32_t, BagId>> queue_;
};

}  // namespace

EnergyTriple triple_min(const EnergyTriple& x, const EnergyTriple& y) {
  if (y.is_none()) return x;
  if (x.is_none()) return y;
  return y.a < x.a ? y : x;
}

EnergyTriple triple_plus(const EnergyTriple& x, const EnergyTriple& y) {
  if (x.is_none() || y.is_none()) return EnergyTriple::none();
  const std::int64_t via = add(x.a, y.c);
  if (x.c >= via) return {add(x.a, y.a), x.b, x.c};
  return {add(x.a, y.a), y.b, via};
}

EnergyTriple lift(std::optional<std::int64_t> f, NodeId u, NodeId v, NodeId z) {
  if (!f) return EnergyTriple::none();
  if (*f < 0 || v == z) return {*f, u, 0};
  return {*f, v, *f};
}

WorkingWeights WorkingWeights::initial(const WeightedDigraph& g) {
  WorkingWeights w;
  w.edge.resize(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) w.edge[e] = g.edge(e).weight;
  w.from_z.assign(g.n(), std::int64_t{0});
  w.to_z.assign(g.n(), std::nullopt);
  return w;
}

std::optional<std::int64_t> WorkingWeights::get(const WeightedDigraph& g, NodeId u, NodeId v) const {
  const NodeId z = static_cast<NodeId>(g.n());
  if (u == z) return v == z ? std::nullopt : from_z[v];
  if (v == z) return to_z[u];
  auto e = g.find_edge(u, v);
  return e ? edge[*e] : std::nullopt;
}

ZeroEnergyTwResult zero_energy_nodes_tw(const WeightedDigraph& g, const TreeDecomposition& t2) {
  if (t2.node_count() != g.n() + 1) throw DomainError("decomposition does not include the extra node z");
  return ZeroEnergyTw(g, t2).run();
}

std::vector<TripleMap> extended_local_maps(const WeightedDigraph& g, const TreeDecomposition& t2,
                                           const WorkingWeights& weights) {
  std::vector<TripleMap> maps(t2.size());
  for (BagId b : t2.post_order()) maps[b] = compute_map(g, t2, weights, maps, b);
  return maps;
}

std::vector<std::optional<std::int64_t>> sssp_to_z_treedec(const TreeDecomposition& t2,
                                                           const std::vector<TripleMap>& maps) {
  const std::size_t n2 = t2.node_count();
  const NodeId z = static_cast<NodeId>(n2 - 1);
  std::vector<std::optional<std::int64_t>> d(n2);
  d[z] = 0;
  auto order = t2.post_order();
  // Parents first. Every other node of a bag has its root bag above it, so
  // its distance is already known.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Bag& bag = t2.bag(*it);
    const std::size_t k = bag.nodes.size();
    const TripleMap& ld = maps[*it];
    for (std::size_t i = 0; i < k; ++i) {
      const EnergyTriple& self = ld[i * k + i];
      if (!self.is_none() && self.a <= 0) throw InternalError("cycle of weight <= 0 left in the final maps");
    }
    for (NodeId u : bag.rooted) {
      if (u == z) continue;
      const std::size_t ui = std::lower_bound(bag.nodes.begin(), bag.nodes.end(), u) - bag.nodes.begin();
      std::optional<std::int64_t> best;
      for (std::size_t j = 0; j < k; ++j) {
        const NodeId v = bag.nodes[j];
        const EnergyTriple& uv = ld[ui * k + j];
        if (v == u || uv.is_none() || !d[v]) continue;
        std::int64_t cand = add(uv.a, *d[v]);
        if (!best || cand < *best) best = cand;
      }
      d[u] = best;
    }
  }
  return d;
}

EnergyTwResult energy_values_tw_nonpositive(const WeightedDigraph& g, const TreeDecomposition& t) {
  if (t.node_count() != g.n()) throw DomainError("decomposition does not match the graph");
  TreeDecomposition t2 = extend_with_z(t);
  EnergyTwResult out;
  out.zero = zero_energy_nodes_tw(g, t2);
  auto d = sssp_to_z_treedec(t2, out.zero.maps);
  out.values.assign(g.n(), std::nullopt);
  for (NodeId x : out.zero.zero_nodes) out.values[x] = 0;
  for (NodeId u = 0; u < g.n(); ++u) {
    if (out.values[u] || !d[u]) continue;
    if (*d[u] <= 0) throw InternalError("node outside the zero-energy set has distance <= 0 to z");
    out.values[u] = -*d[u];
  }
  return out;
}

EnergyTwResult energy_values_tw(const WeightedDigraph& g, const TreeDecomposition& t) {
  EnergyTwResult out = energy_values_tw_nonpositive(negated(g), t);
  for (auto& v : out.values)
    if (v) v = -*v;
  return out;
}

}  // namespace twq
