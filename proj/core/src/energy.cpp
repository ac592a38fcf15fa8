#include "twq/energy.hpp"

#include <stdexcept>

#include "twq/errors.hpp"

namespace twq {

namespace {

std::int64_t scale(std::int64_t w, std::size_t n) {
  std::int64_t out;
  if (__builtin_mul_overflow(w, static_cast<std::int64_t>(n), &out) || __builtin_sub_overflow(out, 1, &out))
    throw std::overflow_error("energy: 64-bit overflow scaling weights");
  return out;
}

std::optional<std::vector<NodeId>> nonpositive_cycle_from(std::size_t n, std::span<const ArcRef> arcs,
                                                          std::size_t cycle_bound, NodeId source) {
  std::vector<ArcRef> scaled(arcs.begin(), arcs.end());
  for (ArcRef& a : scaled) a.weight = scale(a.weight, cycle_bound);
  return bellman_ford_arcs(n, scaled, source).negative_cycle;
}

EnergyVector flip(const EnergyVector& v) {
  EnergyVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) out[i] = -*v[i];
  return out;
}

}  // namespace

std::optional<std::vector<NodeId>> detect_nonpositive_cycle(std::size_t n, std::span<const ArcRef> arcs) {
  if (n == 0) return std::nullopt;
  // Extra source n reaches everything with weight 0; it lies on no cycle.
  std::vector<ArcRef> all(arcs.begin(), arcs.end());
  for (NodeId v = 0; v < n; ++v) all.push_back({static_cast<NodeId>(n), v, 0});
  std::vector<ArcRef> scaled(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    scaled[i] = all[i];
    if (i < arcs.size()) scaled[i].weight = scale(all[i].weight, n);
  }
  return bellman_ford_arcs(n + 1, scaled, static_cast<NodeId>(n)).negative_cycle;
}

std::optional<std::vector<NodeId>> detect_nonpositive_cycle(const WeightedDigraph& g) {
  std::vector<ArcRef> arcs;
  arcs.reserve(g.m());
  for (const Edge& e : g.edges()) arcs.push_back({e.src, e.dst, e.weight});
  return detect_nonpositive_cycle(g.n(), arcs);
}

HighestEnergy highest_energy_node(std::span<const NodeId> cycle, const ArcWeight& weight, NodeId skip) {
  if (cycle.empty()) throw DomainError("highest_energy_node: empty cycle");
  const std::size_t k = cycle.size();
  HighestEnergy best{0, cycle[0], 0};
  std::int64_t prefix = 0;
  for (std::size_t i = 1; i < k; ++i) {
    prefix += weight(cycle[i - 1], cycle[i]);
    if (prefix > best.prefix) best = {i, cycle[i], prefix};
  }
  if (best.node == skip) {
    std::size_t next = (best.index + 1) % k;
    best = {next, cycle[next], best.prefix + weight(skip, cycle[next])};
  }
  return best;
}

bool decision_energy_nonpositive(const WeightedDigraph& g, NodeId u, std::int64_t c) {
  if (c > 0) throw DomainError("decision_energy: credit must be <= 0 in the non-positive convention");
  if (u >= g.n()) throw DomainError("decision_energy: node out of range");
  const std::size_t n = g.n();
  std::vector<std::optional<std::int64_t>> d(n);
  d[u] = c;
  for (std::size_t round = 1; round < n; ++round) {
    bool changed = false;
    for (const Edge& e : g.edges()) {
      if (!d[e.src]) continue;
      std::int64_t cand;
      if (__builtin_add_overflow(*d[e.src], e.weight, &cand))
        throw std::overflow_error("decision_energy: 64-bit overflow");
      if (cand > 0 || (d[e.dst] && *d[e.dst] <= cand)) continue;
      d[e.dst] = cand;
      changed = true;
    }
    if (!changed) break;
  }
  std::vector<NodeId> reached;
  for (NodeId v = 0; v < n; ++v)
    if (d[v]) reached.push_back(v);
  Subgraph sub = induced_subgraph(g, reached);
  return detect_nonpositive_cycle(sub.graph).has_value();
}

bool decide_energy(const WeightedDigraph& g, NodeId u, std::int64_t credit) {
  if (credit < 0) throw DomainError("decide_energy: credit must be >= 0");
  return decision_energy_nonpositive(negated(g), u, -credit);
}

ZeroEnergyResult zero_energy_nodes(const WeightedDigraph& g) {
  const std::size_t n = g.n();
  const NodeId z = static_cast<NodeId>(n);
  ZeroEnergyResult out;
  out.to_z.assign(n, std::nullopt);
  std::vector<char> alive(n, 1);
  std::size_t alive_count = n + 1;

  auto weight = [&](NodeId a, NodeId b) -> std::int64_t {
    if (a == z) return 0;
    if (b == z) return *out.to_z[a];
    return g.edge(*g.find_edge(a, b)).weight;
  };

  std::vector<ArcRef> arcs;
  for (;;) {
    arcs.clear();
    for (const Edge& e : g.edges())
      if (alive[e.src] && alive[e.dst]) arcs.push_back({e.src, e.dst, e.weight});
    for (NodeId v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      arcs.push_back({z, v, 0});
      if (out.to_z[v]) arcs.push_back({v, z, *out.to_z[v]});
    }
    ++out.passes;
    auto cycle = nonpositive_cycle_from(n + 1, arcs, alive_count, z);
    if (!cycle) break;

    // z never qualifies: its out-edges weigh 0, so the node after it ties.
    NodeId w = highest_energy_node(*cycle, weight, z).node;
    out.zero_nodes.push_back(w);
    alive[w] = 0;
    --alive_count;
    for (EdgeId e : g.in_edges(w)) {
      const Edge& ed = g.edge(e);
      if (!alive[ed.src]) continue;
      auto& slot = out.to_z[ed.src];
      if (!slot || ed.weight < *slot) slot = ed.weight;
      out.rewires.emplace_back(ed.src, *slot);
    }
  }
  out.final_arcs = std::move(arcs);
  return out;
}

EnergyResult energy_values_nonpositive(const WeightedDigraph& g) {
  EnergyResult out;
  out.zero = zero_energy_nodes(g);
  const std::size_t n = g.n();
  const NodeId z = static_cast<NodeId>(n);

  std::vector<ArcRef> reversed;
  reversed.reserve(out.zero.final_arcs.size());
  for (const ArcRef& a : out.zero.final_arcs) reversed.push_back({a.dst, a.src, a.weight});
  auto bf = bellman_ford_arcs(n + 1, reversed, z);
  if (bf.negative_cycle) throw InternalError("negative cycle left after zero-energy discovery");

  out.values.assign(n, std::nullopt);
  for (NodeId x : out.zero.zero_nodes) out.values[x] = 0;
  for (NodeId u = 0; u < n; ++u) {
    if (out.values[u] || !bf.dist[u]) continue;
    if (*bf.dist[u] <= 0) throw InternalError("node outside the zero-energy set has distance <= 0 to z");
    out.values[u] = -*bf.dist[u];
  }
  return out;
}

EnergyResult energy_values(const WeightedDigraph& g) {
  EnergyResult out = energy_values_nonpositive(negated(g));
  out.values = flip(out.values);
  return out;
}

}  // namespace twq
