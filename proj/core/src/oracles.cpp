#include "twq/oracles.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "twq/errors.hpp"
#include "twq/scc.hpp"

namespace twq {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("oracle: 64-bit overflow");
  return out;
}

// Karp on a strongly connected graph with at least one edge.
Rational karp_scc(const WeightedDigraph& g) {
  const std::size_t n = g.n();
  using Row = std::vector<std::optional<std::int64_t>>;
  std::vector<Row> d(n + 1, Row(n));
  d[0][0] = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    for (const Edge& e : g.edges()) {
      if (!d[k - 1][e.src]) continue;
      std::int64_t cand = checked_add(*d[k - 1][e.src], e.weight);
      auto& slot = d[k][e.dst];
      if (!slot || cand < *slot) slot = cand;
    }
  }
  std::optional<Rational> best;
  for (NodeId v = 0; v < n; ++v) {
    if (!d[n][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < n; ++k) {
      if (!d[k][v]) continue;
      Rational r(BigInt(*d[n][v] - *d[k][v]), BigInt(n - k));
      if (!worst || *worst < r) worst = r;
    }
    if (worst && (!best || *worst < *best)) best = worst;
  }
  if (!best) throw InternalError("karp: no walk of length n in a cyclic component");
  return *best;
}

template <class Solve>
std::vector<std::optional<Rational>> per_cyclic_component(const WeightedDigraph& g, const SccPartition& scc,
                                                          Solve&& solve) {
  std::vector<std::optional<Rational>> comp(scc.count());
  for (std::uint32_t c = 0; c < scc.count(); ++c) {
    if (!scc.cyclic[c]) continue;
    comp[c] = solve(induced_subgraph(g, scc.members[c]).graph);
  }
  return comp;
}

}  // namespace

Rational karp_mean(const WeightedDigraph& g) {
  SccPartition scc = tarjan_scc(g);
  std::optional<Rational> best;
  for (auto& v : per_cyclic_component(g, scc, karp_scc))
    if (v && (!best || *v < *best)) best = v;
  if (!best) throw DomainError("graph is acyclic; the mean value is undefined");
  return *best;
}

NodeValues karp_values_all_nodes(const WeightedDigraph& g) {
  SccPartition scc = tarjan_scc(g);
  NodeValues out;
  out.values = propagate_component_values(g, scc, per_cyclic_component(g, scc, karp_scc));
  return out;
}

std::vector<CycleRecord> enumerate_cycles(const WeightedDigraph& g, std::size_t cap) {
  std::vector<CycleRecord> out;
  const std::size_t n = g.n();
  std::vector<char> on_path(n, 0);
  std::vector<NodeId> path;
  std::vector<std::size_t> next_edge;  // per path position, index into out_edges
  std::vector<std::int64_t> weight{0}, transit{0};

  for (NodeId s = 0; s < n; ++s) {
    path.assign(1, s);
    next_edge.assign(1, 0);
    weight.assign(1, 0);
    transit.assign(1, 0);
    on_path[s] = 1;
    while (!path.empty()) {
      const NodeId u = path.back();
      auto outs = g.out_edges(u);
      if (next_edge.back() == outs.size()) {
        on_path[u] = 0;
        path.pop_back();
        next_edge.pop_back();
        weight.pop_back();
        transit.pop_back();
        continue;
      }
      const Edge& e = g.edge(outs[next_edge.back()++]);
      // Each cycle is found once, from its smallest node.
      if (e.dst < s) continue;
      if (e.dst == s) {
        if (out.size() >= cap) throw OracleTooBig("more than " + std::to_string(cap) + " simple cycles");
        out.push_back({path, checked_add(weight.back(), e.weight), checked_add(transit.back(), e.transit)});
        continue;
      }
      if (on_path[e.dst]) continue;
      on_path[e.dst] = 1;
      path.push_back(e.dst);
      next_edge.push_back(0);
      weight.push_back(checked_add(weight.back(), e.weight));
      transit.push_back(checked_add(transit.back(), e.transit));
    }
  }
  return out;
}

CycleSummary summarize_cycles(std::span<const CycleRecord> cycles) {
  CycleSummary s;
  s.count = cycles.size();
  for (const CycleRecord& c : cycles) {
    Rational mean(BigInt(c.weight), BigInt(c.length()));
    Rational ratio(BigInt(c.weight), BigInt(c.transit));
    if (!s.min_mean || mean < *s.min_mean) s.min_mean = mean;
    if (!s.min_ratio || ratio < *s.min_ratio) s.min_ratio = ratio;
    if (!s.min_weight || c.weight < *s.min_weight) s.min_weight = c.weight;
    if (c.weight <= 0) s.has_nonpositive = true;
  }
  return s;
}

std::vector<std::optional<Rational>> cycle_values_all_nodes(const WeightedDigraph& g, Objective objective,
                                                            std::size_t cap) {
  auto cycles = enumerate_cycles(g, cap);
  const std::size_t n = g.n();
  std::vector<std::optional<Rational>> out(n);
  std::vector<char> seen(n);
  std::vector<NodeId> stack;
  for (NodeId u = 0; u < n; ++u) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[u] = 1;
    stack.assign(1, u);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.out_edges(v)) {
        NodeId w = g.edge(e).dst;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    for (const CycleRecord& c : cycles) {
      if (!seen[c.nodes.front()]) continue;
      BigInt den = objective == Objective::kMean ? BigInt(c.length()) : BigInt(c.transit);
      Rational r(BigInt(c.weight), den);
      if (!out[u] || r < *out[u]) out[u] = r;
    }
  }
  return out;
}

EnergyVector energy_fixpoint(const WeightedDigraph& g) {
  const std::size_t n = g.n();
  // f(u) > n*W means infinity.
  const std::int64_t cutoff = static_cast<std::int64_t>(n) * g.max_abs_weight();
  EnergyVector f(n, std::int64_t{0});
  auto evaluate = [&](NodeId u) -> std::optional<std::int64_t> {
    std::optional<std::int64_t> best;
    bool any = false;
    for (EdgeId e : g.out_edges(u)) {
      const Edge& ed = g.edge(e);
      if (!f[ed.dst]) continue;
      any = true;
      std::int64_t need = std::max<std::int64_t>(0, *f[ed.dst] - ed.weight);
      if (!best || need < *best) best = need;
    }
    if (!any || *best > cutoff) return std::nullopt;
    return best;
  };
  // Values only rise from the bottom element, so a worklist over changed
  // targets reaches the least fixpoint.
  std::deque<NodeId> work;
  std::vector<char> queued(n, 1);
  for (NodeId u = 0; u < n; ++u) work.push_back(u);
  while (!work.empty()) {
    NodeId u = work.front();
    work.pop_front();
    queued[u] = 0;
    if (!f[u]) continue;
    auto nv = evaluate(u);
    if (nv == f[u]) continue;
    f[u] = nv;
    for (EdgeId e : g.in_edges(u)) {
      NodeId p = g.edge(e).src;
      if (!queued[p]) {
        queued[p] = 1;
        work.push_back(p);
      }
    }
  }
  return f;
}

BellmanFordResult bellman_ford(const WeightedDigraph& g, NodeId source, std::span<const std::int64_t> weights) {
  if (!weights.empty() && weights.size() != g.m()) throw DomainError("bellman_ford: one weight per edge expected");
  std::vector<ArcRef> arcs;
  arcs.reserve(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    arcs.push_back({ed.src, ed.dst, weights.empty() ? ed.weight : weights[e]});
  }
  return bellman_ford_arcs(g.n(), arcs, source);
}

}  // namespace twq
