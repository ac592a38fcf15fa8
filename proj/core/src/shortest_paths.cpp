#include "twq/shortest_paths.hpp"

#include <algorithm>
#include <stdexcept>

namespace twq {

namespace {

// A cycle among predecessor links, listed in edge direction.
std::optional<std::vector<NodeId>> pred_cycle(const std::vector<NodeId>& pred, std::vector<NodeId>& stamp) {
  const std::size_t n = pred.size();
  std::fill(stamp.begin(), stamp.end(), kNoNode);
  for (NodeId s = 0; s < n; ++s) {
    if (stamp[s] != kNoNode) continue;
    NodeId v = s;
    while (v != kNoNode && stamp[v] == kNoNode) {
      stamp[v] = s;
      v = pred[v];
    }
    if (v == kNoNode || stamp[v] != s) continue;
    std::vector<NodeId> cycle{v};
    for (NodeId u = pred[v]; u != v; u = pred[u]) cycle.push_back(u);
    std::reverse(cycle.begin(), cycle.end());
    return cycle;
  }
  return std::nullopt;
}

}  // namespace

BellmanFordResult bellman_ford_arcs(std::size_t n, std::span<const ArcRef> arcs, NodeId source) {
  BellmanFordResult out;
  out.dist.assign(n, std::nullopt);
  out.pred.assign(n, kNoNode);
  if (source >= n) return out;

  std::vector<std::uint32_t> begin(n + 1, 0);
  for (const ArcRef& a : arcs) ++begin[a.src + 1];
  for (std::size_t i = 0; i < n; ++i) begin[i + 1] += begin[i];
  std::vector<std::uint32_t> order(arcs.size());
  {
    std::vector<std::uint32_t> fill(begin.begin(), begin.end() - 1);
    for (std::uint32_t i = 0; i < arcs.size(); ++i) order[fill[arcs[i].src]++] = i;
  }

  out.dist[source] = 0;
  std::vector<NodeId> current{source}, next;
  std::vector<char> queued(n, 0);
  std::vector<NodeId> stamp(n);
  // Only nodes improved in the previous round can improve others. Without a
  // predecessor cycle every distance is bounded below by a simple path, so
  // the loop ends.
  for (std::size_t round = 1;; ++round) {
    next.clear();
    for (NodeId u : current) {
      const std::int64_t du = *out.dist[u];
      for (std::uint32_t k = begin[u]; k < begin[u + 1]; ++k) {
        const ArcRef& a = arcs[order[k]];
        std::int64_t cand;
        if (__builtin_add_overflow(du, a.weight, &cand)) throw std::overflow_error("Bellman-Ford: 64-bit overflow");
        auto& dv = out.dist[a.dst];
        if (dv && *dv <= cand) continue;
        dv = cand;
        out.pred[a.dst] = u;
        if (!queued[a.dst]) {
          queued[a.dst] = 1;
          next.push_back(a.dst);
        }
      }
    }
    out.rounds = round;
    if (next.empty()) return out;
    if (auto cycle = pred_cycle(out.pred, stamp)) {
      out.negative_cycle = std::move(cycle);
      return out;
    }
    for (NodeId v : next) queued[v] = 0;
    std::swap(current, next);
  }
}

}  // namespace twq
