#include "twq/scc.hpp"

#include <algorithm>

namespace twq {

SccPartition tarjan_scc(const WeightedDigraph& g) {
  const std::size_t n = g.n();
  constexpr std::uint32_t kUnset = kNoNode;
  std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeId> stack;
  SccPartition out;
  out.component.assign(n, kUnset);
  std::uint32_t counter = 0;

  // Explicit DFS frames: (node, position in its out-edge list).
  std::vector<std::pair<NodeId, std::size_t>> frames;
  for (NodeId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [u, pos] = frames.back();
      auto out_edges = g.out_edges(u);
      if (pos < out_edges.size()) {
        NodeId v = g.edge(out_edges[pos++]).dst;
        if (index[v] == kUnset) {
          index[v] = low[v] = counter++;
          stack.push_back(v);
          on_stack[v] = true;
          frames.emplace_back(v, 0);
        } else if (on_stack[v]) {
          low[u] = std::min(low[u], index[v]);
        }
        continue;
      }
      NodeId done = u;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        auto id = static_cast<std::uint32_t>(out.members.size());
        std::vector<NodeId> comp;
        NodeId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = id;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        out.members.push_back(std::move(comp));
      }
    }
  }

  out.successors.resize(out.count());
  out.cyclic.assign(out.count(), false);
  for (const Edge& e : g.edges()) {
    std::uint32_t a = out.component[e.src], b = out.component[e.dst];
    if (a != b) out.successors[a].push_back(b);
    else if (e.src == e.dst || out.members[a].size() > 1) out.cyclic[a] = true;
  }
  for (auto& s : out.successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return out;
}

}  // namespace twq
