#include "twq/graph.hpp"

#include <algorithm>
#include <cstdlib>

#include "twq/errors.hpp"

namespace twq {

std::optional<EdgeId> WeightedDigraph::find_edge(NodeId u, NodeId v) const {
  auto out = out_edges(u);
  auto it = std::lower_bound(out.begin(), out.end(), v,
                             [this](EdgeId e, NodeId t) { return edges_[e].dst < t; });
  if (it != out.end() && edges_[*it].dst == v) return *it;
  return std::nullopt;
}

std::optional<NodeId> WeightedDigraph::find_node(std::string_view label) const {
  for (NodeId u = 0; u < labels_.size(); ++u)
    if (labels_[u] == label) return u;
  return std::nullopt;
}

void WeightedDigraph::index() {
  const std::size_t nn = labels_.size();
  out_begin_.assign(nn + 1, 0);
  in_begin_.assign(nn + 1, 0);
  max_abs_weight_ = 0;
  max_transit_ = 1;
  for (const Edge& e : edges_) {
    ++out_begin_[e.src + 1];
    ++in_begin_[e.dst + 1];
    max_abs_weight_ = std::max(max_abs_weight_, e.weight < 0 ? -e.weight : e.weight);
    max_transit_ = std::max(max_transit_, e.transit);
  }
  for (std::size_t i = 0; i < nn; ++i) {
    out_begin_[i + 1] += out_begin_[i];
    in_begin_[i + 1] += in_begin_[i];
  }
  out_.resize(edges_.size());
  in_.resize(edges_.size());
  std::vector<std::uint32_t> o(out_begin_.begin(), out_begin_.end() - 1);
  std::vector<std::uint32_t> i(in_begin_.begin(), in_begin_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    out_[o[edges_[e].src]++] = e;
    in_[i[edges_[e].dst]++] = e;
  }
  for (NodeId u = 0; u < nn; ++u) {
    std::sort(out_.begin() + out_begin_[u], out_.begin() + out_begin_[u + 1],
              [this](EdgeId a, EdgeId b) { return edges_[a].dst < edges_[b].dst; });
    std::sort(in_.begin() + in_begin_[u], in_.begin() + in_begin_[u + 1],
              [this](EdgeId a, EdgeId b) { return edges_[a].src < edges_[b].src; });
  }
}

NodeId GraphBuilder::node(std::string_view label) {
  auto it = ids_.find(std::string(label));
  if (it != ids_.end()) return it->second;
  NodeId id = static_cast<NodeId>(labels_.size());
  labels_.emplace_back(label);
  ids_.emplace(labels_.back(), id);
  return id;
}

NodeId GraphBuilder::add_node() {
  NodeId id = static_cast<NodeId>(labels_.size());
  std::string label = std::to_string(id);
  if (ids_.count(label)) throw DomainError("label '" + label + "' already taken");
  labels_.push_back(label);
  ids_.emplace(label, id);
  return id;
}

void GraphBuilder::add_edge(NodeId src, NodeId dst, std::int64_t weight, std::int64_t transit) {
  if (src >= labels_.size() || dst >= labels_.size()) throw DomainError("edge endpoint out of range");
  if (transit <= 0) throw DomainError("transit weight must be >= 1");
  std::uint64_t key = (static_cast<std::uint64_t>(src) << 32) | dst;
  auto [it, fresh] = pair_index_.emplace(key, edges_.size());
  if (fresh) {
    edges_.push_back({src, dst, weight, transit});
    return;
  }
  Edge& old = edges_[it->second];
  warnings_.push_back("duplicate edge " + labels_[src] + " -> " + labels_[dst] + "; keeping weight " +
                      std::to_string(std::min(old.weight, weight)));
  if (weight < old.weight) {
    old.weight = weight;
    old.transit = transit;
  }
}

WeightedDigraph GraphBuilder::build() {
  WeightedDigraph g;
  g.labels_ = std::move(labels_);
  g.edges_ = std::move(edges_);
  g.index();
  *this = GraphBuilder();
  return g;
}

WeightedDigraph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_node();
  for (const Edge& e : edges) b.add_edge(e.src, e.dst, e.weight, e.transit);
  return b.build();
}

WeightedDigraph reweighted(const WeightedDigraph& g, std::span<const std::int64_t> weights) {
  if (weights.size() != g.m()) throw DomainError("reweighted: one weight per edge required");
  GraphBuilder b;
  for (const auto& l : g.labels()) b.node(l);
  for (EdgeId e = 0; e < g.m(); ++e) b.add_edge(g.edge(e).src, g.edge(e).dst, weights[e], g.edge(e).transit);
  return b.build();
}

WeightedDigraph negated(const WeightedDigraph& g) {
  std::vector<std::int64_t> w(g.m());
  for (EdgeId e = 0; e < g.m(); ++e) w[e] = -g.edge(e).weight;
  return reweighted(g, w);
}

Subgraph induced_subgraph(const WeightedDigraph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> local(g.n(), kNoNode);
  GraphBuilder b;
  Subgraph s;
  for (NodeId u : nodes) {
    if (local[u] != kNoNode) throw DomainError("induced_subgraph: repeated node");
    local[u] = b.node(g.label(u));
    s.to_parent.push_back(u);
  }
  for (NodeId u : nodes)
    for (EdgeId e : g.out_edges(u)) {
      const Edge& ed = g.edge(e);
      if (local[ed.dst] != kNoNode) b.add_edge(local[u], local[ed.dst], ed.weight, ed.transit);
    }
  s.graph = b.build();
  return s;
}

}  // namespace twq
