#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace twq {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId src;
  NodeId dst;
  std::int64_t weight;
  std::int64_t transit;  // strictly positive; 1 unless given
};

// Immutable directed graph with dense ids, at most one edge per ordered pair.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  std::size_t n() const { return labels_.size(); }
  std::size_t m() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Out-edges sorted by target, in-edges sorted by source.
  std::span<const EdgeId> out_edges(NodeId u) const {
    return {out_.data() + out_begin_[u], out_.data() + out_begin_[u + 1]};
  }
  std::span<const EdgeId> in_edges(NodeId u) const {
    return {in_.data() + in_begin_[u], in_.data() + in_begin_[u + 1]};
  }

  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> find_node(std::string_view label) const;

  std::int64_t max_abs_weight() const { return max_abs_weight_; }
  std::int64_t max_transit() const { return max_transit_; }
  bool unit_transit() const { return max_transit_ <= 1; }

 private:
  friend class GraphBuilder;
  void index();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> out_begin_, in_begin_;
  std::vector<EdgeId> out_, in_;
  std::int64_t max_abs_weight_ = 0;
  std::int64_t max_transit_ = 1;
};

class GraphBuilder {
 public:
  // Returns the id for label, creating the node on first sight.
  NodeId node(std::string_view label);
  // Adds an unnamed node labelled by its id.
  NodeId add_node();

  // Duplicate (src,dst) pairs keep the smaller weight and record a warning.
  void add_edge(NodeId src, NodeId dst, std::int64_t weight, std::int64_t transit = 1);

  std::size_t n() const { return labels_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  WeightedDigraph build();

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<Edge> edges_;
  std::unordered_map<std::uint64_t, std::size_t> pair_index_;
  std::vector<std::string> warnings_;
};

// Graph on nodes 0..n-1 labelled "0".."n-1".
WeightedDigraph make_graph(std::size_t n, const std::vector<Edge>& edges);

// Same topology and labels, weights replaced edge by edge.
WeightedDigraph reweighted(const WeightedDigraph& g, std::span<const std::int64_t> weights);

// Every weight negated; used to switch between energy sign conventions.
WeightedDigraph negated(const WeightedDigraph& g);

struct Subgraph {
  WeightedDigraph graph;
  std::vector<NodeId> to_parent;  // local id -> id in the original graph
};

// Induced on `nodes`, local ids follow the order of `nodes`.
Subgraph induced_subgraph(const WeightedDigraph& g, std::span<const NodeId> nodes);

}  // namespace twq
