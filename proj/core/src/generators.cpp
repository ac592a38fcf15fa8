#include "twq/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "twq/errors.hpp"
#include "twq/scc.hpp"

namespace twq {

namespace {

class Draw {
 public:
  explicit Draw(const GenOptions& opt) : rng_(opt.seed), opt_(opt) {
    if (opt.min_weight > opt.max_weight) throw DomainError("min weight exceeds max weight");
    if (opt.max_transit < 1) throw DomainError("max transit must be >= 1");
  }

  std::int64_t weight() { return std::uniform_int_distribution<std::int64_t>(opt_.min_weight, opt_.max_weight)(rng_); }
  std::int64_t transit() { return std::uniform_int_distribution<std::int64_t>(1, opt_.max_transit)(rng_); }
  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Edge edge(NodeId u, NodeId v) { return {u, v, weight(), transit()}; }

 private:
  std::mt19937_64 rng_;
  const GenOptions& opt_;
};

// Reverses every cross-component edge, which keeps the undirected skeleton
// and so the treewidth. A disconnected skeleton is then chained.
void make_strongly_connected(std::size_t n, std::vector<Edge>& edges, Draw& draw) {
  if (n == 0) return;
  std::set<std::pair<NodeId, NodeId>> present;
  for (const Edge& e : edges) present.emplace(e.src, e.dst);
  {
    WeightedDigraph g = make_graph(n, edges);
    SccPartition scc = tarjan_scc(g);
    if (scc.count() == 1) return;
    for (const Edge& e : g.edges()) {
      if (scc.component[e.src] == scc.component[e.dst] || present.count({e.dst, e.src})) continue;
      edges.push_back(draw.edge(e.dst, e.src));
      present.emplace(e.dst, e.src);
    }
  }
  WeightedDigraph g = make_graph(n, edges);
  SccPartition scc = tarjan_scc(g);
  for (std::uint32_t c = 0; c + 1 < scc.count(); ++c) {
    edges.push_back(draw.edge(scc.members[c][0], scc.members[c + 1][0]));
    edges.push_back(draw.edge(scc.members[c + 1][0], scc.members[c][0]));
  }
}

struct Fragment {
  NodeId entry;
  NodeId exit;
};

class CfgBuilder {
 public:
  explicit CfgBuilder(Draw& draw) : draw_(draw) {}

  Fragment build(std::size_t budget, int depth) {
    if (budget == 1) return single();
    if (depth >= kMaxDepth) return chain(budget);
    std::size_t kind = draw_.below(4);
    if (kind == 1 && budget >= 4) {
      NodeId cond = fresh();
      std::size_t inner = budget - 2;
      std::size_t left = 1 + draw_.below(inner - 1);
      Fragment a = build(left, depth + 1);
      Fragment b = build(inner - left, depth + 1);
      NodeId join = fresh();
      link(cond, a.entry);
      link(cond, b.entry);
      link(a.exit, join);
      link(b.exit, join);
      return {cond, join};
    }
    if (kind == 2 && budget >= 3) {
      NodeId head = fresh();
      Fragment body = build(budget - 2, depth + 1);
      NodeId out = fresh();
      link(head, body.entry);
      link(body.exit, head);
      link(head, out);
      return {head, out};
    }
    if (kind == 3) return chain(budget);
    std::size_t first = 1 + draw_.below(budget - 1);
    Fragment a = build(first, depth + 1);
    Fragment b = build(budget - first, depth + 1);
    link(a.exit, b.entry);
    return {a.entry, b.exit};
  }

  std::size_t nodes() const { return next_; }
  std::vector<Edge>& edges() { return edges_; }
  void link(NodeId u, NodeId v) { edges_.push_back(draw_.edge(u, v)); }

 private:
  static constexpr int kMaxDepth = 10;

  NodeId fresh() { return next_++; }
  Fragment single() {
    NodeId v = fresh();
    return {v, v};
  }
  Fragment chain(std::size_t len) {
    NodeId first = fresh(), last = first;
    for (std::size_t i = 1; i < len; ++i) {
      NodeId v = fresh();
      link(last, v);
      last = v;
    }
    return {first, last};
  }

  Draw& draw_;
  NodeId next_ = 0;
  std::vector<Edge> edges_;
};

}  // namespace

std::optional<GraphKind> graph_kind_from_name(std::string_view name) {
  if (name == "ktree") return GraphKind::kKTree;
  if (name == "sparse-random") return GraphKind::kSparseRandom;
  if (name == "cfg-like") return GraphKind::kCfgLike;
  return std::nullopt;
}

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kKTree:
      return "ktree";
    case GraphKind::kSparseRandom:
      return "sparse-random";
    case GraphKind::kCfgLike:
      return "cfg-like";
  }
  return "?";
}

WeightedDigraph generate_ktree(const GenOptions& opt) {
  if (opt.k < 1 || opt.k > 5) throw DomainError("k-tree width must be in [1,5]");
  if (opt.n == 0) throw DomainError("n must be positive");
  Draw draw(opt);
  const std::size_t k = opt.k;
  std::vector<std::pair<NodeId, NodeId>> skeleton;
  std::vector<std::vector<NodeId>> cliques;

  const std::size_t base = std::min(opt.n, k + 1);
  for (NodeId u = 0; u < base; ++u)
    for (NodeId v = u + 1; v < base; ++v) skeleton.emplace_back(u, v);
  if (opt.n > k) {
    for (std::size_t drop = 0; drop <= k; ++drop) {
      std::vector<NodeId> c;
      for (NodeId u = 0; u <= k; ++u)
        if (u != drop) c.push_back(u);
      cliques.push_back(std::move(c));
    }
  }
  for (NodeId v = static_cast<NodeId>(base); v < opt.n; ++v) {
    const std::vector<NodeId> c = cliques[draw.below(cliques.size())];
    for (NodeId u : c) skeleton.emplace_back(u, v);
    for (std::size_t drop = 0; drop < k; ++drop) {
      std::vector<NodeId> next;
      for (std::size_t i = 0; i < k; ++i)
        if (i != drop) next.push_back(c[i]);
      next.push_back(v);
      cliques.push_back(std::move(next));
    }
  }

  std::vector<Edge> edges;
  for (auto [u, v] : skeleton) {
    if (draw.chance(opt.both_directions)) {
      edges.push_back(draw.edge(u, v));
      edges.push_back(draw.edge(v, u));
    } else if (draw.chance(0.5)) {
      edges.push_back(draw.edge(u, v));
    } else {
      edges.push_back(draw.edge(v, u));
    }
  }
  if (opt.strongly_connected) make_strongly_connected(opt.n, edges, draw);
  return make_graph(opt.n, edges);
}

WeightedDigraph generate_sparse_random(const GenOptions& opt) {
  if (opt.n == 0) throw DomainError("n must be positive");
  Draw draw(opt);
  const std::size_t n = opt.n;
  const std::size_t max_edges = n * (n - 1);
  const std::size_t target = std::min<std::size_t>(max_edges, static_cast<std::size_t>(opt.edges_per_node * n));
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  while (edges.size() < target) {
    NodeId u = static_cast<NodeId>(draw.below(n)), v = static_cast<NodeId>(draw.below(n));
    if (u == v || !seen.emplace(u, v).second) continue;
    edges.push_back(draw.edge(u, v));
  }
  if (opt.strongly_connected) make_strongly_connected(n, edges, draw);
  return make_graph(n, edges);
}

WeightedDigraph generate_cfg_like(const GenOptions& opt) {
  if (opt.n == 0) throw DomainError("n must be positive");
  Draw draw(opt);
  CfgBuilder b(draw);
  Fragment f = b.build(opt.n, 0);
  if (opt.strongly_connected && f.exit != f.entry) b.link(f.exit, f.entry);
  return make_graph(b.nodes(), b.edges());
}

WeightedDigraph generate(GraphKind kind, const GenOptions& opt) {
  switch (kind) {
    case GraphKind::kKTree:
      return generate_ktree(opt);
    case GraphKind::kSparseRandom:
      return generate_sparse_random(opt);
    case GraphKind::kCfgLike:
      return generate_cfg_like(opt);
  }
  throw DomainError("unknown graph kind");
}

}  // namespace twq
