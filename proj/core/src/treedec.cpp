#include "twq/treedec.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "twq/errors.hpp"

namespace twq {

namespace {

void sort_unique(std::vector<NodeId>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Loose rooted tree of bags used while reshaping.
struct RawTree {
  std::vector<std::vector<NodeId>> bag;
  std::vector<BagId> parent;

  BagId add(std::vector<NodeId> nodes, BagId p) {
    bag.push_back(std::move(nodes));
    parent.push_back(p);
    return static_cast<BagId>(bag.size() - 1);
  }
  std::size_t size() const { return bag.size(); }
  BagId root() const {
    for (BagId b = 0; b < parent.size(); ++b)
      if (parent[b] == kNoBag) return b;
    throw InternalError("tree without root");
  }
  std::vector<std::vector<BagId>> children() const {
    std::vector<std::vector<BagId>> ch(size());
    for (BagId b = 0; b < size(); ++b)
      if (parent[b] != kNoBag) ch[parent[b]].push_back(b);
    return ch;
  }
};

RawTree to_raw(const TreeDecomposition& t) {
  RawTree r;
  for (const Bag& b : t.bags()) r.add(b.nodes, b.parent);
  return r;
}

std::vector<std::vector<BagId>> undirected_adjacency(const RawTree& r) {
  std::vector<std::vector<BagId>> adj(r.size());
  for (BagId b = 0; b < r.size(); ++b)
    if (r.parent[b] != kNoBag) {
      adj[b].push_back(r.parent[b]);
      adj[r.parent[b]].push_back(b);
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// BFS distances from s; returns (order, parent).
std::pair<std::vector<BagId>, std::vector<BagId>> bfs(const std::vector<std::vector<BagId>>& adj, BagId s) {
  std::vector<BagId> order{s}, par(adj.size(), kNoBag);
  std::vector<bool> seen(adj.size(), false);
  seen[s] = true;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (BagId y : adj[order[i]])
      if (!seen[y]) {
        seen[y] = true;
        par[y] = order[i];
        order.push_back(y);
      }
  return {order, par};
}

// Reroot at the middle of a longest path.
RawTree reroot_at_center(const RawTree& r) {
  auto adj = undirected_adjacency(r);
  auto [o1, p1] = bfs(adj, r.root());
  BagId far1 = o1.back();
  auto [o2, p2] = bfs(adj, far1);
  std::vector<BagId> path;
  for (BagId x = o2.back(); x != kNoBag; x = p2[x]) path.push_back(x);
  BagId center = path[path.size() / 2];
  auto [o3, p3] = bfs(adj, center);
  RawTree out = r;
  out.parent = p3;
  return out;
}

std::vector<std::size_t> subtree_sizes(const RawTree& r, const std::vector<std::vector<BagId>>& ch) {
  std::vector<std::size_t> sz(r.size(), 1);
  std::vector<BagId> order{r.root()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (BagId c : ch[order[i]]) order.push_back(c);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (r.parent[*it] != kNoBag) sz[r.parent[*it]] += sz[*it];
  return sz;
}

// Every bag ends with at most two children. Extra children hang below
// weight-balanced copies of their parent bag.
RawTree binarize(const RawTree& r) {
  RawTree out = r;
  auto ch = r.children();
  auto sz = subtree_sizes(r, ch);
  for (BagId v = 0; v < r.size(); ++v) {
    if (ch[v].size() <= 2) continue;
    struct Frame {
      BagId attach;
      std::vector<BagId> kids;
    };
    std::vector<Frame> work{{v, ch[v]}};
    while (!work.empty()) {
      Frame f = std::move(work.back());
      work.pop_back();
      if (f.kids.size() <= 2) {
        for (BagId k : f.kids) out.parent[k] = f.attach;
        continue;
      }
      std::stable_sort(f.kids.begin(), f.kids.end(), [&](BagId a, BagId b) { return sz[a] > sz[b]; });
      std::vector<BagId> side[2];
      std::size_t weight[2] = {0, 0};
      for (BagId k : f.kids) {
        int s = weight[0] <= weight[1] ? 0 : 1;
        side[s].push_back(k);
        weight[s] += sz[k];
      }
      for (auto& s : side) {
        if (s.size() == 1) {
          out.parent[s[0]] = f.attach;
        } else {
          BagId copy = out.add(r.bag[v], f.attach);
          std::sort(s.begin(), s.end());
          work.push_back({copy, std::move(s)});
        }
      }
    }
  }
  return out;
}

// A bag that is the root bag of x1 < ... < xk becomes the chain
// B1 ⊂ ... ⊂ Bk with B_{i+1} = B_i ∪ {x_{i+1}} and Bk = B.
RawTree one_root_per_bag(const RawTree& r, std::size_t node_count) {
  auto ch = r.children();
  std::vector<BagId> order{r.root()};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (BagId c : ch[order[i]]) order.push_back(c);
  std::vector<bool> placed(node_count, false);
  std::vector<std::vector<NodeId>> rooted(r.size());
  // BFS order visits ancestors first, so the first bag seen is the top one.
  for (BagId b : order)
    for (NodeId u : r.bag[b])
      if (!placed[u]) {
        placed[u] = true;
        rooted[b].push_back(u);
      }
  RawTree out = r;
  for (BagId b = 0; b < r.size(); ++b) {
    auto& xs = rooted[b];
    if (xs.size() <= 1) continue;
    std::sort(xs.begin(), xs.end());
    BagId above = r.parent[b];
    std::vector<NodeId> cur;
    std::set_difference(r.bag[b].begin(), r.bag[b].end(), xs.begin() + 1, xs.end(), std::back_inserter(cur));
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (i > 0) {
        cur.push_back(xs[i]);
        std::sort(cur.begin(), cur.end());
      }
      above = out.add(cur, above);
    }
    out.parent[b] = above;
  }
  return out;
}

// Recursive centroid splitting. Every piece touches at most two removed
// bags; its new bag is the chosen bag plus the nodes shared across those
// boundary edges.
RawTree centroid_balance(const RawTree& r) {
  const std::size_t nb = r.size();
  auto adj = undirected_adjacency(r);
  std::vector<bool> removed(nb, false);
  std::vector<std::uint32_t> stamp(nb, 0), path_stamp(nb, 0), depth(nb, 0);
  std::vector<BagId> par(nb, kNoBag);
  std::vector<std::size_t> sz(nb, 0);
  std::uint32_t round = 0;

  RawTree out;
  std::vector<std::pair<BagId, BagId>> pieces{{r.root(), kNoBag}};
  std::vector<BagId> order, dfs;
  std::vector<std::pair<BagId, BagId>> boundary;
  while (!pieces.empty()) {
    auto [start, new_parent] = pieces.back();
    pieces.pop_back();
    ++round;
    order.clear();
    boundary.clear();
    dfs.assign(1, start);
    stamp[start] = round;
    par[start] = kNoBag;
    depth[start] = 0;
    while (!dfs.empty()) {
      BagId x = dfs.back();
      dfs.pop_back();
      order.push_back(x);
      for (BagId y : adj[x]) {
        if (removed[y]) {
          boundary.emplace_back(x, y);
        } else if (stamp[y] != round) {
          stamp[y] = round;
          par[y] = x;
          depth[y] = depth[x] + 1;
          dfs.push_back(y);
        }
      }
    }
    if (boundary.size() > 2) throw InternalError("centroid balancing: piece with more than two boundary edges");
    const std::size_t total = order.size();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      sz[*it] = 1;
      for (BagId y : adj[*it])
        if (!removed[y] && par[y] == *it) sz[*it] += sz[y];
    }

    BagId c = start;
    if (boundary.size() <= 1) {
      for (bool moved = true; moved;) {
        moved = false;
        for (BagId y : adj[c])
          if (!removed[y] && par[y] == c && 2 * sz[y] > total) {
            c = y;
            moved = true;
            break;
          }
      }
    } else {
      BagId a = boundary[0].first, b = boundary[1].first;
      std::vector<BagId> left, right;
      while (a != b) {
        if (depth[a] >= depth[b]) {
          left.push_back(a);
          a = par[a];
        } else {
          right.push_back(b);
          b = par[b];
        }
      }
      left.push_back(a);
      left.insert(left.end(), right.rbegin(), right.rend());
      for (BagId p : left) path_stamp[p] = round;
      auto on_path = [&](BagId y) { return path_stamp[y] == round; };
      std::size_t prefix = 0;
      for (BagId p : left) {
        std::size_t w = 1;
        for (BagId y : adj[p]) {
          if (removed[y] || on_path(y)) continue;
          w += par[y] == p ? sz[y] : total - sz[p];
        }
        prefix += w;
        if (2 * prefix >= total) {
          c = p;
          break;
        }
      }
    }

    std::vector<NodeId> nodes = r.bag[c];
    for (auto [inside, outside] : boundary) {
      std::set_intersection(r.bag[inside].begin(), r.bag[inside].end(), r.bag[outside].begin(), r.bag[outside].end(),
                            std::back_inserter(nodes));
    }
    sort_unique(nodes);
    BagId id = out.add(std::move(nodes), new_parent);
    removed[c] = true;
    for (auto it = adj[c].rbegin(); it != adj[c].rend(); ++it)
      if (!removed[*it]) pieces.emplace_back(*it, id);
  }
  return out;
}

TreeDecomposition finish(const RawTree& r, std::size_t node_count) {
  return TreeDecomposition::from_bags(node_count, r.bag, r.parent);
}

}  // namespace

TreeDecomposition TreeDecomposition::from_bags(std::size_t node_count, std::vector<std::vector<NodeId>> nodes,
                                               const std::vector<BagId>& parent) {
  if (nodes.size() != parent.size()) throw DomainError("from_bags: parent list size mismatch");
  if (nodes.empty()) throw DomainError("from_bags: no bags");
  TreeDecomposition t;
  t.node_count_ = node_count;
  t.bags_.resize(nodes.size());
  for (BagId b = 0; b < nodes.size(); ++b) {
    sort_unique(nodes[b]);
    for (NodeId u : nodes[b])
      if (u >= node_count) throw DomainError("from_bags: node id out of range");
    t.bags_[b].nodes = std::move(nodes[b]);
    t.bags_[b].parent = parent[b];
    if (parent[b] == kNoBag) {
      if (t.root_ != kNoBag) throw DomainError("from_bags: more than one root");
      t.root_ = b;
    } else {
      if (parent[b] >= parent.size()) throw DomainError("from_bags: parent out of range");
      t.bags_[parent[b]].children.push_back(b);
    }
  }
  if (t.root_ == kNoBag) throw DomainError("from_bags: no root");

  std::vector<BagId> order{t.root_};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (BagId c : t.bags_[order[i]].children) {
      t.bags_[c].level = t.bags_[order[i]].level + 1;
      order.push_back(c);
    }
  if (order.size() != t.bags_.size()) throw DomainError("from_bags: parent links contain a cycle");

  std::stable_sort(order.begin(), order.end(),
                   [&](BagId a, BagId b) { return t.bags_[a].level < t.bags_[b].level; });
  t.root_bag_of_.assign(node_count, kNoBag);
  for (BagId b : order) {
    for (NodeId u : t.bags_[b].nodes)
      if (t.root_bag_of_[u] == kNoBag) {
        t.root_bag_of_[u] = b;
        t.bags_[b].rooted.push_back(u);
      }
    t.width_ = std::max<std::int64_t>(t.width_, static_cast<std::int64_t>(t.bags_[b].nodes.size()) - 1);
    t.height_ = std::max(t.height_, t.bags_[b].level);
  }
  return t;
}

std::vector<BagId> TreeDecomposition::post_order() const {
  std::vector<BagId> out;
  out.reserve(bags_.size());
  std::vector<std::pair<BagId, std::size_t>> stack{{root_, 0}};
  while (!stack.empty()) {
    auto& [b, i] = stack.back();
    if (i < bags_[b].children.size()) {
      BagId c = bags_[b].children[i++];
      stack.emplace_back(c, 0);
    } else {
      out.push_back(b);
      stack.pop_back();
    }
  }
  return out;
}

bool TreeDecomposition::contains(BagId b, NodeId u) const {
  return std::binary_search(bags_[b].nodes.begin(), bags_[b].nodes.end(), u);
}

TreeDecomposition eliminate(const WeightedDigraph& g, EliminationHeuristic heuristic) {
  const std::size_t n = g.n();
  if (n == 0) return TreeDecomposition::from_bags(0, {{}}, {kNoBag});

  std::vector<std::vector<NodeId>> adj(n);
  for (const Edge& e : g.edges())
    if (e.src != e.dst) {
      adj[e.src].push_back(e.dst);
      adj[e.dst].push_back(e.src);
    }
  for (auto& a : adj) sort_unique(a);

  auto adjacent = [&](NodeId a, NodeId b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
  auto score = [&](NodeId v) -> std::uint64_t {
    if (heuristic == EliminationHeuristic::kMinDegree) return adj[v].size();
    std::uint64_t fill = 0;
    const auto& nb = adj[v];
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        if (!adjacent(nb[i], nb[j])) ++fill;
    return fill;
  };

  std::vector<std::uint64_t> key(n);
  std::set<std::pair<std::uint64_t, NodeId>> queue;
  for (NodeId v = 0; v < n; ++v) queue.emplace(key[v] = score(v), v);

  std::vector<std::uint32_t> pos(n, 0);
  std::vector<bool> gone(n, false);
  std::vector<std::vector<NodeId>> bag(n), nbrs(n);
  std::vector<NodeId> touched, merged;
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    NodeId v = queue.begin()->second;
    queue.erase(queue.begin());
    pos[v] = i;
    gone[v] = true;
    nbrs[i] = adj[v];
    bag[i] = adj[v];
    bag[i].push_back(v);
    sort_unique(bag[i]);
    for (NodeId u : nbrs[i]) {
      auto& au = adj[u];
      au.erase(std::lower_bound(au.begin(), au.end(), v));
      merged.clear();
      std::set_union(au.begin(), au.end(), nbrs[i].begin(), nbrs[i].end(), std::back_inserter(merged));
      merged.erase(std::lower_bound(merged.begin(), merged.end(), u));
      au.swap(merged);
    }
    adj[v].clear();
    adj[v].shrink_to_fit();

    ++stamp;
    touched.clear();
    auto touch = [&](NodeId u) {
      if (!gone[u] && mark[u] != stamp) {
        mark[u] = stamp;
        touched.push_back(u);
      }
    };
    for (NodeId u : nbrs[i]) {
      touch(u);
      if (heuristic == EliminationHeuristic::kMinFill)
        for (NodeId w : adj[u]) touch(w);
    }
    for (NodeId u : touched) {
      queue.erase({key[u], u});
      queue.emplace(key[u] = score(u), u);
    }
  }

  std::vector<BagId> parent(n, kNoBag);
  const BagId last = static_cast<BagId>(n - 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (nbrs[i].empty()) {
      if (i != last) parent[i] = last;
      continue;
    }
    std::uint32_t best = n;
    for (NodeId u : nbrs[i]) best = std::min(best, pos[u]);
    parent[i] = best;
  }
  return TreeDecomposition::from_bags(n, std::move(bag), parent);
}

std::uint32_t height_bound(std::size_t n) {
  std::uint32_t lg = 0;
  while ((std::size_t{1} << lg) < n) ++lg;
  return kHeightConstant * lg + kHeightConstant;
}

TreeDecomposition balance_and_binarize(const TreeDecomposition& t) {
  const std::size_t n = t.node_count();
  RawTree raw = to_raw(t);
  TreeDecomposition quick = finish(one_root_per_bag(binarize(reroot_at_center(raw)), n), n);
  if (quick.height() <= height_bound(n)) return quick;
  TreeDecomposition balanced = finish(one_root_per_bag(binarize(centroid_balance(raw)), n), n);
  return balanced.height() <= quick.height() ? balanced : quick;
}

TreeDecomposition build_decomposition(const WeightedDigraph& g, EliminationHeuristic heuristic) {
  return balance_and_binarize(eliminate(g, heuristic));
}

const char* to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kStructure: return "structure";
    case Violation::Kind::kNodeCoverage: return "node-coverage";
    case Violation::Kind::kEdgeCoverage: return "edge-coverage";
    case Violation::Kind::kConnectedness: return "connectedness";
    case Violation::Kind::kNotBinary: return "not-binary";
    case Violation::Kind::kMultipleRoots: return "multiple-roots-per-bag";
    case Violation::Kind::kRootBag: return "root-bag";
  }
  return "unknown";
}

std::optional<Violation> validate(const TreeDecomposition& t, const WeightedDigraph& g, ValidateOptions options) {
  using K = Violation::Kind;
  const std::size_t n = g.n();
  if (t.node_count() != n)
    return Violation{K::kStructure, "decomposition is for " + std::to_string(t.node_count()) + " nodes, graph has " +
                                        std::to_string(n), {}, {}};
  const auto& bags = t.bags();
  if (t.root() >= bags.size() || bags[t.root()].parent != kNoBag || bags[t.root()].level != 0)
    return Violation{K::kStructure, "root bag is malformed", {}, {t.root()}};
  for (BagId b = 0; b < bags.size(); ++b) {
    for (BagId c : bags[b].children)
      if (bags[c].parent != b || bags[c].level != bags[b].level + 1)
        return Violation{K::kStructure, "child link inconsistent", {}, {b, c}};
    if (!std::is_sorted(bags[b].nodes.begin(), bags[b].nodes.end()))
      return Violation{K::kStructure, "bag nodes not sorted", {}, {b}};
  }

  std::vector<std::vector<BagId>> where(n);
  for (BagId b = 0; b < bags.size(); ++b)
    for (NodeId u : bags[b].nodes) where[u].push_back(b);

  for (NodeId u = 0; u < n; ++u)
    if (where[u].empty()) return Violation{K::kNodeCoverage, "node " + g.label(u) + " is in no bag", {u}, {}};

  for (const Edge& e : g.edges()) {
    NodeId a = e.src, b = e.dst;
    if (where[a].size() > where[b].size()) std::swap(a, b);
    bool ok = std::any_of(where[a].begin(), where[a].end(), [&](BagId x) { return t.contains(x, b); });
    if (!ok)
      return Violation{K::kEdgeCoverage, "edge " + g.label(e.src) + " -> " + g.label(e.dst) + " is in no bag",
                       {e.src, e.dst}, {}};
  }

  for (NodeId u = 0; u < n; ++u) {
    std::size_t links = 0;
    for (BagId b : where[u])
      if (bags[b].parent != kNoBag && t.contains(bags[b].parent, u)) ++links;
    if (links + 1 != where[u].size())
      return Violation{K::kConnectedness, "bags containing " + g.label(u) + " are not contiguous", {u}, where[u]};
  }

  if (options.require_binary)
    for (BagId b = 0; b < bags.size(); ++b)
      if (bags[b].children.size() > 2)
        return Violation{K::kNotBinary, "bag " + std::to_string(b) + " has " +
                                            std::to_string(bags[b].children.size()) + " children", {}, {b}};

  for (NodeId u = 0; u < n; ++u) {
    BagId top = *std::min_element(where[u].begin(), where[u].end(),
                                  [&](BagId a, BagId b) { return bags[a].level < bags[b].level; });
    BagId claimed = t.root_bag_of(u);
    if (claimed != top || std::count(bags[top].rooted.begin(), bags[top].rooted.end(), u) != 1)
      return Violation{K::kRootBag, "root bag of " + g.label(u) + " is inconsistent", {u}, {top, claimed}};
  }

  if (options.require_single_root)
    for (BagId b = 0; b < bags.size(); ++b)
      if (bags[b].rooted.size() > 1)
        return Violation{K::kMultipleRoots, "bag " + std::to_string(b) + " is the root bag of several nodes",
                         bags[b].rooted, {b}};
  return std::nullopt;
}

TreeDecomposition extend_with_z(const TreeDecomposition& t) {
  const NodeId z = static_cast<NodeId>(t.node_count());
  std::vector<std::vector<NodeId>> nodes;
  std::vector<BagId> parent;
  for (const Bag& b : t.bags()) {
    nodes.push_back(b.nodes);
    nodes.back().push_back(z);
    parent.push_back(b.parent);
  }
  BagId top = static_cast<BagId>(nodes.size());
  parent[t.root()] = top;
  nodes.push_back({z});
  parent.push_back(kNoBag);
  return TreeDecomposition::from_bags(t.node_count() + 1, std::move(nodes), parent);
}

std::string format_decomposition(const TreeDecomposition& t, const WeightedDigraph& g) {
  std::ostringstream os;
  for (BagId b = 0; b < t.size(); ++b) {
    const Bag& bag = t.bag(b);
    os << "b " << b << ' ';
    if (bag.parent == kNoBag) os << '-';
    else os << bag.parent;
    for (NodeId u : bag.nodes) os << ' ' << (u < g.n() ? g.label(u) : "z");
    os << '\n';
  }
  return os.str();
}

}  // namespace twq
