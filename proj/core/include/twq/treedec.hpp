#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twq/graph.hpp"

namespace twq {

using BagId = std::uint32_t;
inline constexpr BagId kNoBag = std::numeric_limits<BagId>::max();

struct Bag {
  std::vector<NodeId> nodes;  // sorted
  BagId parent = kNoBag;
  std::vector<BagId> children;
  std::uint32_t level = 0;
  std::vector<NodeId> rooted;  // nodes whose root bag this is
};

class TreeDecomposition {
 public:
  TreeDecomposition() = default;

  // Builds children, levels and root-bag data from bag contents and parent
  // links. Exactly one bag must have no parent.
  static TreeDecomposition from_bags(std::size_t node_count, std::vector<std::vector<NodeId>> nodes,
                                     const std::vector<BagId>& parent);

  std::size_t node_count() const { return node_count_; }
  std::size_t size() const { return bags_.size(); }
  const Bag& bag(BagId b) const { return bags_[b]; }
  const std::vector<Bag>& bags() const { return bags_; }
  BagId root() const { return root_; }
  BagId root_bag_of(NodeId u) const { return root_bag_of_[u]; }

  // Largest bag size minus one; -1 for a decomposition with only empty bags.
  std::int64_t width() const { return width_; }
  std::uint32_t height() const { return height_; }

  // Children before parents.
  std::vector<BagId> post_order() const;
  bool contains(BagId b, NodeId u) const;

 private:
  std::size_t node_count_ = 0;
  std::vector<Bag> bags_;
  BagId root_ = kNoBag;
  std::vector<BagId> root_bag_of_;
  std::int64_t width_ = -1;
  std::uint32_t height_ = 0;
};

enum class EliminationHeuristic { kMinDegree, kMinFill };

// Raw decomposition from a greedy elimination order on the undirected
// skeleton. One bag per node; not binary and not balanced.
TreeDecomposition eliminate(const WeightedDigraph& g, EliminationHeuristic heuristic);

// Balancing constant c in height <= c*ceil(log2 n) + c.
inline constexpr std::uint32_t kHeightConstant = 8;
std::uint32_t height_bound(std::size_t n);

// Binary, one-root-per-bag, height within height_bound. Width grows to at
// most 3*(w+1)-1 when recursive centroid splitting is needed.
TreeDecomposition balance_and_binarize(const TreeDecomposition& t);

TreeDecomposition build_decomposition(const WeightedDigraph& g,
                                      EliminationHeuristic heuristic = EliminationHeuristic::kMinDegree);

struct Violation {
  enum class Kind {
    kStructure,
    kNodeCoverage,
    kEdgeCoverage,
    kConnectedness,
    kNotBinary,
    kMultipleRoots,
    kRootBag,
  };
  Kind kind;
  std::string message;
  std::vector<NodeId> nodes;
  std::vector<BagId> bags;
};

const char* to_string(Violation::Kind kind);

struct ValidateOptions {
  bool require_binary = true;
  bool require_single_root = true;
};

// First violated condition, or nullopt when t is a valid decomposition of g.
std::optional<Violation> validate(const TreeDecomposition& t, const WeightedDigraph& g,
                                  ValidateOptions options = {});

// Adds node z (id = node_count) to every bag and puts a new root {z} on top.
TreeDecomposition extend_with_z(const TreeDecomposition& t);

// One line per bag: "b <id> <parent|-> <labels...>".
std::string format_decomposition(const TreeDecomposition& t, const WeightedDigraph& g);

}  // namespace twq
