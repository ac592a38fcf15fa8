#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twq/graph.hpp"

namespace twq {

// dimacs:   "p mrc <n> <m>" then "a <src> <dst> <wt> [<wt'>]", 1-based, "c" comments.
// edgelist: "<src> <dst> <wt> [<wt'>]" per line, '#' comments.
// dot:      digraph { a -> b [label="w"]; }, optional transit="t" attribute.
enum class GraphFormat { kDimacs, kEdgeList, kDot };

struct ParsedGraph {
  WeightedDigraph graph;
  std::vector<std::string> warnings;
};

ParsedGraph parse_graph(std::string_view text, GraphFormat format);

// Guess from the first deciding line: "p" or an all-numeric "a" arc means
// DIMACS, "digraph" means dot, anything else an edge list. "c" lines are skipped.
GraphFormat detect_format(std::string_view text);
std::optional<GraphFormat> format_from_name(std::string_view name);

ParsedGraph read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt);

std::string write_graph(const WeightedDigraph& g, GraphFormat format);

}  // namespace twq
