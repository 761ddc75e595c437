#pragma once

#include <string>
#include <string_view>

#include "gromov/geodesic_graph.hpp"
#include "gromov/metric_space.hpp"
#include "gromov/metric_tree.hpp"

namespace gromov {

/// Distance matrix CSV: a header row of labels, then one row of numbers per label.
MetricSpace parse_distance_csv(std::string_view text);
std::string emit_csv(const MetricSpace& space);

/// Edge list: one "u v length" per line; a lone "u" declares an isolated vertex.
/// '#' starts a comment. Vertices are numbered in order of first appearance.
WeightedGraph parse_edge_list(std::string_view text);
std::string emit_edge_list(const WeightedGraph& graph);
std::string emit_edge_list(const MetricTree& tree);

/// Newick subset: unquoted labels, optional ":length" (default 1, must be > 0),
/// no comments. Unlabeled internal nodes are named _n<index>. The root is vertex 0
/// and vertices are numbered in preorder.
MetricTree parse_newick(std::string_view text);

/// Newick text rooted at vertex 0 with children in vertex order; every node label
/// is written, so parse_newick(emit_newick(t)) keeps labels and numbering.
std::string emit_newick(const MetricTree& tree);

/// Shortest decimal form that reads back to the same double.
std::string format_length(double value);

}  // namespace gromov
