#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gromov/geodesic_graph.hpp"
#include "gromov/metric_space.hpp"

namespace gromov {

/// Weighted tree with unique paths. Rooted internally at vertex 0 for path and
/// distance queries.
class MetricTree {
 public:
  using Edge = WeightedGraph::Edge;

  /// Throws NotATree unless the edges form a spanning tree, NonPositiveLength for
  /// nonpositive lengths.
  MetricTree(std::vector<std::string> labels, std::vector<Edge> edges);
  static MetricTree from_graph(const WeightedGraph& graph);
  WeightedGraph to_graph() const;

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<WeightedGraph::Neighbor>& neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  std::optional<std::size_t> find(const std::string& label) const;
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  double distance(std::size_t u, std::size_t v) const;
  /// The unique vertex path from u to v, endpoints included.
  std::vector<std::size_t> vertex_path(std::size_t u, std::size_t v) const;

 private:
  std::size_t lca(std::size_t u, std::size_t v) const;

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<WeightedGraph::Neighbor>> adjacency_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> level_;
  std::vector<double> parent_length_;
};

/// A vertex, or a point strictly inside an edge at `offset` from the edge's u end.
struct TreePoint {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t vertex = npos;
  std::size_t edge = npos;
  double offset = 0;

  static TreePoint at_vertex(std::size_t v) { return {v, npos, 0}; }
  bool is_vertex() const { return edge == npos; }

  friend bool operator==(const TreePoint&, const TreePoint&) = default;
};

/// Point of edge e at `offset` from its u end; offsets 0 and length give vertices.
TreePoint tree_point(const MetricTree& tree, std::size_t edge, double offset);

double tree_distance(const MetricTree& tree, const TreePoint& p, const TreePoint& q);

/// Ordered points of the unique segment [p, q]: p, the interior vertices, q.
std::vector<TreePoint> tree_segment(const MetricTree& tree, const TreePoint& p,
                                    const TreePoint& q);

/// Vertices z with d(x,z) + d(z,y) = d(x,y).
std::vector<std::size_t> betweenness_set(const MetricTree& tree, std::size_t x, std::size_t y,
                                         Tolerance<double> tol = {});

/// Nearest point of the subtree spanned by `convex` (a vertex set inducing a
/// connected subgraph) to p. Throws NotConvex otherwise.
TreePoint project_onto_subtree(const MetricTree& tree, const TreePoint& p,
                               const std::vector<std::size_t>& convex);

/// Nearest point of the segment [x, y] to p.
TreePoint project_onto_segment(const MetricTree& tree, const TreePoint& p, std::size_t x,
                               std::size_t y);

/// If [y,x] and [x,z] meet only in x, whether their union is [y,z] both as a vertex
/// set and in length. True when the hypothesis fails.
bool check_gluing(const MetricTree& tree, std::size_t y, std::size_t x, std::size_t z,
                  Tolerance<double> tol = {});

/// Largest d(P(p), P(q)) / d(p, q) over the sample pairs, P the projection onto
/// the subtree spanned by `convex`.
double nonexpansiveness_probe(const MetricTree& tree, const std::vector<std::size_t>& convex,
                              const std::vector<std::pair<TreePoint, TreePoint>>& pairs);

/// Distances between all tree vertices.
MetricSpace tree_metric(const MetricTree& tree);

}  // namespace gromov
