#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gromov/hyperbolicity.hpp"
#include "gromov/metric_space.hpp"

namespace gromov {

/// Undirected graph with positive edge lengths. Connectivity is not required at
/// construction; path-metric operations reject disconnected graphs.
class WeightedGraph {
 public:
  struct Edge {
    std::size_t u;
    std::size_t v;
    double length;
  };
  struct Neighbor {
    std::size_t vertex;
    double length;
    std::size_t edge;
  };

  WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Neighbors sorted by vertex index.
  const std::vector<Neighbor>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::optional<std::size_t> find(const std::string& label) const;
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;

  /// Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> components() const;
  bool connected() const { return components().size() <= 1; }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// Shortest-path metric of a connected graph. Throws Disconnected otherwise.
MetricSpace all_pairs_shortest(const WeightedGraph& graph);

/// A graph together with its path metric.
class GeodesicSpace {
 public:
  explicit GeodesicSpace(WeightedGraph graph);

  const WeightedGraph& graph() const { return graph_; }
  const MetricSpace& metric() const { return metric_; }
  std::size_t size() const { return graph_.size(); }
  double distance(std::size_t u, std::size_t v) const { return metric_(u, v); }

 private:
  WeightedGraph graph_;
  MetricSpace metric_;
};

/// Shortest path as a vertex sequence with cumulative arc-length.
struct Geodesic {
  std::vector<std::size_t> vertices;
  std::vector<double> arc;

  double length() const { return arc.back(); }
  std::size_t from() const { return vertices.front(); }
  std::size_t to() const { return vertices.back(); }
};

/// Lexicographically smallest vertex sequence among all shortest x-y paths.
Geodesic canonical_geodesic(const GeodesicSpace& space, std::size_t x, std::size_t y);

/// Vertices v with d(x,v) + d(v,y) = d(x,y): the union of all x-y geodesics.
std::vector<std::size_t> interval_set(const GeodesicSpace& space, std::size_t x, std::size_t y,
                                      Tolerance<double> tol = {});

/// Point of a geodesic at arc-length t. It lies on host segment
/// [vertices[segment], vertices[segment+1]] at `offset` from u; at a vertex, u == v.
struct GeodesicPoint {
  double t = 0;
  std::size_t segment = 0;
  std::size_t u = 0;
  std::size_t v = 0;
  double offset = 0;
  double edge_length = 0;

  bool at_vertex() const { return u == v; }
};

GeodesicPoint point_at(const Geodesic& geodesic, double t);

/// Point at arc-length s measured from endpoint `end` (either end of the geodesic).
GeodesicPoint point_from(const Geodesic& geodesic, std::size_t end, double s);

/// Distance in the geometric realization of the graph.
double dist_between_points(const GeodesicSpace& space, const GeodesicPoint& p,
                           const GeodesicPoint& q);

/// Triangle whose sides are the canonical geodesics oriented from the smaller to
/// the larger vertex index, so triangles sharing two corners share that side.
struct GeodesicTriangle {
  std::array<std::size_t, 3> corners;  // x, y, z
  Geodesic xy, yz, xz;
};

GeodesicTriangle geodesic_triangle(const GeodesicSpace& space, std::size_t x, std::size_t y,
                                   std::size_t z);

/// One point per side at Gromov-product distances from the corners:
/// a_x on [y,z], a_y on [x,z], a_z on [x,y].
struct TripodPoints {
  GeodesicPoint a_x, a_y, a_z;
};

TripodPoints tripod_points(const GeodesicSpace& space, const GeodesicTriangle& triangle);
TripodPoints tripod_points(const GeodesicSpace& space, std::size_t x, std::size_t y,
                           std::size_t z);

/// Thin-triangle constant over all vertex triangles, sampling each side at its
/// vertices, at multiples of r, and at its tripod point.
ThinWitness<double> delta_thin(const GeodesicSpace& space, double resolution,
                               ScanOptions opts = {});

struct ThinRelations {
  DeltaWitness<double> delta_gromov;
  ThinWitness<double> thin;
  double max_tripod_spread = 0;
  std::vector<RelationCheck<double>> checks;

  bool all_hold() const;
};

/// Factor-3 relations between the Gromov-product and thin-triangle constants, and
/// the tripod spread bound.
ThinRelations thin_relations(const GeodesicSpace& space, double resolution,
                             ScanOptions opts = {}, double abs_tol = 1e-9);

/// Same, reusing an already computed delta_gromov of the path metric.
ThinRelations thin_relations(const GeodesicSpace& space, double resolution,
                             const DeltaWitness<double>& gromov, ScanOptions opts = {},
                             double abs_tol = 1e-9);

}  // namespace gromov
