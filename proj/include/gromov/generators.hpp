#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "gromov/geodesic_graph.hpp"
#include "gromov/metric_space.hpp"

namespace gromov {

using PlanarPoints = std::vector<Eigen::Vector2d>;

/// Radial ("British rail") metric on the plane: Euclidean along rays through the
/// origin, otherwise through the origin. Labels are p0, p1, ...
MetricSpace radial_space(const PlanarPoints& points);

/// Points of the Poincare disk with the hyperbolic distance
/// arcosh(1 + 2|u-v|^2 / ((1-|u|^2)(1-|v|^2))).
MetricSpace poincare_space(const PlanarPoints& points);

/// Euclidean distances between the rows of `points`.
MetricSpace euclidean_space(const Eigen::MatrixXd& points);

/// A ball of an ultrametric space; the nominal diameter is floored at a fixed scale.
struct UltrametricBall {
  std::string id;
  std::vector<std::size_t> members;
  double nominal_diameter;
};

class UltrametricBallFamily {
 public:
  /// Throws EmptyFamily for no balls, BadSize for empty balls or nonpositive
  /// nominal diameters.
  UltrametricBallFamily(MetricSpace base, std::vector<UltrametricBall> balls);

  /// Balls with nominal diameter max(actual diameter, scale).
  static UltrametricBallFamily from_members(MetricSpace base,
                                            std::vector<std::vector<std::size_t>> members,
                                            double scale);

  const MetricSpace& base() const { return base_; }
  const std::vector<UltrametricBall>& balls() const { return balls_; }

 private:
  MetricSpace base_;
  std::vector<UltrametricBall> balls_;
};

struct FillingSpace {
  MetricSpace space;
  ValidationReport<double> validation;
};

/// h(A,B) = 2 log(diam(A u B) / sqrt(diam A * diam B)) between the balls, where
/// diam(A u B) = max(nominal A, nominal B, largest cross distance).
FillingSpace ultrametric_filling(const UltrametricBallFamily& family);

/// 2^levels points with d(i, j) = 2^(bit_width(i xor j) - levels).
MetricSpace dyadic_ultrametric(unsigned levels);

/// All dyadic blocks of dyadic_ultrametric(levels), singletons floored at `scale`.
UltrametricBallFamily dyadic_ball_family(unsigned levels, double scale);

// std::mt19937_64 output is fixed by the standard; the mapping to doubles is done
// here rather than with <random> distributions, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  double uniform();  // [0, 1)
  double uniform(double lo, double hi);
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Planar point sets with several points per ray, including opposite rays.
PlanarPoints sample_radial_points(std::size_t n, std::uint64_t seed);

/// Points uniform by area in the disk of the given radius (< 1).
PlanarPoints sample_disk_points(std::size_t n, std::uint64_t seed, double radius = 0.95);

WeightedGraph cycle_graph(std::size_t n, double edge_length = 1.0);

/// Vertex i > 0 joins a uniformly chosen earlier vertex; lengths uniform in [lo, hi].
WeightedGraph random_tree(std::size_t n, std::uint64_t seed, double lo = 0.5, double hi = 2.0);

/// random_tree plus `extra` additional edges between non-adjacent vertices.
WeightedGraph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed,
                                     double lo = 0.5, double hi = 2.0);

/// w x h unit grid; vertex (col, row) has index row * w + col and label g<col>_<row>.
WeightedGraph grid_graph(std::size_t w, std::size_t h);

/// Path metric of random_tree with every off-diagonal entry raised by an
/// independent amount in [eps, 2 eps], which keeps the triangle inequality.
MetricSpace perturbed_tree_metric(std::size_t n, std::uint64_t seed, double eps);

}  // namespace gromov
