#pragma once

#include "gromov/metric_space.hpp"
#include "gromov/metric_tree.hpp"

namespace gromov {

struct RealizeOptions {
  /// Absolute gate on the four-point delta and snapping distance for the build.
  double tol = 1e-7;
};

/// Builds a weighted tree, with Steiner vertices where needed, whose distances
/// between the input labels reproduce the metric.
///
/// Points are inserted in input order. A new point w is attached to the segment
/// [x, y] of already inserted points that is closest to it, i.e. minimizing the
/// pendant length (x,y)_w, ties broken lexicographically; the attachment point
/// sits at arc-length (y,w)_x from x.
///
/// Throws NotZeroHyperbolic when delta_four_point exceeds tol, and NegativeEdge
/// when the data forces a nonpositive edge (tol too loose).
MetricTree realize_tree(const MetricSpace& space, RealizeOptions opts = {});

/// Largest |tree distance - metric distance| over all label pairs of the space.
/// Throws MissingLabel when a space label is absent from the tree.
double verify_embedding(const MetricTree& tree, const MetricSpace& space);

}  // namespace gromov
