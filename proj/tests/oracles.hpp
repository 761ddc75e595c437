#pragma once

// Slow reference implementations used only by the tests. They share no scanning
// code with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "gromov/geodesic_graph.hpp"
#include "gromov/metric_space.hpp"
#include "gromov/metric_tree.hpp"

namespace oracle {

using gromov::GeodesicPoint;
using gromov::GeodesicSpace;
using gromov::MetricSpace;

struct Delta {
  double value = 0;
  std::array<std::size_t, 4> witness{0, 0, 0, 0};
};

// All n^4 ordered quadruples with repetition; first maximizer in lexicographic order.
inline Delta four_point(const MetricSpace& s) {
  const std::size_t n = s.size();
  Delta best;
  best.value = -1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t p = 0; p < n; ++p) {
          std::array<double, 3> sums{s(x, y) + s(z, p), s(x, z) + s(y, p), s(x, p) + s(y, z)};
          std::sort(sums.begin(), sums.end());
          const double v = (sums[2] - sums[1]) / 2;
          if (v > best.value) best = {v, {x, y, z, p}};
        }
  return best;
}

inline Delta gromov(const MetricSpace& s) {
  const std::size_t n = s.size();
  auto prod = [&](std::size_t a, std::size_t b, std::size_t p) {
    return 0.5 * (s(a, p) + s(b, p) - s(a, b));
  };
  Delta best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t p = 0; p < n; ++p) {
          const double v = std::min(prod(x, y, p), prod(y, z, p)) - prod(x, z, p);
          if (v > best.value) best = {v, {x, y, z, p}};
        }
  return best;
}

inline double diameter(const MetricSpace& s) {
  double d = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) d = std::max(d, s(i, j));
  return d;
}

// Distance from a point on a side to another side, which is the union of its
// edges: the minimum over the side's vertices, or 0 when the point sits on one
// of the side's edges.
inline double dist_to_side(const GeodesicSpace& g, const GeodesicPoint& p,
                           const gromov::Geodesic& side) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < side.vertices.size(); ++k) {
    const auto q = gromov::point_at(side, side.arc[k]);
    best = std::min(best, gromov::dist_between_points(g, p, q));
  }
  if (!p.at_vertex())
    for (std::size_t k = 0; k + 1 < side.vertices.size(); ++k) {
      const auto a = side.vertices[k], b = side.vertices[k + 1];
      if ((a == p.u && b == p.v) || (a == p.v && b == p.u)) return 0;
    }
  return best;
}

// Continuous supremum over each side of its distance to the other two sides.
// On a host edge of length L the distance is min(s + A, L - s + B) for the
// distances A, B of its endpoints (0 on a shared edge), peaking at (L + A + B) / 2.
inline double thin_exact(const GeodesicSpace& g) {
  const std::size_t n = g.size();
  double best = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const auto t = gromov::geodesic_triangle(g, x, y, z);
        const std::array<const gromov::Geodesic*, 3> sides{&t.xy, &t.yz, &t.xz};
        for (std::size_t s = 0; s < 3; ++s) {
          const auto& side = *sides[s];
          const auto& o1 = *sides[(s + 1) % 3];
          const auto& o2 = *sides[(s + 2) % 3];
          auto dist = [&](const GeodesicPoint& p) {
            return std::min(dist_to_side(g, p, o1), dist_to_side(g, p, o2));
          };
          for (std::size_t k = 0; k + 1 < side.vertices.size(); ++k) {
            const double L = side.arc[k + 1] - side.arc[k];
            const auto mid = gromov::point_at(side, side.arc[k] + L / 2);
            const double A = dist(gromov::point_at(side, side.arc[k]));
            const double B = dist(gromov::point_at(side, side.arc[k + 1]));
            best = std::max({best, A, B});
            if (dist(mid) == 0) continue;
            const double s_peak = std::clamp((L + B - A) / 2, 0.0, L);
            best = std::max(best, std::min(s_peak + A, L - s_peak + B));
          }
        }
      }
  return best;
}

// Distance of each point of a side, sampled every h, to the other two sides.
inline double thin_sampled(const GeodesicSpace& g, double h) {
  const std::size_t n = g.size();
  double best = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const auto t = gromov::geodesic_triangle(g, x, y, z);
        const std::array<const gromov::Geodesic*, 3> sides{&t.xy, &t.yz, &t.xz};
        for (std::size_t s = 0; s < 3; ++s) {
          const auto& side = *sides[s];
          const double L = side.length();
          for (std::size_t k = 0;; ++k) {
            const double off = std::min(L, static_cast<double>(k) * h);
            const auto p = gromov::point_at(side, off);
            best = std::max(best, std::min(dist_to_side(g, p, *sides[(s + 1) % 3]),
                                           dist_to_side(g, p, *sides[(s + 2) % 3])));
            if (off >= L) break;
          }
        }
      }
  return best;
}

// Nearest point of the subtree spanned by `convex`, found by sampling every edge
// inside it at 64 interior points plus its endpoints.
inline double projection_distance(const gromov::MetricTree& tree, const gromov::TreePoint& p,
                                  const std::vector<std::size_t>& convex) {
  std::vector<bool> in(tree.size(), false);
  for (auto v : convex) in[v] = true;
  double best = std::numeric_limits<double>::infinity();
  for (auto v : convex)
    best = std::min(best, gromov::tree_distance(tree, p, gromov::TreePoint::at_vertex(v)));
  for (std::size_t e = 0; e < tree.edges().size(); ++e) {
    const auto& edge = tree.edge(e);
    if (!in[edge.u] || !in[edge.v]) continue;
    for (int k = 1; k < 64; ++k) {
      const auto q = gromov::tree_point(tree, e, edge.length * k / 64.0);
      best = std::min(best, gromov::tree_distance(tree, p, q));
    }
    if (p.edge == e) best = 0;
  }
  return best;
}

}  // namespace oracle
