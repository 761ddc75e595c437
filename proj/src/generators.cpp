#include "gromov/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <set>

#include "gromov/metric_tree.hpp"

namespace gromov {

namespace {

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

void require_distinct(const PlanarPoints& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw DuplicatePoint("points " + std::to_string(i) + " and " + std::to_string(j) +
                             " coincide");
}

}  // namespace

MetricSpace radial_space(const PlanarPoints& points) {
  if (points.empty()) throw BadSize("radial space needs at least one point");
  require_distinct(points);
  const auto n = static_cast<Eigen::Index>(points.size());
  DistanceMatrix<double> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& x = points[static_cast<std::size_t>(i)];
      const auto& y = points[static_cast<std::size_t>(j)];
      const double nx = x.norm(), ny = y.norm();
      // x = lambda y for some real lambda; the origin is proportional to everything
      const double cross = x.x() * y.y() - x.y() * y.x();
      const bool proportional = std::abs(cross) <= 1e-12 * nx * ny;
      m(i, j) = proportional ? (x - y).norm() : nx + ny;
    }
  return MetricSpace(numbered("p", points.size()), std::move(m));
}

MetricSpace poincare_space(const PlanarPoints& points) {
  if (points.empty()) throw BadSize("Poincare sample needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!(points[i].norm() < 1.0 - 1e-6))
      throw PointOutsideDisk("point " + std::to_string(i) + " is not inside the unit disk");
  const auto n = static_cast<Eigen::Index>(points.size());
  DistanceMatrix<double> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& u = points[static_cast<std::size_t>(i)];
      const auto& v = points[static_cast<std::size_t>(j)];
      const double num = 2.0 * (u - v).squaredNorm();
      const double den = (1.0 - u.squaredNorm()) * (1.0 - v.squaredNorm());
      m(i, j) = std::acosh(1.0 + num / den);
    }
  return MetricSpace(numbered("h", points.size()), std::move(m));
}

MetricSpace euclidean_space(const Eigen::MatrixXd& points) {
  const auto n = points.rows();
  if (n == 0) throw BadSize("Euclidean sample needs at least one point");
  DistanceMatrix<double> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = (points.row(i) - points.row(j)).norm();
  return MetricSpace(numbered("e", static_cast<std::size_t>(n)), std::move(m));
}

UltrametricBallFamily::UltrametricBallFamily(MetricSpace base, std::vector<UltrametricBall> balls)
    : base_(std::move(base)), balls_(std::move(balls)) {
  if (balls_.empty()) throw EmptyFamily("ball family is empty");
  for (const auto& b : balls_) {
    if (b.members.empty()) throw BadSize("ball " + b.id + " has no members");
    for (auto m : b.members)
      if (m >= base_.size()) throw IndexOutOfRange("ball " + b.id + " member out of range");
    if (!(b.nominal_diameter > 0))
      throw BadSize("ball " + b.id + " needs a positive nominal diameter");
  }
}

UltrametricBallFamily UltrametricBallFamily::from_members(
    MetricSpace base, std::vector<std::vector<std::size_t>> members, double scale) {
  std::vector<UltrametricBall> balls;
  balls.reserve(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    double diam = 0;
    for (auto a : members[k])
      for (auto b : members[k])
        if (a < base.size() && b < base.size()) diam = std::max(diam, base(a, b));
    balls.push_back({"B" + std::to_string(k), std::move(members[k]), std::max(diam, scale)});
  }
  return UltrametricBallFamily(std::move(base), std::move(balls));
}

FillingSpace ultrametric_filling(const UltrametricBallFamily& family) {
  const auto& balls = family.balls();
  const auto& base = family.base();
  const auto n = static_cast<Eigen::Index>(balls.size());
  DistanceMatrix<double> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j) {
        m(i, j) = 0;
        continue;
      }
      const auto& a = balls[static_cast<std::size_t>(i)];
      const auto& b = balls[static_cast<std::size_t>(j)];
      double joint = std::max(a.nominal_diameter, b.nominal_diameter);
      for (auto p : a.members)
        for (auto q : b.members) joint = std::max(joint, base(p, q));
      m(i, j) = 2.0 * std::log(joint / std::sqrt(a.nominal_diameter * b.nominal_diameter));
    }
  std::vector<std::string> ids;
  for (const auto& b : balls) ids.push_back(b.id);
  MetricSpace space(std::move(ids), std::move(m));
  auto report = validate_metric(space);
  return {std::move(space), std::move(report)};
}

MetricSpace dyadic_ultrametric(unsigned levels) {
  if (levels > 12) throw BadSize("dyadic ultrametric limited to 12 levels");
  const std::size_t n = std::size_t{1} << levels;
  DistanceMatrix<double> m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          i == j ? 0.0
                 : std::ldexp(1.0, static_cast<int>(std::bit_width(i ^ j)) -
                                       static_cast<int>(levels));
  return MetricSpace(numbered("u", n), std::move(m));
}

UltrametricBallFamily dyadic_ball_family(unsigned levels, double scale) {
  auto base = dyadic_ultrametric(levels);
  const std::size_t n = base.size();
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t block = n; block >= 1; block /= 2)
    for (std::size_t start = 0; start < n; start += block) {
      std::vector<std::size_t> ball(block);
      for (std::size_t k = 0; k < block; ++k) ball[k] = start + k;
      members.push_back(std::move(ball));
    }
  return UltrametricBallFamily::from_members(std::move(base), std::move(members), scale);
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::size_t Rng::below(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n));
}

PlanarPoints sample_radial_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t rays = 1 + rng.below(4);
  std::vector<double> angles;
  for (std::size_t r = 0; r < rays; ++r) angles.push_back(rng.uniform(0.0, 2 * std::numbers::pi));
  angles.push_back(angles.front() + std::numbers::pi);  // the opposite ray
  PlanarPoints pts;
  while (pts.size() < n) {
    Eigen::Vector2d p;
    if (rng.uniform() < 0.8) {
      const double a = angles[rng.below(angles.size())];
      const double r = rng.uniform(0.1, 3.0);
      p = {r * std::cos(a), r * std::sin(a)};
    } else {
      p = {rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    }
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

PlanarPoints sample_disk_points(std::size_t n, std::uint64_t seed, double radius) {
  if (!(radius > 0 && radius < 1)) throw BadSize("disk radius must be in (0, 1)");
  Rng rng(seed);
  PlanarPoints pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = radius * std::sqrt(rng.uniform());
    const double a = rng.uniform(0.0, 2 * std::numbers::pi);
    pts.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return pts;
}

WeightedGraph cycle_graph(std::size_t n, double edge_length) {
  if (n < 3) throw BadSize("cycle needs at least 3 vertices");
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, edge_length});
  return WeightedGraph(numbered("c", n), std::move(edges));
}

WeightedGraph random_tree(std::size_t n, std::uint64_t seed, double lo, double hi) {
  if (n < 1) throw BadSize("tree needs at least one vertex");
  if (!(lo > 0 && lo <= hi)) throw BadSize("edge length range must satisfy 0 < lo <= hi");
  Rng rng(seed);
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const std::size_t parent = rng.below(i);
    edges.push_back({parent, i, rng.uniform(lo, hi)});
  }
  return WeightedGraph(numbered("v", n), std::move(edges));
}

WeightedGraph random_connected_graph(std::size_t n, std::size_t extra, std::uint64_t seed,
                                     double lo, double hi) {
  auto tree = random_tree(n, seed, lo, hi);
  auto edges = tree.edges();
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (const auto& e : edges) used.insert(std::minmax(e.u, e.v));
  const std::size_t max_edges = n * (n - 1) / 2;
  Rng rng(seed ^ 0x9E3779B97F4A7C15ULL);
  while (extra > 0 && used.size() < max_edges) {
    const auto u = rng.below(n), v = rng.below(n);
    if (u == v || !used.insert(std::minmax(u, v)).second) continue;
    edges.push_back({u, v, rng.uniform(lo, hi)});
    --extra;
  }
  return WeightedGraph(tree.labels(), std::move(edges));
}

WeightedGraph grid_graph(std::size_t w, std::size_t h) {
  if (w < 1 || h < 1) throw BadSize("grid dimensions must be positive");
  std::vector<std::string> labels;
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t row = 0; row < h; ++row)
    for (std::size_t col = 0; col < w; ++col) {
      labels.push_back("g" + std::to_string(col) + "_" + std::to_string(row));
      const std::size_t v = row * w + col;
      if (col + 1 < w) edges.push_back({v, v + 1, 1.0});
      if (row + 1 < h) edges.push_back({v, v + w, 1.0});
    }
  return WeightedGraph(std::move(labels), std::move(edges));
}

MetricSpace perturbed_tree_metric(std::size_t n, std::uint64_t seed, double eps) {
  const auto base = tree_metric(MetricTree::from_graph(random_tree(n, seed)));
  Rng rng(seed ^ 0xD1B54A32D192ED03ULL);
  DistanceMatrix<double> m = base.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      m(i, j) += rng.uniform(eps, 2 * eps);
      m(j, i) = m(i, j);
    }
  return MetricSpace(base.labels(), std::move(m));
}

}  // namespace gromov
