#include "gromov/geodesic_graph.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

namespace gromov {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> single_source(const WeightedGraph& g, std::size_t source) {
  std::vector<double> dist(g.size(), kInf);
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0;
  queue.push({0.0, source});
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const auto& nb : g.neighbors(u)) {
      const double nd = d + nb.length;
      if (nd < dist[nb.vertex]) {
        dist[nb.vertex] = nd;
        queue.push({nd, nb.vertex});
      }
    }
  }
  return dist;
}

void check_vertex(const GeodesicSpace& s, std::size_t v) {
  if (v >= s.size())
    throw IndexOutOfRange("vertex " + std::to_string(v) + " out of range for " +
                          std::to_string(s.size()) + " vertices");
}

}  // namespace

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)), adjacency_(labels_.size()) {
  const std::size_t n = labels_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& [u, v, len] = edges_[e];
    if (u >= n || v >= n)
      throw IndexOutOfRange("edge " + std::to_string(e) + " references a missing vertex");
    if (u == v) throw InvalidGraph("self-loop at vertex " + labels_[u]);
    if (!(len > 0) || !std::isfinite(len))
      throw NonPositiveLength("edge " + labels_[u] + "-" + labels_[v] + " has length " +
                              std::to_string(len));
    adjacency_[u].push_back({v, len, e});
    adjacency_[v].push_back({u, len, e});
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
    for (std::size_t k = 1; k < adj.size(); ++k)
      if (adj[k].vertex == adj[k - 1].vertex)
        throw InvalidGraph("parallel edges between " + labels_[v] + " and " +
                           labels_[adj[k].vertex]);
  }
}

std::optional<std::size_t> WeightedGraph::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<std::size_t> WeightedGraph::edge_between(std::size_t u, std::size_t v) const {
  const auto& adj = adjacency_.at(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Neighbor& a, std::size_t x) { return a.vertex < x; });
  if (it == adj.end() || it->vertex != v) return std::nullopt;
  return it->edge;
}

std::vector<std::vector<std::size_t>> WeightedGraph::components() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t s = 0; s < size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& nb : adjacency_[u])
        if (!seen[nb.vertex]) {
          seen[nb.vertex] = true;
          stack.push_back(nb.vertex);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

MetricSpace all_pairs_shortest(const WeightedGraph& graph) {
  if (graph.size() == 0) throw DegenerateSpace("graph has no vertices");
  auto comps = graph.components();
  if (comps.size() > 1)
    throw Disconnected("graph has " + std::to_string(comps.size()) + " connected components",
                       std::move(comps));
  const auto n = static_cast<Eigen::Index>(graph.size());
  DistanceMatrix<double> m(n, n);
  for (Eigen::Index s = 0; s < n; ++s) {
    const auto row = single_source(graph, static_cast<std::size_t>(s));
    for (Eigen::Index t = 0; t < n; ++t) m(s, t) = row[static_cast<std::size_t>(t)];
  }
  // symmetrize against summation-order differences between the two directions
  m = (m + m.transpose()) / 2.0;
  return MetricSpace(graph.labels(), std::move(m));
}

GeodesicSpace::GeodesicSpace(WeightedGraph graph)
    : graph_(std::move(graph)), metric_(all_pairs_shortest(graph_)) {}

Geodesic canonical_geodesic(const GeodesicSpace& space, std::size_t x, std::size_t y) {
  check_vertex(space, x);
  check_vertex(space, y);
  const Tolerance<double> tol;
  Geodesic g{{x}, {0.0}};
  std::size_t cur = x;
  while (cur != y) {
    const double remaining = space.distance(cur, y);
    std::size_t next = cur;
    double step = 0;
    for (const auto& nb : space.graph().neighbors(cur)) {
      const double rest = space.distance(nb.vertex, y);
      if (rest < remaining && tol.equal(nb.length + rest, remaining)) {
        next = nb.vertex;
        step = nb.length;
        break;
      }
    }
    if (next == cur)
      throw Error("no geodesic continuation from " + space.graph().label(cur));
    g.vertices.push_back(next);
    g.arc.push_back(g.arc.back() + step);
    cur = next;
  }
  return g;
}

std::vector<std::size_t> interval_set(const GeodesicSpace& space, std::size_t x, std::size_t y,
                                      Tolerance<double> tol) {
  check_vertex(space, x);
  check_vertex(space, y);
  std::vector<std::size_t> out;
  const double dxy = space.distance(x, y);
  for (std::size_t v = 0; v < space.size(); ++v)
    if (tol.equal(space.distance(x, v) + space.distance(v, y), dxy)) out.push_back(v);
  return out;
}

GeodesicPoint point_at(const Geodesic& geodesic, double t) {
  const double len = geodesic.length();
  const double slack = 1e-12 * std::max(1.0, len);
  if (!(t >= -slack && t <= len + slack))
    throw ParameterOutOfRange("arc-length " + std::to_string(t) + " outside [0, " +
                              std::to_string(len) + "]");
  t = std::clamp(t, 0.0, len);
  const auto& arc = geodesic.arc;
  const auto& vs = geodesic.vertices;

  // last vertex with arc <= t
  auto it = std::upper_bound(arc.begin(), arc.end(), t);
  std::size_t k = static_cast<std::size_t>(it - arc.begin()) - 1;
  GeodesicPoint p;
  p.t = t;
  p.segment = std::min(k, vs.size() >= 2 ? vs.size() - 2 : 0);
  if (std::abs(t - arc[k]) <= slack || k + 1 == vs.size()) {
    p.u = p.v = vs[k];
    return p;
  }
  if (std::abs(arc[k + 1] - t) <= slack) {
    p.u = p.v = vs[k + 1];
    p.segment = k;
    return p;
  }
  p.segment = k;
  p.u = vs[k];
  p.v = vs[k + 1];
  p.edge_length = arc[k + 1] - arc[k];
  p.offset = t - arc[k];
  return p;
}

GeodesicPoint point_from(const Geodesic& geodesic, std::size_t end, double s) {
  if (end == geodesic.from()) return point_at(geodesic, s);
  if (end == geodesic.to()) return point_at(geodesic, geodesic.length() - s);
  throw ParameterOutOfRange("vertex is not an endpoint of the geodesic");
}

double dist_between_points(const GeodesicSpace& space, const GeodesicPoint& p,
                           const GeodesicPoint& q) {
  const std::array<std::pair<std::size_t, double>, 2> pe{
      {{p.u, p.offset}, {p.v, p.edge_length - p.offset}}};
  const std::array<std::pair<std::size_t, double>, 2> qe{
      {{q.u, q.offset}, {q.v, q.edge_length - q.offset}}};
  double best = kInf;
  for (const auto& [a, da] : pe)
    for (const auto& [b, db] : qe) best = std::min(best, da + space.distance(a, b) + db);
  if (!p.at_vertex() && !q.at_vertex()) {
    if (p.u == q.u && p.v == q.v) best = std::min(best, std::abs(p.offset - q.offset));
    if (p.u == q.v && p.v == q.u)
      best = std::min(best, std::abs(p.offset - (q.edge_length - q.offset)));
  }
  return best;
}

GeodesicTriangle geodesic_triangle(const GeodesicSpace& space, std::size_t x, std::size_t y,
                                   std::size_t z) {
  auto side = [&](std::size_t a, std::size_t b) {
    return a <= b ? canonical_geodesic(space, a, b) : canonical_geodesic(space, b, a);
  };
  return {{x, y, z}, side(x, y), side(y, z), side(x, z)};
}

TripodPoints tripod_points(const GeodesicSpace& space, const GeodesicTriangle& tri) {
  const auto [x, y, z] = tri.corners;
  const auto& d = space.metric();
  const double gx = std::max(0.0, gromov_product(d, y, z, x));  // (y,z)_x
  const double gy = std::max(0.0, gromov_product(d, x, z, y));  // (x,z)_y
  auto clamp_to = [](const Geodesic& g, double s) { return std::min(s, g.length()); };
  TripodPoints tp;
  tp.a_z = point_from(tri.xy, x, clamp_to(tri.xy, gx));
  tp.a_y = point_from(tri.xz, x, clamp_to(tri.xz, gx));
  tp.a_x = point_from(tri.yz, y, clamp_to(tri.yz, gy));
  return tp;
}

TripodPoints tripod_points(const GeodesicSpace& space, std::size_t x, std::size_t y,
                           std::size_t z) {
  check_vertex(space, x);
  check_vertex(space, y);
  check_vertex(space, z);
  return tripod_points(space, geodesic_triangle(space, x, y, z));
}

namespace {

// Canonical geodesics for all vertex pairs a < b.
class GeodesicCache {
 public:
  explicit GeodesicCache(const GeodesicSpace& space) : n_(space.size()) {
    paths_.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b) paths_.push_back(canonical_geodesic(space, a, b));
  }

  const Geodesic& get(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    // row a starts after sum_{r<a} (n-1-r) entries
    return paths_[a * (2 * n_ - a - 1) / 2 + (b - a - 1)];
  }

 private:
  std::size_t n_;
  std::vector<Geodesic> paths_;
};

struct SideProbe {
  double value = -1;
  double t = 0;
};

// Largest sampled distance from `side` to the union of `other1` and `other2`.
SideProbe probe_side(const GeodesicSpace& space, const Geodesic& side, const Geodesic& other1,
                     const Geodesic& other2, double tripod_t, double r) {
  const auto& g = space.graph();
  std::vector<std::size_t> target = other1.vertices;
  target.insert(target.end(), other2.vertices.begin(), other2.vertices.end());
  std::sort(target.begin(), target.end());
  target.erase(std::unique(target.begin(), target.end()), target.end());

  std::vector<std::size_t> target_edges;
  for (const Geodesic* o : {&other1, &other2})
    for (std::size_t s = 0; s + 1 < o->vertices.size(); ++s)
      target_edges.push_back(*g.edge_between(o->vertices[s], o->vertices[s + 1]));
  std::sort(target_edges.begin(), target_edges.end());

  const std::size_t m = side.vertices.size();
  std::vector<double> near(m, kInf);
  for (std::size_t s = 0; s < m; ++s)
    for (auto w : target) near[s] = std::min(near[s], space.distance(side.vertices[s], w));
  std::vector<bool> shared(m > 0 ? m - 1 : 0, false);
  for (std::size_t s = 0; s + 1 < m; ++s) {
    const auto e = *g.edge_between(side.vertices[s], side.vertices[s + 1]);
    shared[s] = std::binary_search(target_edges.begin(), target_edges.end(), e);
  }

  auto value_at = [&](double t) {
    const auto p = point_at(side, t);
    if (p.at_vertex()) {
      const std::size_t k = side.vertices[p.segment] == p.u ? p.segment : p.segment + 1;
      return near[k];
    }
    if (shared[p.segment]) return 0.0;
    return std::min(p.offset + near[p.segment],
                    p.edge_length - p.offset + near[p.segment + 1]);
  };

  SideProbe best;
  auto consider = [&](double t) {
    const double v = value_at(t);
    if (v > best.value) best = {v, t};
  };
  for (std::size_t s = 0; s < m; ++s) consider(side.arc[s]);
  const double len = side.length();
  for (std::size_t k = 1; static_cast<double>(k) * r < len; ++k) consider(static_cast<double>(k) * r);
  consider(std::clamp(tripod_t, 0.0, len));
  return best;
}

}  // namespace

ThinWitness<double> delta_thin(const GeodesicSpace& space, double resolution, ScanOptions opts) {
  if (!(resolution > 0)) throw NonPositiveResolution("resolution must be positive");
  const std::size_t n = space.size();
  ThinWitness<double> result;
  result.resolution = resolution;
  if (n < 3) return result;

  const GeodesicCache cache(space);
  const auto& d = space.metric();
  std::vector<ThinWitness<double>> parts(n);

  detail::for_each_index(n, opts.threads, [&](std::size_t i) {
    ThinWitness<double> best;
    best.delta = -1;
    auto take = [&](const SideProbe& p, std::size_t a, std::size_t b, std::size_t c) {
      if (p.value > best.delta) best = {p.value, {a, b, c}, p.t, resolution};
    };
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Geodesic& ij = cache.get(i, j);
        const Geodesic& jk = cache.get(j, k);
        const Geodesic& ik = cache.get(i, k);
        take(probe_side(space, ij, ik, jk, gromov_product(d, j, k, i), resolution), i, j, k);
        take(probe_side(space, jk, ij, ik, gromov_product(d, i, k, j), resolution), j, k, i);
        take(probe_side(space, ik, ij, jk, gromov_product(d, j, k, i), resolution), i, k, j);
      }
    parts[i] = best;
  });

  result.delta = 0;
  for (const auto& p : parts)
    if (p.delta > result.delta) result = p;
  result.resolution = resolution;
  return result;
}

bool ThinRelations::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
}

ThinRelations thin_relations(const GeodesicSpace& space, double resolution, ScanOptions opts,
                             double abs_tol) {
  return thin_relations(space, resolution, delta_gromov(space.metric(), opts), opts, abs_tol);
}

ThinRelations thin_relations(const GeodesicSpace& space, double resolution,
                             const DeltaWitness<double>& gromov, ScanOptions opts,
                             double abs_tol) {
  ThinRelations rel;
  rel.delta_gromov = gromov;
  rel.thin = delta_thin(space, resolution, opts);

  const std::size_t n = space.size();
  if (n >= 3) {
    const GeodesicCache cache(space);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
          const GeodesicTriangle tri{{i, j, k}, cache.get(i, j), cache.get(j, k),
                                     cache.get(i, k)};
          const auto tp = tripod_points(space, tri);
          rel.max_tripod_spread =
              std::max({rel.max_tripod_spread, dist_between_points(space, tp.a_x, tp.a_y),
                        dist_between_points(space, tp.a_y, tp.a_z),
                        dist_between_points(space, tp.a_x, tp.a_z)});
        }
  }

  const double d3 = rel.delta_gromov.delta, dt = rel.thin.delta, r = resolution;
  auto push = [&](std::string name, double lhs, double rhs) {
    rel.checks.push_back({std::move(name), lhs <= rhs + abs_tol, rhs - lhs});
  };
  push("gromov_le_3_thin", d3, 3 * dt + 3 * r);
  push("thin_le_3_gromov", dt, 3 * d3 + r);
  push("tripod_spread_le_2_thin", rel.max_tripod_spread, 2 * dt + 2 * r);
  return rel;
}

}  // namespace gromov
