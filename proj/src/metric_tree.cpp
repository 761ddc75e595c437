#include "gromov/metric_tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace gromov {

MetricTree::MetricTree(std::vector<std::string> labels, std::vector<Edge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw NotATree("tree has no vertices");
  if (edges_.size() != n - 1)
    throw NotATree("a tree on " + std::to_string(n) + " vertices needs " +
                   std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  WeightedGraph g(labels_, edges_);  // loops, parallel edges, lengths
  if (!g.connected()) throw NotATree("edges do not connect all vertices");
  adjacency_.resize(n);
  for (std::size_t v = 0; v < n; ++v) adjacency_[v] = g.neighbors(v);

  parent_.assign(n, 0);
  level_.assign(n, 0);
  parent_length_.assign(n, 0.0);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (const auto& nb : adjacency_[u]) {
      if (seen[nb.vertex]) continue;
      seen[nb.vertex] = true;
      parent_[nb.vertex] = u;
      level_[nb.vertex] = level_[u] + 1;
      parent_length_[nb.vertex] = nb.length;
      stack.push_back(nb.vertex);
    }
  }
}

MetricTree MetricTree::from_graph(const WeightedGraph& graph) {
  return MetricTree(graph.labels(), graph.edges());
}

WeightedGraph MetricTree::to_graph() const { return WeightedGraph(labels_, edges_); }

std::optional<std::size_t> MetricTree::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t MetricTree::lca(std::size_t u, std::size_t v) const {
  while (level_[u] > level_[v]) u = parent_[u];
  while (level_[v] > level_[u]) v = parent_[v];
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
  }
  return u;
}

double MetricTree::distance(std::size_t u, std::size_t v) const {
  if (u >= size() || v >= size()) throw IndexOutOfRange("tree vertex out of range");
  if (u == v) return 0.0;
  // plain sum of stored edge lengths, in an order independent of argument order
  if (u > v) std::swap(u, v);
  const std::size_t a = lca(u, v);
  double d = 0;
  for (std::size_t w = u; w != a; w = parent_[w]) d += parent_length_[w];
  for (std::size_t w = v; w != a; w = parent_[w]) d += parent_length_[w];
  return d;
}

std::vector<std::size_t> MetricTree::vertex_path(std::size_t u, std::size_t v) const {
  if (u >= size() || v >= size()) throw IndexOutOfRange("tree vertex out of range");
  const std::size_t a = lca(u, v);
  std::vector<std::size_t> up, down;
  for (std::size_t w = u; w != a; w = parent_[w]) up.push_back(w);
  for (std::size_t w = v; w != a; w = parent_[w]) down.push_back(w);
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

TreePoint tree_point(const MetricTree& tree, std::size_t edge, double offset) {
  const auto& e = tree.edge(edge);
  if (!(offset >= 0 && offset <= e.length))
    throw ParameterOutOfRange("offset " + std::to_string(offset) + " outside edge of length " +
                              std::to_string(e.length));
  if (offset == 0) return TreePoint::at_vertex(e.u);
  if (offset == e.length) return TreePoint::at_vertex(e.v);
  return {TreePoint::npos, edge, offset};
}

namespace {

struct Anchor {
  std::size_t vertex;
  double reach;
};

std::vector<Anchor> anchors(const MetricTree& tree, const TreePoint& p) {
  if (p.is_vertex()) {
    if (p.vertex >= tree.size()) throw IndexOutOfRange("tree vertex out of range");
    return {{p.vertex, 0.0}};
  }
  const auto& e = tree.edge(p.edge);
  return {{e.u, p.offset}, {e.v, e.length - p.offset}};
}

// Endpoint of p's host edge that lies on the segment toward q.
std::size_t exit_vertex(const MetricTree& tree, const TreePoint& p, const TreePoint& q) {
  if (p.is_vertex()) return p.vertex;
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& a : anchors(tree, p)) {
    const double d = a.reach + tree_distance(tree, TreePoint::at_vertex(a.vertex), q);
    if (d < best_d) {
      best_d = d;
      best = a.vertex;
    }
  }
  return best;
}

void require_convex(const MetricTree& tree, const std::vector<std::size_t>& convex,
                    std::vector<bool>& member) {
  if (convex.empty()) throw NotConvex("target vertex set is empty");
  member.assign(tree.size(), false);
  for (auto v : convex) {
    if (v >= tree.size()) throw IndexOutOfRange("tree vertex out of range");
    member[v] = true;
  }
  std::vector<bool> seen(tree.size(), false);
  std::vector<std::size_t> stack{convex.front()};
  seen[convex.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    ++reached;
    for (const auto& nb : tree.neighbors(u))
      if (member[nb.vertex] && !seen[nb.vertex]) {
        seen[nb.vertex] = true;
        stack.push_back(nb.vertex);
      }
  }
  const auto distinct = static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
  if (reached != distinct) throw NotConvex("target vertex set does not induce a connected subtree");
}

}  // namespace

double tree_distance(const MetricTree& tree, const TreePoint& p, const TreePoint& q) {
  if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge) return std::abs(p.offset - q.offset);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& a : anchors(tree, p))
    for (const auto& b : anchors(tree, q))
      best = std::min(best, a.reach + tree.distance(a.vertex, b.vertex) + b.reach);
  return best;
}

std::vector<TreePoint> tree_segment(const MetricTree& tree, const TreePoint& p,
                                    const TreePoint& q) {
  if (p == q) return {p};
  if (!p.is_vertex() && !q.is_vertex() && p.edge == q.edge) return {p, q};
  std::vector<TreePoint> out;
  if (!p.is_vertex()) out.push_back(p);
  for (auto v : tree.vertex_path(exit_vertex(tree, p, q), exit_vertex(tree, q, p)))
    out.push_back(TreePoint::at_vertex(v));
  if (!q.is_vertex()) out.push_back(q);
  return out;
}

std::vector<std::size_t> betweenness_set(const MetricTree& tree, std::size_t x, std::size_t y,
                                         Tolerance<double> tol) {
  const double dxy = tree.distance(x, y);
  std::vector<std::size_t> out;
  for (std::size_t z = 0; z < tree.size(); ++z)
    if (tol.equal(tree.distance(x, z) + tree.distance(z, y), dxy)) out.push_back(z);
  return out;
}

TreePoint project_onto_subtree(const MetricTree& tree, const TreePoint& p,
                               const std::vector<std::size_t>& convex) {
  std::vector<bool> member;
  require_convex(tree, convex, member);
  if (p.is_vertex()) {
    if (p.vertex >= tree.size()) throw IndexOutOfRange("tree vertex out of range");
    if (member[p.vertex]) return p;
  } else {
    const auto& e = tree.edge(p.edge);
    if (member[e.u] && member[e.v]) return p;
  }
  // walk from p toward any member; the first member met is the contact point
  for (const auto& point : tree_segment(tree, p, TreePoint::at_vertex(convex.front())))
    if (point.is_vertex() && member[point.vertex]) return point;
  return TreePoint::at_vertex(convex.front());  // unreachable: the segment ends in the set
}

TreePoint project_onto_segment(const MetricTree& tree, const TreePoint& p, std::size_t x,
                               std::size_t y) {
  return project_onto_subtree(tree, p, tree.vertex_path(x, y));
}

bool check_gluing(const MetricTree& tree, std::size_t y, std::size_t x, std::size_t z,
                  Tolerance<double> tol) {
  auto yx = tree.vertex_path(y, x);
  auto xz = tree.vertex_path(x, z);
  std::sort(yx.begin(), yx.end());
  std::sort(xz.begin(), xz.end());
  std::vector<std::size_t> common;
  std::set_intersection(yx.begin(), yx.end(), xz.begin(), xz.end(), std::back_inserter(common));
  if (common != std::vector<std::size_t>{x}) return true;

  std::vector<std::size_t> glued;
  std::set_union(yx.begin(), yx.end(), xz.begin(), xz.end(), std::back_inserter(glued));
  auto yz = tree.vertex_path(y, z);
  std::sort(yz.begin(), yz.end());
  return glued == yz && tol.equal(tree.distance(y, z), tree.distance(y, x) + tree.distance(x, z));
}

double nonexpansiveness_probe(const MetricTree& tree, const std::vector<std::size_t>& convex,
                              const std::vector<std::pair<TreePoint, TreePoint>>& pairs) {
  double worst = 0;
  for (const auto& [p, q] : pairs) {
    const double d = tree_distance(tree, p, q);
    if (!(d > 0)) throw ParameterOutOfRange("probe pair has zero distance");
    const double dp = tree_distance(tree, project_onto_subtree(tree, p, convex),
                                    project_onto_subtree(tree, q, convex));
    worst = std::max(worst, dp / d);
  }
  return worst;
}

MetricSpace tree_metric(const MetricTree& tree) {
  const auto n = static_cast<Eigen::Index>(tree.size());
  DistanceMatrix<double> m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = tree.distance(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  return MetricSpace(tree.labels(), std::move(m));
}

}  // namespace gromov
