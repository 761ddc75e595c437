#include "gromov/tree_realization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

#include "gromov/hyperbolicity.hpp"

namespace gromov {

namespace {

class TreeBuilder {
 public:
  explicit TreeBuilder(const std::vector<std::string>& reserved)
      : reserved_(reserved.begin(), reserved.end()) {}

  std::size_t add_vertex(std::string label) {
    labels_.push_back(std::move(label));
    adjacency_.emplace_back();
    steiner_.push_back(false);
    return labels_.size() - 1;
  }

  std::size_t add_steiner() {
    std::string name;
    do {
      name = "_S" + std::to_string(steiner_count_++);
    } while (reserved_.count(name) != 0);
    const auto v = add_vertex(std::move(name));
    steiner_[v] = true;
    return v;
  }

  void add_edge(std::size_t u, std::size_t v, double length) {
    adjacency_[u].push_back(edges_.size());
    adjacency_[v].push_back(edges_.size());
    edges_.push_back({u, v, length});
  }

  // Inserts a Steiner vertex into the edge between a and b at `offset` from a.
  std::size_t split(std::size_t a, std::size_t b, double offset) {
    const std::size_t e = edge_between(a, b);
    const double len = edges_[e].length;
    const std::size_t s = add_steiner();
    auto& adj_b = adjacency_[b];
    adj_b.erase(std::find(adj_b.begin(), adj_b.end(), e));
    edges_[e] = {a, s, offset};
    adjacency_[s].push_back(e);
    add_edge(s, b, len - offset);
    return s;
  }

  bool is_steiner(std::size_t v) const { return steiner_[v]; }
  void claim(std::size_t v, std::string label) {
    labels_[v] = std::move(label);
    steiner_[v] = false;
  }

  // Vertices of the unique path and their arc-length from `from`.
  std::pair<std::vector<std::size_t>, std::vector<double>> path(std::size_t from,
                                                                std::size_t to) const {
    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> parent(labels_.size(), none);
    std::vector<double> reach(labels_.size(), 0.0);
    std::vector<std::size_t> stack{from};
    parent[from] = from;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      if (u == to) break;
      for (auto e : adjacency_[u]) {
        const auto& ed = edges_[e];
        const auto v = ed.u == u ? ed.v : ed.u;
        if (parent[v] != none) continue;
        parent[v] = u;
        reach[v] = reach[u] + ed.length;
        stack.push_back(v);
      }
    }
    std::vector<std::size_t> vs;
    for (std::size_t v = to; v != from; v = parent[v]) vs.push_back(v);
    vs.push_back(from);
    std::reverse(vs.begin(), vs.end());
    std::vector<double> cum;
    for (auto v : vs) cum.push_back(reach[v]);
    return {vs, cum};
  }

  MetricTree finish() && { return MetricTree(std::move(labels_), std::move(edges_)); }

 private:
  std::size_t edge_between(std::size_t a, std::size_t b) const {
    for (auto e : adjacency_[a]) {
      const auto& ed = edges_[e];
      if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
    }
    throw Error("internal: vertices are not adjacent");
  }

  std::unordered_set<std::string> reserved_;
  std::vector<std::string> labels_;
  std::vector<MetricTree::Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<bool> steiner_;
  std::size_t steiner_count_ = 0;
};

}  // namespace

MetricTree realize_tree(const MetricSpace& space, RealizeOptions opts) {
  const auto gate = delta_four_point(space);
  if (gate.delta > opts.tol) {
    const auto& q = gate.quadruple;
    throw NotZeroHyperbolic("metric is not 0-hyperbolic: four-point delta " +
                                std::to_string(gate.delta) + " at (" + space.label(q[0]) + ", " +
                                space.label(q[1]) + ", " + space.label(q[2]) + ", " +
                                space.label(q[3]) + ")",
                            gate.delta, q);
  }

  const std::size_t n = space.size();
  TreeBuilder b(space.labels());
  std::vector<std::size_t> node(n);
  node[0] = b.add_vertex(space.label(0));
  if (n == 1) return std::move(b).finish();

  if (!(space(0, 1) > opts.tol))
    throw NegativeEdge("points " + space.label(0) + " and " + space.label(1) + " coincide");
  node[1] = b.add_vertex(space.label(1));
  b.add_edge(node[0], node[1], space(0, 1));

  for (std::size_t w = 2; w < n; ++w) {
    std::size_t bx = 0, by = 1;
    double pendant = std::numeric_limits<double>::infinity();
    for (std::size_t x = 0; x < w; ++x)
      for (std::size_t y = x + 1; y < w; ++y) {
        const double g = gromov_product(space, x, y, w);
        if (g < pendant) {
          pendant = g;
          bx = x;
          by = y;
        }
      }
    if (pendant < -opts.tol)
      throw NegativeEdge("negative pendant length " + std::to_string(pendant) + " for " +
                         space.label(w));

    const auto [path, cum] = b.path(node[bx], node[by]);
    const double s = std::clamp(gromov_product(space, by, w, bx), 0.0, cum.back());
    std::size_t k = 0;
    while (k + 2 < path.size() && cum[k + 1] <= s) ++k;

    std::size_t attach;
    if (std::abs(s - cum[k]) <= opts.tol)
      attach = path[k];
    else if (std::abs(cum[k + 1] - s) <= opts.tol)
      attach = path[k + 1];
    else
      attach = b.split(path[k], path[k + 1], s - cum[k]);

    if (pendant > opts.tol) {
      node[w] = b.add_vertex(space.label(w));
      b.add_edge(attach, node[w], pendant);
    } else if (b.is_steiner(attach)) {
      b.claim(attach, space.label(w));
      node[w] = attach;
    } else {
      throw NegativeEdge("point " + space.label(w) +
                         " lands on an existing input point; tolerance too loose for the data");
    }
  }
  return std::move(b).finish();
}

double verify_embedding(const MetricTree& tree, const MetricSpace& space) {
  const std::size_t n = space.size();
  std::vector<std::size_t> at(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto v = tree.find(space.label(i));
    if (!v) throw MissingLabel("label " + space.label(i) + " missing from tree");
    at[i] = *v;
  }
  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      worst = std::max(worst, std::abs(tree.distance(at[i], at[j]) - space(i, j)));
  return worst;
}

}  // namespace gromov
