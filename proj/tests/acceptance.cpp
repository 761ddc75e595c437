// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "gromov/formats.hpp"
#include "gromov/generators.hpp"
#include "gromov/geodesic_graph.hpp"
#include "gromov/hyperbolicity.hpp"
#include "gromov/metric_tree.hpp"
#include "gromov/tree_realization.hpp"
#include "oracles.hpp"

using namespace gromov;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Spaces shared by the diameter and subspace criterion.
std::vector<MetricSpace> g_seen;

// ---------------------------------------------------------------- corpora

MetricSpace random_euclidean(std::size_t n, std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
  for (Eigen::Index i = 0; i < pts.size(); ++i) pts.data()[i] = rng.uniform(-1, 1);
  return euclidean_space(pts);
}

std::vector<MetricSpace> equivalence_corpus() {
  std::vector<MetricSpace> out;
  for (std::uint64_t k = 0; k < 500; ++k) {
    const std::uint64_t seed = 1000 + k;
    const std::size_t n = 4 + k % 7;  // 4..10
    switch (k % 3) {
      case 0: out.push_back(random_euclidean(n, 2 + k % 3, seed)); break;
      case 1: out.push_back(all_pairs_shortest(random_connected_graph(n, 1 + k % 5, seed))); break;
      default: out.push_back(perturbed_tree_metric(n, seed, 0.02 + 0.01 * (k % 4))); break;
    }
  }
  return out;
}

std::vector<WeightedGraph> tree_corpus() {
  std::vector<WeightedGraph> out;
  for (std::uint64_t k = 0; k < 100; ++k) out.push_back(random_tree(2 + k % 49, 5000 + k));
  return out;
}

// ---------------------------------------------------------------- criteria

Outcome c1_equivalence() {
  const auto corpus = equivalence_corpus();
  const auto t0 = Clock::now();
  double worst = 0;
  for (const auto& s : corpus) {
    const double d3 = delta_gromov(s).delta, d4 = delta_four_point(s).delta;
    worst = std::max(worst, std::abs(d3 - d4));
  }
  const double secs = seconds_since(t0);
  g_seen.insert(g_seen.end(), corpus.begin(), corpus.end());
  return {worst <= 1e-9 && secs <= 10,
          fmt("500 spaces, max |d3-d4| = %.3g, %.2f s", worst, secs)};
}

Outcome c2_trees() {
  const auto corpus = tree_corpus();
  const auto t0 = Clock::now();
  double worst = 0;
  for (const auto& g : corpus) {
    const auto s = all_pairs_shortest(g);
    worst = std::max(worst, delta_four_point(s).delta);
    g_seen.push_back(s);
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-9 && secs <= 30, fmt("100 trees, max d4 = %.3g, %.2f s", worst, secs)};
}

Outcome c3_cycles() {
  const std::vector<std::pair<std::size_t, double>> expected{{4, 1.0}, {5, 0.5}, {6, 1.0}};
  bool ok = true;
  std::string detail;
  for (const auto& [n, value] : expected) {
    const auto s = all_pairs_shortest(cycle_graph(n));
    const auto lib = delta_four_point(s);
    const auto ref = oracle::four_point(s);
    ok = ok && std::abs(lib.delta - value) <= 1e-12 && std::abs(ref.value - value) <= 1e-12 &&
         lib.quadruple == ref.witness;
    detail += "C" + std::to_string(n) + "=" + format_length(lib.delta) + " ";
    g_seen.push_back(s);
  }
  return {ok, detail + "(brute force agrees)"};
}

Outcome c4_radial() {
  bool valid = true;
  double worst = 0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto s = radial_space(sample_radial_points(3 + k % 13, 7000 + k));
    valid = valid && validate_metric(s).passed();
    worst = std::max(worst, delta_four_point(s).delta);
    g_seen.push_back(s);
  }
  return {valid && worst <= 1e-9,
          std::string(valid ? "all valid" : "INVALID metric") + fmt(", max d4 = %.3g", worst)};
}

Outcome c5_poincare() {
  const double bound = 3 * 0.5 * std::log(3.0) + 1e-6;
  double worst = 0;
  for (std::uint64_t k = 0; k < 200; ++k) {
    const auto s = poincare_space(sample_disk_points(8, 9000 + k));
    worst = std::max(worst, delta_gromov(s).delta);
    g_seen.push_back(s);
  }
  return {worst <= bound, fmt("max d3 = %.6f <= %.6f", worst, bound)};
}

Outcome c6_thin() {
  const double r = 0.05, eps = 1e-9;
  std::vector<std::pair<std::string, WeightedGraph>> corpus;
  for (std::size_t n = 2; n <= 30; ++n)
    corpus.emplace_back("tree" + std::to_string(n), random_tree(n, 11000 + n));
  for (std::size_t n = 4; n <= 8; ++n) corpus.emplace_back("C" + std::to_string(n), cycle_graph(n));

  bool factor3 = true, tree_thin = true, tripod = true;
  double worst_tree_thin = 0, worst_tripod_slack = std::numeric_limits<double>::infinity();
  std::string tripod_fail;
  for (const auto& [name, g] : corpus) {
    const GeodesicSpace s(g);
    const auto rel = thin_relations(s, r);
    const double d3 = rel.delta_gromov.delta, dt = rel.thin.delta;
    factor3 = factor3 && d3 <= 3 * dt + 3 * r + eps && dt <= 3 * d3 + r + eps;
    if (name.rfind("tree", 0) == 0) {
      worst_tree_thin = std::max(worst_tree_thin, dt);
      tree_thin = tree_thin && dt <= r + eps;
    }
    const double slack = 2 * dt + 2 * r + eps - rel.max_tripod_spread;
    worst_tripod_slack = std::min(worst_tripod_slack, slack);
    tripod = tripod && slack >= 0;
    if (slack < 0 && tripod_fail.empty())
      tripod_fail = " " + name + ": spread " + format_length(rel.max_tripod_spread) +
                    " > 2*" + format_length(dt) + "+2r";
  }
  return {factor3 && tree_thin && tripod,
          std::string(factor3 ? "factor-3 ok" : "factor-3 FAILED") +
              fmt(", tree thin max %.3g, min tripod slack %.3g", worst_tree_thin,
                  worst_tripod_slack) +
              tripod_fail};
}

Outcome c7_projection() {
  Rng rng(13000);
  double worst = 0;
  bool idempotent = true;
  std::size_t probes = 0;
  while (probes < 10000) {
    const auto t = MetricTree::from_graph(random_tree(2 + rng.below(24), rng.below(1 << 30)));
    std::vector<std::size_t> convex{rng.below(t.size())};
    std::vector<bool> in(t.size(), false);
    in[convex[0]] = true;
    const std::size_t target = 1 + rng.below(t.size());
    while (convex.size() < target) {
      std::vector<std::size_t> frontier;
      for (auto v : convex)
        for (const auto& nb : t.neighbors(v))
          if (!in[nb.vertex]) frontier.push_back(nb.vertex);
      if (frontier.empty()) break;
      const auto pick = frontier[rng.below(frontier.size())];
      in[pick] = true;
      convex.push_back(pick);
    }
    auto point = [&] {
      if (rng.uniform() < 0.25) return TreePoint::at_vertex(rng.below(t.size()));
      const auto e = rng.below(t.edges().size());
      return tree_point(t, e, rng.uniform() * t.edge(e).length);
    };
    for (int k = 0; k < 20 && probes < 10000; ++k) {
      const auto p = point(), q = point();
      if (!(tree_distance(t, p, q) > 0)) continue;
      worst = std::max(worst, nonexpansiveness_probe(t, convex, {{p, q}}));
      const auto pp = project_onto_subtree(t, p, convex);
      idempotent = idempotent && project_onto_subtree(t, pp, convex) == pp;
      ++probes;
    }
  }
  return {worst <= 1 + 1e-9 && idempotent,
          fmt("10000 probes, max ratio = %.12f", worst) +
              (idempotent ? ", idempotent" : ", NOT idempotent")};
}

Outcome c8_gluing() {
  std::size_t triples = 0, failures = 0;
  for (std::uint64_t k = 0; k < 50; ++k) {
    const auto t = MetricTree::from_graph(random_tree(2 + k % 24, 15000 + k));
    const std::size_t n = t.size();
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t z = 0; z < n; ++z) {
          ++triples;
          failures += !check_gluing(t, y, x, z);
        }
  }
  return {failures == 0, std::to_string(triples) + " triples, " + std::to_string(failures) +
                             " failures"};
}

Outcome c9_realization() {
  double worst = 0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    const auto full = all_pairs_shortest(random_tree(2 + k % 19, 17000 + k));
    // every other instance keeps a subset, which needs Steiner vertices
    MetricSpace s = full;
    if (k % 2 == 1 && full.size() > 3) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < full.size(); i += 2) keep.push_back(i);
      s = subspace(full, keep);
    }
    worst = std::max(worst, verify_embedding(realize_tree(s), s));
  }
  bool rejected = true;
  for (std::size_t n : {4, 5}) {
    const auto s = all_pairs_shortest(cycle_graph(n));
    const auto ref = oracle::four_point(s);
    try {
      realize_tree(s);
      rejected = false;
    } catch (const NotZeroHyperbolic& e) {
      rejected = rejected && e.witness() == ref.witness && e.delta() == ref.value;
    }
  }
  return {worst <= 1e-6 && rejected,
          fmt("100 metrics, max error = %.3g", worst) +
              (rejected ? ", C4/C5 rejected with witness" : ", C4/C5 NOT rejected correctly")};
}

Outcome c10_diameter_subspace() {
  Rng rng(19000);
  double worst_diam = -1e300, worst_sub = -1e300;
  for (const auto& s : g_seen) {
    const auto d3 = delta_gromov(s).delta;
    const auto d4 = delta_four_point(s).delta;
    worst_diam = std::max(worst_diam, d3 - diameter(s));
    for (int k = 0; k < 10; ++k) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (rng.uniform() < 0.5) idx.push_back(i);
      if (idx.empty()) idx.push_back(rng.below(s.size()));
      worst_sub = std::max(worst_sub, delta_four_point(subspace(s, idx)).delta - d4);
    }
  }
  return {worst_diam <= 1e-9 && worst_sub <= 1e-9,
          std::to_string(g_seen.size()) + " spaces" +
              fmt(", max d3-diam = %.3g, max sub-parent = %.3g", worst_diam, worst_sub)};
}

Outcome c11_round_trips() {
  std::size_t stable = 0;
  const auto corpus = tree_corpus();
  for (const auto& g : corpus) {
    const auto edges = emit_edge_list(g);
    const auto nwk = emit_newick(MetricTree::from_graph(g));
    stable += emit_edge_list(parse_edge_list(edges)) == edges &&
              emit_newick(parse_newick(nwk)) == nwk;
  }
  const auto t = parse_newick("((A:1,B:1):1,C:2);");
  const double ac = t.distance(*t.find("A"), *t.find("C"));
  return {stable == corpus.size() && ac == 4.0,
          std::to_string(stable) + "/" + std::to_string(corpus.size()) +
              " byte-stable, d(A,C) = " + format_length(ac)};
}

Outcome c12_performance() {
  const auto s = poincare_space(sample_disk_points(300, 21000));
  auto report = [](const DeltaWitness<double>& w) {
    std::string r = format_length(w.delta);
    for (auto i : w.quadruple) r += " " + std::to_string(i);
    return r;
  };
  auto t0 = Clock::now();
  const auto one = delta_four_point(s, {1});
  const double t1 = seconds_since(t0);
  t0 = Clock::now();
  const auto eight = delta_four_point(s, {8});
  const double t8 = seconds_since(t0);
  const bool same = report(one) == report(eight);
  return {t1 <= 60 && t8 <= 15 && same,
          fmt("n=300: 1 worker %.2f s, 8 workers %.2f s, d4 = %.6f", t1, t8, one.delta) +
              (same ? ", identical" : ", reports DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"exact equivalence d3 = d4", c1_equivalence},
      {"tree metrics are 0-hyperbolic", c2_trees},
      {"cycle values C4 C5 C6", c3_cycles},
      {"radial metric is a tree metric", c4_radial},
      {"Poincare disk bound", c5_poincare},
      {"factor-3 thin relations and tripod bound", c6_thin},
      {"projection nonexpansive and idempotent", c7_projection},
      {"segment gluing", c8_gluing},
      {"realization round trip", c9_realization},
      {"diameter bound and subspace monotonicity", c10_diameter_subspace},
      {"parser round trips", c11_round_trips},
      {"performance n=300", c12_performance},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::printf("%s %2zu  %-42s %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
