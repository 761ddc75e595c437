#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "gromov/formats.hpp"
#include "gromov/generators.hpp"
#include "gromov/geodesic_graph.hpp"
#include "gromov/hyperbolicity.hpp"
#include "gromov/metric_tree.hpp"
#include "gromov/tree_realization.hpp"

namespace gromov::cli {

namespace {

using json = nlohmann::ordered_json;

struct BadParams : Error {
  using Error::Error;
};

/// Exit with a given code after printing a message to stderr.
struct Exit {
  int code;
  std::string message;
};

enum class Format { kAuto, kCsv, kEdges, kNewick };

const std::map<std::string, Format> kFormats{
    {"csv", Format::kCsv}, {"edges", Format::kEdges}, {"newick", Format::kNewick}};

Format infer_format(const std::string& path, Format requested) {
  if (requested != Format::kAuto) return requested;
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".csv")) return Format::kCsv;
  if (ends_with(".nwk") || ends_with(".newick") || ends_with(".tre")) return Format::kNewick;
  if (ends_with(".edges") || ends_with(".txt")) return Format::kEdges;
  throw Exit{kInputError, "cannot infer input format of '" + path + "'; pass --format"};
}

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Exit{kInputError, "cannot read '" + path + "'"};
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Exit{kInputError, "cannot write '" + path + "'"};
  file << text;
}

using Input = std::variant<MetricSpace, WeightedGraph, MetricTree>;

Input load(const std::string& path, Format format, std::istream& in) {
  const auto text = read_input(path, in);
  switch (infer_format(path, format)) {
    case Format::kCsv: return parse_distance_csv(text);
    case Format::kNewick: return parse_newick(text);
    default: return parse_edge_list(text);
  }
}

std::string describe(const Disconnected& e, const std::vector<std::string>& labels) {
  std::string s = e.what();
  s += ":";
  for (const auto& comp : e.components()) {
    s += " {";
    for (std::size_t k = 0; k < comp.size(); ++k) s += (k ? " " : "") + labels[comp[k]];
    s += "}";
  }
  return s;
}

std::optional<GeodesicSpace> geodesic_of(const Input& input) {
  if (const auto* g = std::get_if<WeightedGraph>(&input)) {
    try {
      return GeodesicSpace(*g);
    } catch (const Disconnected& e) {
      throw Exit{kInputError, describe(e, g->labels())};
    }
  }
  if (const auto* t = std::get_if<MetricTree>(&input)) return GeodesicSpace(t->to_graph());
  return std::nullopt;
}

MetricSpace metric_of(const Input& input, const std::optional<GeodesicSpace>& geo) {
  if (geo) return geo->metric();
  const auto& space = std::get<MetricSpace>(input);
  const auto report = validate_metric(space);
  if (!report.passed()) {
    const auto& v = report.violations.front();
    std::string w;
    for (auto i : v.witness) w += " " + space.label(i);
    throw Exit{kInputError, std::string("input is not a metric: ") + axiom_name(v.axiom) +
                                " violated at" + w + " by " + format_length(v.magnitude)};
  }
  return space;
}

template <std::size_t N>
json labels_of(const MetricSpace& space, const std::array<std::size_t, N>& idx) {
  json a = json::array();
  for (auto i : idx) a.push_back(space.label(i));
  return a;
}

template <std::size_t N>
std::string joined(const MetricSpace& space, const std::array<std::size_t, N>& idx) {
  std::string s;
  for (std::size_t k = 0; k < N; ++k) s += (k ? " " : "") + space.label(idx[k]);
  return s;
}

json witness_json(const MetricSpace& space, const DeltaWitness<double>& w) {
  return {{"value", w.delta},
          {"witness", labels_of(space, w.quadruple)},
          {"witness_indices", w.quadruple}};
}

// ---------------------------------------------------------------- delta

struct DeltaArgs {
  std::string input;
  Format format = Format::kAuto;
  std::string def = "all";
  double resolution = 0.05;
  bool as_json = false;
  unsigned threads = 1;
  std::size_t probes = 3;
};

int cmd_delta(const DeltaArgs& a, std::istream& in, std::ostream& out) {
  const auto input = load(a.input, a.format, in);
  const auto geo = geodesic_of(input);
  const bool want_thin = a.def == "thin" || a.def == "all";
  if (a.def == "thin" && !geo)
    throw Exit{kInputError, "--def thin needs a graph or tree input (edges or newick)"};
  const auto space = metric_of(input, geo);
  const ScanOptions scan{a.threads};

  json report;
  report["input"] = a.input;
  report["n"] = space.size();
  std::vector<RelationCheck<double>> checks;
  std::ostringstream text;
  text << "input: " << a.input << "\npoints: " << space.size() << "\n";

  std::optional<DeltaWitness<double>> d4, d3;
  if (a.def == "all") {
    const auto r = equivalence_report(space, {a.threads, a.probes});
    d4 = r.delta_four_point;
    d3 = r.delta_gromov;
    checks = r.checks;
  } else if (a.def == "four-point") {
    d4 = delta_four_point(space, scan);
  } else if (a.def == "gromov") {
    d3 = delta_gromov(space, scan);
  }
  if (d4) {
    report["delta_four_point"] = witness_json(space, *d4);
    text << "delta_four_point: " << format_length(d4->delta)
         << "  witness: " << joined(space, d4->quadruple) << "\n";
  }
  if (d3) {
    report["delta_gromov"] = witness_json(space, *d3);
    text << "delta_gromov: " << format_length(d3->delta)
         << "  witness: " << joined(space, d3->quadruple) << "\n";
  }
  if (want_thin && geo) {
    ThinWitness<double> thin;
    if (a.def == "all") {
      const auto rel = thin_relations(*geo, a.resolution, *d3, scan);
      thin = rel.thin;
      checks.insert(checks.end(), rel.checks.begin(), rel.checks.end());
    } else {
      thin = delta_thin(*geo, a.resolution, scan);
    }
    report["delta_thin"] = {{"value", thin.delta},
                            {"witness", labels_of(space, thin.triple)},
                            {"witness_indices", thin.triple},
                            {"offset", thin.offset},
                            {"resolution", thin.resolution}};
    text << "delta_thin: " << format_length(thin.delta) << "  (resolution "
         << format_length(thin.resolution) << ")  witness: side " << space.label(thin.triple[0])
         << "-" << space.label(thin.triple[1]) << " of triangle " << joined(space, thin.triple)
         << " at offset " << format_length(thin.offset) << "\n";
  }
  const double diam = diameter(space);
  report["diameter"] = diam;
  text << "diameter: " << format_length(diam) << "\n";

  bool ok = true;
  json jc = json::array();
  for (const auto& c : checks) {
    ok = ok && c.holds;
    jc.push_back({{"name", c.name}, {"holds", c.holds}, {"slack", c.slack}});
    text << "check " << c.name << ": " << (c.holds ? "holds" : "FAILS") << " (slack "
         << format_length(c.slack) << ")\n";
  }
  report["checks"] = jc;

  if (a.as_json)
    out << report.dump(2) << "\n";
  else
    out << text.str();
  return ok ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------- check-tree

int cmd_check_tree(const std::string& path, Format format, double tol, unsigned threads,
                   std::istream& in, std::ostream& out) {
  const auto input = load(path, format, in);
  if (const auto* g = std::get_if<WeightedGraph>(&input)) {
    const auto comps = g->components();
    if (comps.size() > 1) {
      out << "connected: no (" << comps.size() << " components)\nverdict: not tree-metric\n";
      return kPrecondition;
    }
  }
  out << "connected: yes\n";
  const auto space = metric_of(input, geodesic_of(input));
  const auto w = delta_four_point(space, {threads});
  if (w.delta <= tol) {
    out << "verdict: tree-metric\n";
    return kOk;
  }
  out << "verdict: not tree-metric\ndelta_four_point: " << format_length(w.delta)
      << "\nwitness: " << joined(space, w.quadruple) << "\n";
  return kPrecondition;
}

// ---------------------------------------------------------------- realize

int cmd_realize(const std::string& path, Format format, const std::string& out_format,
                const std::string& out_path, double tol, std::istream& in, std::ostream& out,
                std::ostream& err) {
  const auto input = load(path, format, in);
  const auto space = metric_of(input, geodesic_of(input));
  MetricTree tree = [&] {
    try {
      return realize_tree(space, {tol});
    } catch (const NotZeroHyperbolic& e) {
      throw Exit{kPrecondition, std::string(e.what())};
    }
  }();
  const double error = verify_embedding(tree, space);
  const auto text = out_format == "edges" ? emit_edge_list(tree) : emit_newick(tree);
  write_output(out_path, text, out);
  (out_path.empty() || out_path == "-" ? err : out)
      << "max embedding error: " << format_length(error) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- gen

std::size_t count_param(const std::vector<std::string>& p, std::size_t k, const char* what) {
  if (k >= p.size()) throw BadParams(std::string("missing parameter: ") + what);
  std::size_t v = 0;
  const auto& s = p[k];
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw BadParams(std::string("expected a count for ") + what + ", got '" + s + "'");
  return v;
}

struct GenArgs {
  std::string kind;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::string out_path;
  std::string out_format = "edges";
  double length = 1.0;
  double min_length = 0.5;
  double max_length = 2.0;
  double radius = 0.95;
  double scale = 0.125;
};

int cmd_gen(const GenArgs& a, std::ostream& out) {
  std::string text;
  const auto& p = a.params;
  if (a.kind == "cycle") {
    text = emit_edge_list(cycle_graph(count_param(p, 0, "n"), a.length));
  } else if (a.kind == "tree") {
    const auto g = random_tree(count_param(p, 0, "n"), a.seed, a.min_length, a.max_length);
    text = a.out_format == "newick" ? emit_newick(MetricTree::from_graph(g)) : emit_edge_list(g);
  } else if (a.kind == "grid") {
    text = emit_edge_list(grid_graph(count_param(p, 0, "width"), count_param(p, 1, "height")));
  } else if (a.kind == "radial") {
    text = emit_csv(radial_space(sample_radial_points(count_param(p, 0, "n"), a.seed)));
  } else if (a.kind == "poincare") {
    text = emit_csv(poincare_space(sample_disk_points(count_param(p, 0, "n"), a.seed, a.radius)));
  } else if (a.kind == "filling") {
    const auto levels = count_param(p, 0, "levels");
    text = emit_csv(
        ultrametric_filling(dyadic_ball_family(static_cast<unsigned>(levels), a.scale)).space);
  } else {
    throw BadParams("unknown generator '" + a.kind + "'");
  }
  write_output(a.out_path, text, out);
  return kOk;
}

// ---------------------------------------------------------------- project

struct ProjectArgs {
  std::string input;
  Format format = Format::kAuto;
  std::string point;
  std::vector<std::string> on_edge;
  double offset = 0;
  std::string from, to;
};

std::string describe(const MetricTree& tree, const TreePoint& p) {
  if (p.is_vertex()) return tree.label(p.vertex);
  const auto& e = tree.edge(p.edge);
  return "edge " + tree.label(e.u) + "-" + tree.label(e.v) + " at offset " +
         format_length(p.offset) + " from " + tree.label(e.u);
}

int cmd_project(const ProjectArgs& a, std::istream& in, std::ostream& out) {
  const auto input = load(a.input, a.format, in);
  std::optional<MetricTree> tree;
  if (const auto* t = std::get_if<MetricTree>(&input)) tree = *t;
  if (const auto* g = std::get_if<WeightedGraph>(&input)) tree = MetricTree::from_graph(*g);
  if (!tree) throw Exit{kInputError, "project needs a tree input (newick or edges)"};

  auto vertex = [&](const std::string& label) {
    const auto v = tree->find(label);
    if (!v) throw BadParams("no vertex labeled '" + label + "'");
    return *v;
  };
  TreePoint p;
  if (!a.on_edge.empty()) {
    const auto u = vertex(a.on_edge[0]), v = vertex(a.on_edge[1]);
    std::optional<std::size_t> edge;
    for (const auto& nb : tree->neighbors(u))
      if (nb.vertex == v) edge = nb.edge;
    if (!edge) throw BadParams("no edge between '" + a.on_edge[0] + "' and '" + a.on_edge[1] + "'");
    const double off = tree->edge(*edge).u == u ? a.offset : tree->edge(*edge).length - a.offset;
    p = tree_point(*tree, *edge, off);
  } else if (!a.point.empty()) {
    p = TreePoint::at_vertex(vertex(a.point));
  } else {
    throw BadParams("pass --point or --on-edge");
  }
  const auto proj = project_onto_segment(*tree, p, vertex(a.from), vertex(a.to));
  out << "projection: " << describe(*tree, proj) << "\n"
      << "distance: " << format_length(tree_distance(*tree, p, proj)) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gromov hyperbolicity and metric-tree toolkit", "gromov"};
  app.require_subcommand(1);
  app.fallthrough();

  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for quadruple scans")
      ->check(CLI::Range(1u, 1024u));

  DeltaArgs delta;
  auto* sd = app.add_subcommand("delta", "Hyperbolicity constants and relation checks");
  sd->add_option("input", delta.input, "Input file, or - for stdin")->required();
  sd->add_option("--format", delta.format)->transform(CLI::CheckedTransformer(kFormats));
  sd->add_option("--def", delta.def)
      ->check(CLI::IsMember({"gromov", "four-point", "thin", "all"}));
  sd->add_option("--resolution", delta.resolution)->check(CLI::PositiveNumber);
  sd->add_option("--probes", delta.probes, "Leave-one-out subspaces checked under --def all");
  sd->add_flag("--json", delta.as_json);

  std::string tree_input;
  Format tree_format = Format::kAuto;
  double tol = 1e-7;
  auto* sc = app.add_subcommand("check-tree", "Decide whether the input is a tree metric");
  sc->add_option("input", tree_input)->required();
  sc->add_option("--format", tree_format)->transform(CLI::CheckedTransformer(kFormats));
  sc->add_option("--tol", tol)->check(CLI::NonNegativeNumber);

  std::string realize_input, realize_out, realize_out_format = "newick";
  Format realize_format = Format::kAuto;
  auto* sr = app.add_subcommand("realize", "Realize a 0-hyperbolic metric as a weighted tree");
  sr->add_option("input", realize_input)->required();
  sr->add_option("--format", realize_format)->transform(CLI::CheckedTransformer(kFormats));
  sr->add_option("--out", realize_out_format)->check(CLI::IsMember({"newick", "edges"}));
  sr->add_option("-o,--output", realize_out);
  sr->add_option("--tol", tol)->check(CLI::NonNegativeNumber);

  GenArgs gen;
  auto* sg = app.add_subcommand("gen", "Generate example spaces");
  sg->add_option("kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"radial", "poincare", "cycle", "tree", "grid", "filling"}));
  sg->add_option("params", gen.params, "Sizes: n, or width height for grid, levels for filling");
  sg->add_option("--seed", gen.seed);
  sg->add_option("-o,--output", gen.out_path);
  sg->add_option("--out", gen.out_format)->check(CLI::IsMember({"newick", "edges"}));
  sg->add_option("--length", gen.length)->check(CLI::PositiveNumber);
  sg->add_option("--min-length", gen.min_length)->check(CLI::PositiveNumber);
  sg->add_option("--max-length", gen.max_length)->check(CLI::PositiveNumber);
  sg->add_option("--radius", gen.radius)->check(CLI::PositiveNumber);
  sg->add_option("--scale", gen.scale)->check(CLI::PositiveNumber);

  ProjectArgs proj;
  auto* sp = app.add_subcommand("project", "Nearest point of a tree segment");
  sp->add_option("input", proj.input)->required();
  sp->add_option("--format", proj.format)->transform(CLI::CheckedTransformer(kFormats));
  auto* point_opt = sp->add_option("--point", proj.point, "Vertex label");
  sp->add_option("--on-edge", proj.on_edge, "Edge endpoints u v; use with --offset")
      ->expected(2)
      ->excludes(point_opt);
  sp->add_option("--offset", proj.offset, "Distance from u along the edge");
  sp->add_option("--from", proj.from)->required();
  sp->add_option("--to", proj.to)->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  delta.threads = threads;

  try {
    if (*sd) return cmd_delta(delta, in, out);
    if (*sc) return cmd_check_tree(tree_input, tree_format, tol, threads, in, out);
    if (*sr)
      return cmd_realize(realize_input, realize_format, realize_out_format, realize_out, tol, in,
                         out, err);
    if (*sg) return cmd_gen(gen, out);
    if (*sp) return cmd_project(proj, in, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace gromov::cli
