#include "gromov/formats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>
#include <unordered_map>
#include <unordered_set>

namespace gromov {

namespace {

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0, number = 1;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<double> to_double(std::string_view s) {
  double v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || s.empty()) return std::nullopt;
  return v;
}

struct Cell {
  std::string_view text;
  std::size_t column;
};

std::vector<Cell> split_cells(std::string_view line) {
  std::vector<Cell> cells;
  std::size_t start = 0;
  while (true) {
    auto end = line.find(',', start);
    if (end == std::string_view::npos) end = line.size();
    auto raw = line.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < raw.size() && is_space(raw[lead])) ++lead;
    cells.push_back({trim(raw), start + lead + 1});
    if (end == line.size()) break;
    start = end + 1;
  }
  return cells;
}

std::vector<std::string_view> split_tokens(std::string_view line,
                                           std::vector<std::size_t>& columns) {
  std::vector<std::string_view> out;
  columns.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back(line.substr(start, i - start));
    columns.push_back(start + 1);
  }
  return out;
}

constexpr std::string_view kNewickReserved = "(),:;[]'\"";

bool newick_label_char(char c) {
  return !is_space(c) && kNewickReserved.find(c) == std::string_view::npos;
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  MetricTree parse() {
    skip_space();
    subtree(std::nullopt);
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("expected end of input after ';'");
    name_unlabeled();
    return MetricTree(std::move(labels_), std::move(edges_));
  }

 private:
  std::size_t subtree(std::optional<std::size_t> parent) {
    const std::size_t self = labels_.size();
    labels_.emplace_back();
    label_pos_.push_back(pos_);
    if (peek() == '(') {
      ++pos_;
      do {
        skip_space();
        subtree(self);
        skip_space();
      } while (accept(','));
      expect(')');
      skip_space();
      if (pos_ < text_.size() && newick_label_char(text_[pos_])) set_label(self, read_label());
    } else {
      if (pos_ >= text_.size() || !newick_label_char(text_[pos_])) fail("expected label or '('");
      set_label(self, read_label());
    }
    skip_space();
    double length = 1.0;
    if (accept(':')) {
      skip_space();
      const std::size_t at = pos_;
      std::size_t end = pos_;
      while (end < text_.size() && std::string_view("0123456789.eE+-").find(text_[end]) !=
                                       std::string_view::npos)
        ++end;
      const auto value = to_double(text_.substr(at, end - at));
      if (!value) fail("expected branch length");
      pos_ = end;
      if (!(*value > 0)) {
        const auto [line, col] = where(at);
        throw NonPositiveLength("branch length " + std::string(text_.substr(at, end - at)) +
                                " must be positive at line " + std::to_string(line) +
                                ", column " + std::to_string(col));
      }
      length = *value;
    }
    if (parent) edges_.push_back({*parent, self, length});
    return self;
  }

  std::string read_label() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && newick_label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void set_label(std::size_t node, std::string label) {
    if (!seen_.insert(label).second) {
      pos_ -= label.size();
      fail("duplicate label '" + label + "'");
    }
    labels_[node] = std::move(label);
  }

  void name_unlabeled() {
    for (std::size_t v = 0; v < labels_.size(); ++v) {
      if (!labels_[v].empty()) continue;
      std::string name = "_n" + std::to_string(v);
      while (seen_.count(name) != 0) name.insert(0, "_");
      seen_.insert(name);
      labels_[v] = std::move(name);
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::pair<std::size_t, std::size_t> where(std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return {line, col};
  }

  [[noreturn]] void fail(const std::string& what) const {
    const auto [line, col] = where(pos_);
    throw ParseError("newick: " + what, line, col);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::size_t> label_pos_;
  std::vector<MetricTree::Edge> edges_;
  std::unordered_set<std::string> seen_;
};

void newick_node(const MetricTree& tree, std::size_t v, std::size_t parent, double length,
                 std::string& out) {
  bool open = false;
  for (const auto& nb : tree.neighbors(v)) {
    if (nb.vertex == parent) continue;
    out += open ? ',' : '(';
    open = true;
    newick_node(tree, nb.vertex, v, nb.length, out);
  }
  if (open) out += ')';
  const auto& label = tree.label(v);
  if (label.empty() || !std::all_of(label.begin(), label.end(), newick_label_char))
    throw Error("label '" + label + "' cannot be written as unquoted Newick");
  out += label;
  if (parent != TreePoint::npos) {
    out += ':';
    out += format_length(length);
  }
}

}  // namespace

std::string format_length(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

MetricSpace parse_distance_csv(std::string_view text) {
  auto lines = split_lines(text);
  while (!lines.empty() && trim(lines.back().text).empty()) lines.pop_back();
  if (lines.empty()) throw ParseError("csv: empty input", 1, 1);

  std::vector<std::string> labels;
  std::unordered_set<std::string> seen;
  for (const auto& cell : split_cells(lines[0].text)) {
    if (cell.text.empty()) throw ParseError("csv: empty label", 1, cell.column);
    if (!seen.insert(std::string(cell.text)).second)
      throw ParseError("csv: duplicate label '" + std::string(cell.text) + "'", 1, cell.column);
    labels.emplace_back(cell.text);
  }
  const std::size_t n = labels.size();
  if (lines.size() - 1 != n)
    throw DimensionMismatch("csv: " + std::to_string(n) + " labels but " +
                            std::to_string(lines.size() - 1) + " rows");

  DistanceMatrix<double> m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto& line = lines[r + 1];
    const auto cells = split_cells(line.text);
    if (cells.size() != n)
      throw DimensionMismatch("csv: row at line " + std::to_string(line.number) + " has " +
                              std::to_string(cells.size()) + " values, expected " +
                              std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = to_double(cells[c].text);
      if (!v)
        throw ParseError("csv: expected a number, got '" + std::string(cells[c].text) + "'",
                         line.number, cells[c].column);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = *v;
    }
  }
  return MetricSpace(std::move(labels), std::move(m));
}

std::string emit_csv(const MetricSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i) out += ',';
    out += space.label(i);
  }
  out += '\n';
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = 0; j < space.size(); ++j) {
      if (j) out += ',';
      out += format_length(space(i, j));
    }
    out += '\n';
  }
  return out;
}

WeightedGraph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::size_t> index;
  std::vector<WeightedGraph::Edge> edges;
  std::unordered_set<std::uint64_t> pairs;
  auto vertex = [&](std::string_view name) {
    auto [it, inserted] = index.emplace(std::string(name), labels.size());
    if (inserted) labels.emplace_back(name);
    return it->second;
  };

  std::vector<std::size_t> cols;
  for (const auto& line : split_lines(text)) {
    auto body = line.text.substr(0, line.text.find('#'));
    const auto tokens = split_tokens(body, cols);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      vertex(tokens[0]);
      continue;
    }
    if (tokens.size() != 3)
      throw ParseError("edges: expected 'u v length', got " + std::to_string(tokens.size()) +
                           " fields",
                       line.number, cols[std::min<std::size_t>(tokens.size() - 1, 3)]);
    const auto len = to_double(tokens[2]);
    if (!len)
      throw ParseError("edges: expected a length, got '" + std::string(tokens[2]) + "'",
                       line.number, cols[2]);
    if (!(*len > 0))
      throw NonPositiveLength("edges: length " + std::string(tokens[2]) +
                              " must be positive at line " + std::to_string(line.number));
    if (tokens[0] == tokens[1])
      throw ParseError("edges: self-loop at '" + std::string(tokens[0]) + "'", line.number,
                       cols[1]);
    const auto u = vertex(tokens[0]);
    const auto v = vertex(tokens[1]);
    const auto key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) | std::max(u, v);
    if (!pairs.insert(key).second)
      throw ParseError("edges: repeated edge " + std::string(tokens[0]) + " " +
                           std::string(tokens[1]),
                       line.number, cols[0]);
    edges.push_back({u, v, *len});
  }
  return WeightedGraph(std::move(labels), std::move(edges));
}

std::string emit_edge_list(const WeightedGraph& graph) {
  std::string out;
  for (std::size_t v = 0; v < graph.size(); ++v)
    if (graph.neighbors(v).empty()) out += graph.label(v) + '\n';
  for (const auto& e : graph.edges())
    out += graph.label(e.u) + ' ' + graph.label(e.v) + ' ' + format_length(e.length) + '\n';
  return out;
}

std::string emit_edge_list(const MetricTree& tree) { return emit_edge_list(tree.to_graph()); }

MetricTree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

std::string emit_newick(const MetricTree& tree) {
  std::string out;
  newick_node(tree, 0, TreePoint::npos, 0.0, out);
  out += ";\n";
  return out;
}

}  // namespace gromov
