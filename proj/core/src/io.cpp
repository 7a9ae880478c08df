#include "hypercop/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "hypercop/error.hpp"

namespace hypercop {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint64_t parse_number(std::string_view word, std::size_t line_no, const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(word) + "'");
  }
  return v;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    f(line_no, line);
  }
}

void check_simple(std::size_t n, const std::vector<Edge>& edges, const std::vector<std::size_t>& lines,
                  const std::vector<std::uint64_t>& labels) {
  std::vector<std::pair<Edge, std::size_t>> keyed;
  keyed.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u == v) throw ParseError(lines[i], "self-loop at vertex " + std::to_string(labels[u]));
    keyed.push_back({{std::min(u, v), std::max(u, v)}, lines[i]});
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i - 1].first) {
      throw ParseError(keyed[i].second, "duplicate edge " + std::to_string(labels[keyed[i].first.first]) + " " +
                                            std::to_string(labels[keyed[i].first.second]));
    }
  }
  (void)n;
}

Graph parse_edgelist(std::string_view text) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::vector<std::size_t> lines;
  std::vector<std::uint64_t> labels;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = line.substr(0, line.find('#'));
    auto words = split_words(line);
    if (words.empty()) return;
    if (words.size() > 2) throw ParseError(line_no, "expected \"u v\", got " + std::to_string(words.size()) + " fields");
    auto u = parse_number(words[0], line_no, "vertex label");
    labels.push_back(u);
    if (words.size() == 2) {
      auto v = parse_number(words[1], line_no, "vertex label");
      labels.push_back(v);
      raw.emplace_back(u, v);
      lines.push_back(line_no);
    }
  });
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw Error("graph has no vertices");
  auto id = [&](std::uint64_t label) {
    return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (auto [u, v] : raw) edges.emplace_back(id(u), id(v));
  check_simple(labels.size(), edges, lines, labels);
  return Graph::from_edges(labels.size(), edges, labels);
}

Graph parse_dimacs(std::string_view text) {
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::vector<Edge> edges;
  std::vector<std::size_t> lines;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto words = split_words(line);
    if (words.empty() || words[0] == "c") return;
    if (words[0] == "p") {
      if (header) throw ParseError(line_no, "second \"p\" header");
      if (words.size() != 4 || (words[1] != "edge" && words[1] != "col")) {
        throw ParseError(line_no, "expected \"p edge n m\"");
      }
      auto n = parse_number(words[2], line_no, "vertex count");
      auto m = parse_number(words[3], line_no, "edge count");
      if (n > (std::uint64_t{1} << 31)) throw ParseError(line_no, "vertex count too large");
      header = {n, m};
      return;
    }
    if (words[0] == "e") {
      if (!header) throw ParseError(line_no, "edge before \"p edge n m\" header");
      if (words.size() != 3) throw ParseError(line_no, "expected \"e u v\"");
      auto u = parse_number(words[1], line_no, "vertex");
      auto v = parse_number(words[2], line_no, "vertex");
      if (u < 1 || v < 1 || u > header->first || v > header->first) {
        throw ParseError(line_no, "vertex out of range 1.." + std::to_string(header->first));
      }
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
      lines.push_back(line_no);
      return;
    }
    throw ParseError(line_no, "unknown line type '" + std::string(words[0]) + "'");
  });
  if (!header) throw Error("missing \"p edge n m\" header");
  if (edges.size() != header->second) {
    throw Error("header announces " + std::to_string(header->second) + " edges, found " +
                std::to_string(edges.size()));
  }
  std::vector<std::uint64_t> labels(header->first);
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = i + 1;
  check_simple(labels.size(), edges, lines, labels);
  return Graph::from_edges(labels.size(), edges, labels);
}

}  // namespace

GraphFormat parse_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  throw Error("unknown graph format '" + name + "' (edgelist, dimacs)");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::EdgeList ? parse_edgelist(text) : parse_dimacs(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::string& path, GraphFormat format) { return parse_graph(read_file(path), format); }

std::string emit_edgelist(const Graph& g) {
  std::string out;
  if (g.size() == 1) return std::to_string(g.label(0)) + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(g.label(u));
    out += ' ';
    out += std::to_string(g.label(v));
    out += '\n';
  }
  return out;
}

std::string emit_dimacs(const Graph& g) {
  auto edges = g.edges();
  std::string out = "p edge " + std::to_string(g.size()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace hypercop
