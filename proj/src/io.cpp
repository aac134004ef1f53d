#include "hudn/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace hudn {

std::string format_double(double value) {
  char buf[40];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) break;
  }
  return buf;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // A trailing newline produces one empty terminal segment, not a line.
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

long parse_long(const std::string& tok, const std::string& context) {
  char* end = nullptr;
  long v = std::strtol(tok.c_str(), &end, 10);
  if (end == tok.c_str() || *end != '\0') {
    throw std::runtime_error(context + ": expected integer, got '" + tok + "'");
  }
  return v;
}

double parse_double(const std::string& tok, const std::string& context) {
  char* end = nullptr;
  double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0') {
    throw std::runtime_error(context + ": expected number, got '" + tok + "'");
  }
  return v;
}

std::string line_label(size_t i) { return "line " + std::to_string(i + 1); }

std::vector<VertexId> parse_edge_line(const std::string& line, size_t line_no) {
  std::vector<VertexId> edge;
  for (const auto& tok : tokenize(line)) {
    edge.push_back(static_cast<VertexId>(parse_long(tok, line_label(line_no))));
  }
  return edge;
}

}  // namespace

std::string write_hypergraph_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const auto& edge : h.edges()) {
    for (size_t i = 0; i < edge.size(); ++i) {
      if (i) out << ' ';
      out << edge[i];
    }
    out << '\n';
  }
  return out.str();
}

Hypergraph read_hypergraph_text(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw std::runtime_error("hypergraph text: empty input");
  auto header = tokenize(lines[0]);
  if (header.size() != 2) throw std::runtime_error("hypergraph text: header must be 'n m'");
  long n = parse_long(header[0], "header");
  long m = parse_long(header[1], "header");
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw std::runtime_error("hypergraph text: expected " + std::to_string(m) +
                             " edge lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<VertexId>> edges;
  edges.reserve(m);
  for (long j = 0; j < m; ++j) {
    edges.push_back(parse_edge_line(lines[1 + j], 1 + j));
  }
  return Hypergraph(static_cast<int>(n), std::move(edges));
}

std::string write_uniform_text(const UniformWeightedHypergraph& g) {
  std::ostringstream out;
  out << g.rank();
  for (int s : g.part_sizes()) out << ' ' << s;
  out << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) {
    for (int v : e.vertices) out << v << ' ';
    out << format_double(e.weight) << '\n';
  }
  return out.str();
}

UniformWeightedHypergraph read_uniform_text(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw std::runtime_error("uniform text: empty input");
  auto header = tokenize(lines[0]);
  if (header.size() < 2) throw std::runtime_error("uniform text: truncated header");
  long r = parse_long(header[0], "header");
  if (r < 2 || static_cast<long>(header.size()) != r + 2) {
    throw std::runtime_error("uniform text: header must be 'r s1 ... sr m'");
  }
  std::vector<int> part_sizes;
  for (long p = 0; p < r; ++p) {
    part_sizes.push_back(static_cast<int>(parse_long(header[1 + p], "header")));
  }
  long m = parse_long(header[r + 1], "header");
  if (static_cast<long>(lines.size()) - 1 != m) {
    throw std::runtime_error("uniform text: expected " + std::to_string(m) +
                             " edge lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<UniformEdge> edges;
  edges.reserve(m);
  for (long j = 0; j < m; ++j) {
    auto toks = tokenize(lines[1 + j]);
    if (static_cast<long>(toks.size()) != r + 1) {
      throw std::runtime_error(line_label(1 + j) + ": expected " + std::to_string(r) +
                               " vertices and a weight");
    }
    UniformEdge e;
    for (long p = 0; p < r; ++p) {
      e.vertices.push_back(static_cast<int>(parse_long(toks[p], line_label(1 + j))));
    }
    e.weight = parse_double(toks[r], line_label(1 + j));
    edges.push_back(std::move(e));
  }
  return UniformWeightedHypergraph(std::move(part_sizes), std::move(edges));
}

std::string write_coloring_text(const ColoringInstance& inst) {
  std::ostringstream out;
  out << inst.hypergraph.vertex_count() << ' ' << inst.hypergraph.edge_count() << ' '
      << inst.num_colors << ' ' << inst.hard_pairs.size() << '\n';
  for (const auto& edge : inst.hypergraph.edges()) {
    for (size_t i = 0; i < edge.size(); ++i) {
      if (i) out << ' ';
      out << edge[i];
    }
    out << '\n';
  }
  for (auto [a, b] : inst.hard_pairs) out << a << ' ' << b << '\n';
  return out.str();
}

ColoringInstance read_coloring_text(const std::string& text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw std::runtime_error("coloring text: empty input");
  auto header = tokenize(lines[0]);
  if (header.size() != 4) throw std::runtime_error("coloring text: header must be 'n m K H'");
  long n = parse_long(header[0], "header");
  long m = parse_long(header[1], "header");
  long k = parse_long(header[2], "header");
  long hp = parse_long(header[3], "header");
  if (static_cast<long>(lines.size()) - 1 != m + hp) {
    throw std::runtime_error("coloring text: line count does not match header");
  }
  std::vector<std::vector<VertexId>> edges;
  for (long j = 0; j < m; ++j) {
    edges.push_back(parse_edge_line(lines[1 + j], 1 + j));
  }
  std::vector<std::pair<VertexId, VertexId>> hard_pairs;
  for (long j = 0; j < hp; ++j) {
    auto toks = tokenize(lines[1 + m + j]);
    if (toks.size() != 2) {
      throw std::runtime_error(line_label(1 + m + j) + ": hard pair needs two vertices");
    }
    hard_pairs.emplace_back(static_cast<int>(parse_long(toks[0], "hard pair")),
                            static_cast<int>(parse_long(toks[1], "hard pair")));
  }
  return make_coloring_instance(Hypergraph(static_cast<int>(n), std::move(edges)),
                                static_cast<int>(k), std::move(hard_pairs));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace hudn
