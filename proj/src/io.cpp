#include "okpack/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace okpack {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line) {
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || end != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + tok + "'");
  }
  return value;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    auto tok = split(line);
    if (tok.size() != 2) throw ParseError(lineno, "expected two integers");
    std::size_t a = parse_count(tok[0], lineno);
    std::size_t b = parse_count(tok[1], lineno);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a >= b) throw ParseError(lineno, "edge must satisfy u < v");
    if (b >= n) throw ParseError(lineno, "vertex id out of range");
    Edge e{static_cast<Vertex>(a), static_cast<Vertex>(b)};
    if (!seen.insert(e).second) throw ParseError(lineno, "duplicate edge");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(lineno, "missing header");
  if (edges.size() != m) {
    throw ParseError(lineno, "header announces " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  auto in = open(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  Graph c = g.compacted();
  out << c.order() << ' ' << c.size() << '\n';
  for (const Edge& e : c.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = split(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (tok.size() != 4 || n) throw ParseError(lineno, "malformed problem line");
      n = parse_count(tok[2], lineno);
    } else if (tok[0] == "e") {
      if (!n) throw ParseError(lineno, "edge before problem line");
      if (tok.size() != 3) throw ParseError(lineno, "malformed edge line");
      std::size_t a = parse_count(tok[1], lineno);
      std::size_t b = parse_count(tok[2], lineno);
      if (a == 0 || b == 0 || a > *n || b > *n) throw ParseError(lineno, "vertex id out of range");
      if (a == b) throw ParseError(lineno, "self-loop");
      edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
    } else {
      throw ParseError(lineno, "unknown line type '" + tok[0] + "'");
    }
  }
  if (!n) throw ParseError(lineno, "missing problem line");
  return Graph(*n, edges);
}

Graph read_dimacs_file(const std::string& path) {
  auto in = open(path);
  return read_dimacs(in);
}

nlohmann::json to_json(const PackingWitness& w) { return w.cycles; }

nlohmann::json to_json(const KttWitness& w) {
  return {{"left", w.left}, {"right", w.right}};
}

nlohmann::json to_json(const FvsResult& r) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : r.phases.greedy_steps) {
    steps.push_back({{"vertex", s.vertex},
                     {"degree", s.degree},
                     {"rank_before", s.rank_before},
                     {"rank_after", s.rank_after}});
  }
  return {{"fvs", r.vertices},
          {"phases",
           {{"sparsify_removed", r.phases.sparsify_removed},
            {"greedy_steps", steps},
            {"fallback_removed", r.phases.fallback_removed},
            {"fallback_heuristic", r.phases.fallback_heuristic}}},
          {"input_rank", r.input_rank},
          {"valid", r.valid}};
}

nlohmann::json coloring_json(const Graph& g, const ColoringAssignment& c) {
  nlohmann::json out = nlohmann::json::array();
  for (Vertex v : g.vertices()) out.push_back(c[v]);
  return out;
}

}  // namespace okpack
