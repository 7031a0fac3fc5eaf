#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "okpack/fvs.hpp"
#include "okpack/graph.hpp"
#include "okpack/types.hpp"

namespace okpack {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Edge list format: a header "n m", then m lines "u v" with 0 <= u < v < n.
// Lines starting with '#' are comments. Duplicate edges, a wrong edge count
// or malformed lines raise ParseError.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

// Writes the compacted graph: header, then edges in stored order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

// DIMACS "p edge N M" / "e u v" with 1-based ids; comment lines start with
// 'c'. Repeated edges are ignored.
Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

nlohmann::json to_json(const PackingWitness& w);
nlohmann::json to_json(const KttWitness& w);
// Keys: fvs, phases, input_rank, valid.
nlohmann::json to_json(const FvsResult& r);
// Colors of present vertices, in vertex order.
nlohmann::json coloring_json(const Graph& g, const ColoringAssignment& c);

}  // namespace okpack
