#include "doctest.h"
#include "fixtures.hpp"

#include <sstream>

#include "okpack/bench.hpp"
#include "okpack/generators.hpp"
#include "okpack/io.hpp"

using namespace okpack;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

Graph parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

}  // namespace

TEST_CASE("edge list output is exact") {
  CHECK(to_edge_list(cycle(4)) == "4 4\n0 1\n1 2\n2 3\n0 3\n");
  CHECK(to_edge_list(Graph(0)) == "0 0\n");
  CHECK(to_edge_list(gk(2).graph).rfind("5 5\n", 0) == 0);
  // sparse ids are compacted
  Graph sub = cycle(6).without(VertexList{0});
  CHECK(to_edge_list(sub) == "5 4\n0 1\n1 2\n2 3\n3 4\n");
}

TEST_CASE("edge list round trip") {
  std::vector<Graph> graphs{Graph(0), Graph(3), cycle(5), complete(6), gk(5).graph, theta(2, 3, 4)};
  auto random = fixtures::random_graphs(50, 1, 30, 1701);
  graphs.insert(graphs.end(), random.begin(), random.end());
  for (const Graph& g : graphs) CHECK(parse(to_edge_list(g)) == g);
}

TEST_CASE("edge list parsing") {
  Graph g = parse("# comment\n3 2\n# another\n0 1\n\n1 2\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(parse("2 1\r\n0 1\r\n").size() == 1);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("3\n"), ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 1\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n-1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("3 1\n0 1 2\n"), ParseError);
  try {
    parse("3 2\n0 1\n0 1\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("dimacs import") {
  Graph g = parse_dimacs("c triangle\np edge 3 4\ne 1 2\ne 2 3\ne 3 1\ne 2 1\n");
  CHECK(g.order() == 3);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(0, 2));
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 1\n"), ParseError);
}

TEST_CASE("fvs json shape") {
  auto r = log_fvs(gk(6).graph);
  auto j = to_json(r);
  CHECK(j.size() == 4);
  CHECK(j.contains("fvs"));
  CHECK(j.contains("phases"));
  CHECK(j.contains("input_rank"));
  CHECK(j.contains("valid"));
  CHECK(j["phases"].contains("sparsify_removed"));
  CHECK(j["phases"].contains("greedy_steps"));
  CHECK(j["phases"].contains("fallback_removed"));
  CHECK(j["fvs"].get<VertexList>() == r.vertices);
}

TEST_CASE("csv output") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("two\nlines") == "\"two\nlines\"");

  auto rows = run_bench(gk_instances(4), FvsConfig{}, 2);
  REQUIRE(rows.size() == 4);
  std::ostringstream out;
  write_csv(out, rows);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "family,k,n,m,cycle_rank,girth,fvs_size,optimal_fvs,elapsed_ms,seed");
  std::vector<std::size_t> ns;
  while (std::getline(in, line)) {
    auto first = line.find(',');
    auto second = line.find(',', first + 1);
    auto third = line.find(',', second + 1);
    ns.push_back(std::stoul(line.substr(second + 1, third - second - 1)));
    CHECK(line.back() == ',');  // no seed for deterministic families
  }
  CHECK(ns == std::vector<std::size_t>{2, 5, 10, 19});
  CHECK(out.str().find('\r') == std::string::npos);
  for (const auto& r : rows) {
    CHECK(r.valid);
    CHECK(r.fvs_size >= *r.optimal_fvs);
  }
}

TEST_CASE("bench rows keep instance order across workers") {
  auto inst = forest_plus_instances({30, 10, 50, 20, 40}, 3, 5, 4);
  auto one = run_bench(inst, FvsConfig{}, 1);
  auto many = run_bench(inst, FvsConfig{}, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].n == inst[i].graph.order());
    CHECK(one[i].n == many[i].n);
    CHECK(one[i].fvs_size == many[i].fvs_size);
    CHECK(one[i].seed == many[i].seed);
    CHECK(one[i].k == 4);
  }
}
