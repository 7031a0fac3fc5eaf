#include "doctest.h"
#include "fixtures.hpp"

#include <set>

#include "okpack/branching.hpp"
#include "okpack/errors.hpp"
#include "okpack/generators.hpp"
#include "okpack/oracles.hpp"

using namespace okpack;

namespace {

Graph two_squares() { return disjoint_union(cycle(4), cycle(4)); }

// All 4-vertex sets spanning a 4-cycle, by checking the three pairings.
std::set<VertexList> four_sets(const Graph& g) {
  std::set<VertexList> out;
  VertexList vs = g.vertices();
  std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          Vertex w[4] = {vs[a], vs[b], vs[c], vs[d]};
          auto cyc = [&](int i, int j, int k, int l) {
            return g.has_edge(w[i], w[j]) && g.has_edge(w[j], w[k]) && g.has_edge(w[k], w[l]) &&
                   g.has_edge(w[l], w[i]);
          };
          if (cyc(0, 1, 2, 3) || cyc(0, 1, 3, 2) || cyc(0, 2, 1, 3)) out.insert({w[0], w[1], w[2], w[3]});
        }
  return out;
}

}  // namespace

TEST_CASE("four_cycles lists each spanning set once") {
  for (const Graph& g : fixtures::random_graphs(80, 4, 10, 1401)) {
    auto cycles = four_cycles(g);
    std::set<VertexList> sets;
    for (const auto& c : cycles) {
      CHECK(is_cycle_of(g, c));
      VertexList s = c;
      std::sort(s.begin(), s.end());
      CHECK(sets.insert(s).second);
    }
    CHECK(sets == four_sets(g));
  }
}

TEST_CASE("max_independent_c4_packing") {
  Graph tri_forest(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}});
  CHECK(max_independent_c4_packing(tri_forest, 1000).q == 0);
  auto two = max_independent_c4_packing(two_squares(), 1000);
  CHECK(two.q == 2);
  CHECK(is_packing(two_squares(), two.witness, true));
  CHECK(max_independent_c4_packing(complete_bipartite(2, 3), 1000).q == 1);
  // two squares joined by an edge are not independent
  Graph joined(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {3, 4}});
  CHECK(max_independent_c4_packing(joined, 1000).q == 1);
}

TEST_CASE("enumerate_c4_packings") {
  auto s2 = enumerate_c4_packings(two_squares(), 2, 1000);
  CHECK(s2 == std::vector<VertexList>{{0, 1, 2, 3, 4, 5, 6, 7}});
  CHECK(enumerate_c4_packings(cycle(4), 1, 1000).size() == 1);
  auto c4c6 = disjoint_union(cycle(4), cycle(6));
  CHECK(enumerate_c4_packings(c4c6, 1, 1000) == std::vector<VertexList>{{0, 1, 2, 3}});
  CHECK(enumerate_c4_packings(complete_bipartite(2, 3), 1, 1000).size() == 3);
  CHECK_THROWS_AS(enumerate_c4_packings(cycle(4), 0, 1000), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_c4_packings(complete(9), 1, 5), BudgetExceeded);
}

TEST_CASE("qmis small cases") {
  CHECK(qmis(path(4)).vertices.size() == 2);
  auto two = qmis(two_squares());
  CHECK(two.vertices.size() == 4);
  CHECK(two.stats.nodes_expanded > 1);
  CHECK(two.stats.base_case_calls >= 1);
  auto fp = forest_plus_edges(16, 2, 3, 11).graph;
  CHECK(qmis(fp).vertices.size() == oracles::brute_mis(fp).size());
  CHECK(qmis(Graph(0)).vertices.empty());
}

TEST_CASE("qmis refuses roots above max_q") {
  Graph four = disjoint_union(two_squares(), two_squares());
  BranchConfig cfg;
  cfg.max_q = 3;
  CHECK_THROWS_AS(qmis(four, cfg), BudgetExceeded);
  cfg.max_q = 4;
  CHECK(qmis(four, cfg).vertices.size() == 8);
  BranchConfig tiny;
  tiny.node_budget = 2;
  CHECK_THROWS_AS(qmis(two_squares(), tiny), BudgetExceeded);
}

TEST_CASE("qmis matches brute force") {
  auto inputs = fixtures::sparse_graphs(60, 8, 18, 6, 1501);
  auto dense = fixtures::random_graphs(60, 4, 12, 1502);
  inputs.insert(inputs.end(), dense.begin(), dense.end());
  for (const Graph& g : inputs) {
    BranchConfig cfg;
    cfg.max_q = 10;
    auto r = qmis(g, cfg);
    CHECK(is_independent_set(g, r.vertices));
    CHECK(r.vertices.size() == oracles::brute_mis(g).size());
  }
}

TEST_CASE("list3color small cases") {
  auto all3 = ListAssignment::uniform(5, 3);
  auto c5 = list3color(cycle(5), all3);
  REQUIRE(c5.coloring);
  CHECK(is_proper_coloring(cycle(5), *c5.coloring, &all3));
  CHECK_FALSE(list3color(cycle(5), ListAssignment::uniform(5, 2)).coloring);
  CHECK_FALSE(list3color(complete(4), ListAssignment::uniform(4, 3)).coloring);
  ListAssignment bad = ListAssignment::uniform(3, 4);
  CHECK_THROWS_AS(list3color(cycle(3), bad), std::invalid_argument);
  ListAssignment empty_list = ListAssignment::uniform(4, 3);
  empty_list[2] = 0;
  CHECK_FALSE(list3color(cycle(4), empty_list).coloring);
}

TEST_CASE("three_coloring") {
  auto bip = three_coloring(complete_bipartite(3, 4));
  REQUIRE(bip.coloring);
  CHECK(bip.coloring->distinct_colors() <= 2);
  auto c7 = three_coloring(cycle(7));
  REQUIRE(c7.coloring);
  CHECK(is_proper_coloring(cycle(7), *c7.coloring));
  auto g4 = gk(4).graph;
  CHECK(three_coloring(g4).coloring.has_value() == oracles::brute_3color(g4).has_value());
  CHECK_FALSE(three_coloring(complete(4)).coloring);
}

TEST_CASE("list3color matches brute force") {
  std::mt19937_64 rng(1601);
  auto inputs = fixtures::random_graphs(80, 4, 12, 1602);
  auto sparse = fixtures::sparse_graphs(40, 6, 14, 6, 1603);
  inputs.insert(inputs.end(), sparse.begin(), sparse.end());
  for (const Graph& g : inputs) {
    ListAssignment lists{std::vector<ColorSet>(g.id_bound())};
    for (auto& l : lists.lists) l = static_cast<ColorSet>(1 + rng() % 7) << 1;
    BranchConfig cfg;
    cfg.max_q = 10;
    auto got = list3color(g, lists, cfg);
    CHECK(got.coloring.has_value() == oracles::brute_3color(g, &lists).has_value());
    if (got.coloring) CHECK(is_proper_coloring(g, *got.coloring, &lists));
  }
}
