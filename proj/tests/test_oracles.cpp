#include "doctest.h"
#include "fixtures.hpp"

#include "okpack/errors.hpp"
#include "okpack/generators.hpp"
#include "okpack/oracles.hpp"

using namespace okpack;
using namespace okpack::oracles;

TEST_CASE("brute_mis") {
  CHECK(brute_mis(cycle(5)).size() == 2);
  CHECK(brute_mis(complete(5)).size() == 1);
  CHECK(brute_mis(complete_bipartite(2, 3)) == VertexList{2, 3, 4});
  CHECK(brute_mis(Graph(0)).empty());
  CHECK_THROWS_AS(brute_mis(path(kMisLimit + 1)), TooLarge);
}

TEST_CASE("brute_3color") {
  auto c4 = brute_3color(cycle(4));
  REQUIRE(c4);
  CHECK(c4->distinct_colors() <= 2);
  CHECK_FALSE(brute_3color(complete(4)));
  auto lists = ListAssignment::uniform(5, 2);
  CHECK_FALSE(brute_3color(cycle(5), &lists));
  CHECK(brute_chromatic_number(cycle(5)) == 3);
  CHECK(brute_chromatic_number(complete(5)) == 5);
  CHECK(brute_chromatic_number(Graph(3)) == 1);
}

TEST_CASE("brute_fvs") {
  CHECK(brute_fvs(path(6)).empty());
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(brute_fvs(two).size() == 2);
  CHECK(brute_fvs(gk(4).graph).size() == 3);
}

TEST_CASE("brute_treewidth") {
  CHECK(brute_treewidth(path(5)) == 1);
  CHECK(brute_treewidth(cycle(6)) == 2);
  CHECK(brute_treewidth(complete(5)) == 4);
  CHECK(brute_treewidth(gk(3).graph) == 3);
}

TEST_CASE("verify_minor") {
  MinorCertificate k2{{{0}, {1}}, complete(2)};
  CHECK(verify_minor(complete(2), k2));
  MinorCertificate opposite{{{0}, {2}}, complete(2)};
  CHECK_FALSE(verify_minor(cycle(4), opposite));
  MinorCertificate overlapping{{{0, 1}, {1, 2}}, complete(2)};
  CHECK_FALSE(verify_minor(cycle(4), overlapping));
  MinorCertificate disconnected{{{0, 2}, {1}}, complete(2)};
  CHECK_FALSE(verify_minor(cycle(4), disconnected));
  CHECK(verify_minor(gk(6).graph, gk_minor_certificate(6)));
}

TEST_CASE("brute_independent_cycles") {
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  auto w = brute_independent_cycles(two, 2);
  REQUIRE(w);
  CHECK(is_packing(two, *w, true));
  CHECK_FALSE(brute_independent_cycles(gk(3).graph, 2));
  CHECK_FALSE(brute_independent_cycles(cycle(6), 2));
}

TEST_CASE("oracle self-consistency") {
  for (const Graph& g : fixtures::random_graphs(120, 1, 11, 303)) {
    auto mis = brute_mis(g);
    auto vc = brute_vertex_cover(g);
    CHECK(is_independent_set(g, mis));
    CHECK(is_vertex_cover(g, vc));
    CHECK(mis.size() + vc.size() == g.order());
    auto fvs = brute_fvs(g);
    CHECK(brute_treewidth(g) <= static_cast<int>(fvs.size()) + 1);
  }
}
