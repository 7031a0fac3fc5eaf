#include "doctest.h"
#include "fixtures.hpp"

#include <map>

#include "okpack/detectors.hpp"
#include "okpack/generators.hpp"
#include "okpack/oracles.hpp"

using namespace okpack;

TEST_CASE("word_w small cases") {
  CHECK(word_w(1) == std::vector<int>{1});
  CHECK(word_w(2) == std::vector<int>{2, 1, 2});
  CHECK(word_w(3) == std::vector<int>{3, 2, 3, 1, 3, 2, 3});
  CHECK_THROWS_AS(word_w(0), std::invalid_argument);
  CHECK_THROWS_AS(word_w(21), std::invalid_argument);
}

TEST_CASE("word_w recurrence agrees with the valuation form") {
  for (int k = 1; k <= 16; ++k) {
    auto w = word_w(k);
    CHECK(w == word_w_by_valuation(k));
    CHECK(w.size() == (std::size_t{1} << k) - 1);
    std::map<int, std::size_t> freq;
    for (int l : w) ++freq[l];
    for (int i = 1; i <= k; ++i) CHECK(freq[i] == (std::size_t{1} << (i - 1)));
  }
}

TEST_CASE("gk sizes") {
  for (int k = 1; k <= 16; ++k) {
    auto g = gk(k).graph;
    CHECK(g.order() == (std::size_t{1} << k) + k - 1);
    CHECK(g.size() == (std::size_t{1} << (k + 1)) - 3);
  }
  auto g1 = gk(1).graph;
  CHECK(fixtures::edge_set(g1) == fixtures::edge_set(complete(2)));
  auto g2 = gk(2).graph;
  CHECK(g2.order() == 5);
  CHECK(g2.size() == 5);
}

TEST_CASE("gk star structure") {
  for (int k = 1; k <= 8; ++k) {
    auto [g, labels] = gk(k);
    std::vector<char> is_star(g.id_bound(), 0);
    for (Vertex s : labels.star_ids) is_star[s] = 1;
    for (std::size_t l = 0; l < labels.path_ids.size(); ++l) {
      Vertex p = labels.path_ids[l];
      std::size_t stars = 0;
      for (Vertex w : g.neighbors(p)) {
        if (is_star[w]) {
          ++stars;
          CHECK(w == labels.star_ids[labels.word[l] - 1]);
        }
      }
      CHECK(stars == 1);
    }
    // star neighbourhoods are disjoint and stars pairwise non-adjacent
    std::vector<int> owner(g.id_bound(), -1);
    for (Vertex s : labels.star_ids) {
      for (Vertex w : g.neighbors(s)) {
        CHECK_FALSE(is_star[w]);
        CHECK(owner[w] == -1);
        owner[w] = s;
      }
    }
  }
  // k = 5: the figure's structure, label 1 once and label 5 sixteen times
  auto [g5, l5] = gk(5);
  CHECK(g5.order() == 36);
  CHECK(g5.degree(l5.star_ids[0]) == 1);
  CHECK(g5.degree(l5.star_ids[4]) == 16);
}

TEST_CASE("gk FVS certificate") {
  CHECK(gk_fvs_certificate(2).size() == 1);
  CHECK(gk_fvs_certificate(3).size() == 2);
  CHECK(gk_fvs_certificate(5).size() == 4);
  CHECK(gk_fvs_certificate(2) == VertexList{gk(2).labels.star_ids[1]});
  for (int k = 2; k <= 12; ++k) {
    auto g = gk(k).graph;
    CHECK(cycle_rank(g.without(gk_fvs_certificate(k))) == 0);
  }
  CHECK_THROWS_AS(gk_fvs_certificate(1), std::invalid_argument);
}

TEST_CASE("gk minor certificate") {
  for (int k : {1, 2, 3, 8}) {
    auto cert = gk_minor_certificate(k);
    CHECK(cert.branch_sets.size() == static_cast<std::size_t>(k + 1));
    CHECK(cert.target.size() == static_cast<std::size_t>(k * (k + 1) / 2));
    CHECK(oracles::verify_minor(gk(k).graph, cert));
  }
}

TEST_CASE("forest_plus_edges") {
  auto f = forest_plus_edges(30, 0, 3, 5);
  CHECK(f.complete());
  CHECK(is_forest(f.graph));
  CHECK_FALSE(girth(f.graph).has_value());

  auto g = forest_plus_edges(60, 2, 11, 7);
  CHECK(g.graph.order() == 60);
  CHECK(*girth(g.graph) >= 11);
  CHECK(cycle_rank(g.graph) <= 2);
  CHECK(cp(g.graph).value <= 2);

  auto h = forest_plus_edges(12, 1, 3, 3);
  CHECK(cycle_rank(h.graph) <= 1);

  // deterministic in the seed
  CHECK(forest_plus_edges(40, 4, 5, 9).graph == forest_plus_edges(40, 4, 5, 9).graph);

  // an impossible request reports the shortfall
  auto short_of = forest_plus_edges(5, 10, 6, 1);
  CHECK_FALSE(short_of.complete());
  CHECK(short_of.extra_placed < short_of.extra_requested);
}

TEST_CASE("forest_plus_edges girth and packing on small seeds") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::size_t extra = seed % 4;
    std::size_t min_girth = 3 + seed % 5;
    auto r = forest_plus_edges(14, extra, min_girth, seed);
    auto gi = girth(r.graph);
    if (gi) CHECK(*gi >= min_girth);
    CHECK(r.extra_placed <= extra);
    auto c = r.graph.compacted();
    CHECK(fixtures::max_disjoint_cycles(c.order(), c.edges()) <= extra);
  }
}

TEST_CASE("standard graphs") {
  CHECK(girth(cycle(3)) == 3u);
  CHECK(cycle(3).size() == 3);
  CHECK(path(4).size() == 3);
  CHECK(complete(5).size() == 10);
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK_FALSE(find_bananas(complete_bipartite(2, 3)).empty());
  CHECK(fixtures::edge_set(theta(2, 2, 2)) == fixtures::edge_set(complete_bipartite(2, 3)));
  auto u = disjoint_union(cycle(3), cycle(4));
  CHECK(u.order() == 7);
  CHECK(u.size() == 7);
}
