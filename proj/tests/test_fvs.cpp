#include "doctest.h"
#include "fixtures.hpp"

#include <map>

#include "okpack/detectors.hpp"
#include "okpack/errors.hpp"
#include "okpack/fvs.hpp"
#include "okpack/generators.hpp"
#include "okpack/oracles.hpp"

using namespace okpack;

TEST_CASE("log_fvs basic cases") {
  auto tree = log_fvs(path(9));
  CHECK(tree.vertices.empty());
  CHECK(tree.valid);

  auto c5 = log_fvs(cycle(5));
  CHECK(c5.phases.sparsify_removed == VertexList{0, 1, 2, 3, 4});
  CHECK(c5.vertices.size() <= 5);
  CHECK(c5.valid);

  auto g10 = gk(10).graph;
  auto r = log_fvs(g10);
  CHECK(r.valid);
  CHECK(is_fvs(g10, r.vertices));
  CHECK(r.vertices.size() >= 9);
  CHECK(r.input_rank == cycle_rank(g10));

  FvsConfig bad;
  bad.girth_target = 2;
  CHECK_THROWS_AS(log_fvs(cycle(4), bad), std::invalid_argument);
}

TEST_CASE("log_fvs trace replays") {
  std::vector<Graph> inputs = fixtures::random_graphs(60, 10, 40, 909);
  for (int k = 3; k <= 9; ++k) inputs.push_back(gk(k).graph);
  FvsConfig cfgs[3];
  cfgs[1].girth_target = 3;
  cfgs[1].fallback_rank_threshold = 2;
  cfgs[2].girth_target = 5;
  cfgs[2].fallback_rank_threshold = 4;
  for (const Graph& g : inputs) {
    for (const auto& cfg : cfgs) {
      auto r = log_fvs(g, cfg);
      CHECK(r.valid);
      CHECK(is_fvs(g, r.vertices));
      CHECK(r.vertices.size() <= r.input_rank + r.phases.sparsify_removed.size());

      Graph h = g.without(r.phases.sparsify_removed);
      std::size_t last = SIZE_MAX;
      for (const auto& step : r.phases.greedy_steps) {
        h = core(h).graph;
        CHECK(cycle_rank(h) == step.rank_before);
        CHECK(h.degree(step.vertex) == step.degree);
        CHECK(step.rank_before > cfg.fallback_rank_threshold);
        CHECK(step.rank_after < step.rank_before);
        CHECK(step.rank_before <= last);
        last = step.rank_before;
        h = h.without(step.vertex);
        CHECK(cycle_rank(h) == step.rank_after);
      }
      CHECK(cycle_rank(h) <= cfg.fallback_rank_threshold);
      CHECK(is_fvs(h, r.phases.fallback_removed));
    }
  }
}

TEST_CASE("exact_fvs") {
  auto c5 = exact_fvs(cycle(5));
  CHECK(c5.size() == 1);
  Graph two(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(exact_fvs(two).size() == 2);
  CHECK(exact_fvs(gk(3).graph).size() == oracles::brute_fvs(gk(3).graph).size());
  CHECK(exact_fvs(gk(3).graph).size() == 2);
  CHECK(exact_fvs(path(5)).empty());
  CHECK(exact_fvs(complete(6)).size() == 4);
  CHECK_THROWS_AS(exact_fvs(complete(12), 3), BudgetExceeded);
  CHECK(exact_fvs(gk(6).graph) == exact_fvs(gk(6).graph));
}

TEST_CASE("exact_fvs matches the brute-force optimum") {
  std::vector<Graph> inputs = fixtures::random_graphs(150, 2, 14, 1001);
  auto sparse = fixtures::sparse_graphs(60, 8, 20, 8, 1002);
  inputs.insert(inputs.end(), sparse.begin(), sparse.end());
  for (const Graph& g : inputs) {
    auto exact = exact_fvs(g);
    CHECK(is_fvs(g, exact));
    CHECK(exact.size() == oracles::brute_fvs(g).size());
    CHECK(log_fvs(g).vertices.size() >= exact.size());
  }
}

TEST_CASE("is_fvs") {
  CHECK(is_fvs(cycle(5), VertexList{3}));
  CHECK_FALSE(is_fvs(cycle(5), VertexList{}));
  CHECK(is_fvs(gk(4).graph, gk_fvs_certificate(4)));
}

TEST_CASE("rich_ratio") {
  auto c5 = rich_ratio(cycle(5));
  CHECK(c5.vertex == 0);
  CHECK(c5.ratio == Rational(2));

  // G_5: the most frequent label gives the degree, counts give the rank
  auto [g5, labels] = gk(5);
  std::map<int, std::int64_t> freq;
  for (int l : labels.word) ++freq[l];
  std::int64_t d_max = 0;
  for (auto [label, f] : freq) d_max = std::max(d_max, f);
  auto r5 = static_cast<std::int64_t>(g5.size()) - static_cast<std::int64_t>(g5.order()) + 1;
  CHECK(d_max == 16);
  CHECK(r5 == 26);
  CHECK(rich_ratio(g5).ratio == Rational(d_max, r5));
  CHECK(rich_ratio(g5).vertex == labels.star_ids[4]);

  auto th = rich_ratio(theta(2, 2, 2));
  CHECK(th.vertex == 0);
  CHECK(th.ratio == Rational(3, 2));
  CHECK_THROWS_AS(rich_ratio(path(4)), std::invalid_argument);
}

TEST_CASE("vertex deletion lowers the cycle rank of reduced graphs") {
  // r(g) - r(g - v) >= ceil((d - k + 1) / 2) with k = icp(g) + 1
  std::size_t checked = 0;
  for (const Graph& raw : fixtures::random_graphs(300, 4, 12, 1103)) {
    Graph g = core(raw).graph;
    if (g.empty()) continue;
    auto k = static_cast<std::int64_t>(icp(g).value) + 1;
    auto r = static_cast<std::int64_t>(cycle_rank(g));
    for (Vertex v : g.vertices()) {
      auto d = static_cast<std::int64_t>(g.degree(v));
      auto drop = r - static_cast<std::int64_t>(cycle_rank(g.without(v)));
      std::int64_t need = d - k + 1 <= 0 ? 0 : (d - k + 2) / 2;
      CHECK(drop >= need);
      ++checked;
    }
  }
  CHECK(checked > 500);
}
