#pragma once

// Seeded graph families and small independent reference computations shared
// by the test suites.

#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "okpack/generators.hpp"
#include "okpack/graph.hpp"

namespace fixtures {

using okpack::Edge;
using okpack::Graph;
using okpack::Vertex;

// Small random graphs of mixed density. Sizes in [lo, hi].
inline std::vector<Graph> random_graphs(std::size_t count, std::size_t lo, std::size_t hi,
                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = lo + rng() % (hi - lo + 1);
    double p = 0.08 + 0.35 * std::uniform_real_distribution<double>(0, 1)(rng);
    out.push_back(okpack::random_graph(n, p, rng()));
  }
  return out;
}

// Forests plus a few extra edges; the sparse, O_k-free-ish regime.
inline std::vector<Graph> sparse_graphs(std::size_t count, std::size_t lo, std::size_t hi,
                                        std::size_t max_extra, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = lo + rng() % (hi - lo + 1);
    std::size_t extra = rng() % (max_extra + 1);
    out.push_back(okpack::forest_plus_edges(n, extra, 3, rng()).graph);
  }
  return out;
}

// Edges as sorted (u, v) pairs, for comparing graphs up to edge order.
inline std::vector<Edge> edge_set(const Graph& g) {
  std::vector<Edge> e = g.edges();
  std::sort(e.begin(), e.end());
  return e;
}

// Union-find.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Cycle rank counted as the number of edges that close a cycle in a
// union-find sweep, for a multigraph given as an edge list.
inline std::size_t closing_edges(std::size_t id_bound, const std::vector<Edge>& edges) {
  Dsu d(id_bound);
  std::size_t closing = 0;
  for (const Edge& e : edges) closing += d.unite(e.u, e.v) ? 0 : 1;
  return closing;
}

// Maximum number of vertex-disjoint cycles of a multigraph on <= 16
// vertices: either the lowest live vertex is on no packing cycle, or some
// cycle-carrying vertex set containing it is spent.
inline std::size_t max_disjoint_cycles(std::size_t order, const std::vector<Edge>& edges) {
  const std::uint32_t full = (1u << order) - 1;
  auto has_cycle = [&](std::uint32_t mask) {
    std::vector<Edge> inside;
    for (const Edge& e : edges) {
      if ((mask >> e.u & 1) && (mask >> e.v & 1)) inside.push_back(e);
    }
    return closing_edges(order, inside) > 0;
  };
  std::vector<int> memo(std::size_t{1} << order, -1);
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (memo[mask] >= 0) return memo[mask];
    std::uint32_t low = mask & (~mask + 1);
    int value = best(mask & ~low);
    std::uint32_t rest = mask & ~low;
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      std::uint32_t c = sub | low;
      if (has_cycle(c)) value = std::max(value, 1 + best(mask & ~c));
      if (sub == 0) break;
    }
    return memo[mask] = value;
  };
  return static_cast<std::size_t>(best(full));
}

}  // namespace fixtures
