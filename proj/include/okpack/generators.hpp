#pragma once

#include <cstdint>
#include <vector>

#include "okpack/graph.hpp"

namespace okpack {

inline constexpr int kMaxGkOrder = 20;

// Labels of the extremal graph G_k: word[l] = i means the path vertex
// path_ids[l] is adjacent to the star vertex star_ids[i - 1].
struct GkLabels {
  std::vector<int> word;
  VertexList path_ids;
  VertexList star_ids;
};

struct GkGraph {
  Graph graph;
  GkLabels labels;
};

// Branch sets of a minor model; branch_sets[i] models vertex i of target.
struct MinorCertificate {
  std::vector<VertexList> branch_sets;
  Graph target;
};

// Label word of length 2^k - 1, expanded by w_k = incr(w_{k-1}) 1 incr(w_{k-1}).
// Throws std::invalid_argument unless 1 <= k <= max_k.
std::vector<int> word_w(int k, int max_k = kMaxGkOrder);
// Same word from the closed form w_k[j] = k - v2(j), j 1-indexed.
std::vector<int> word_w_by_valuation(int k, int max_k = kMaxGkOrder);

// Path vertices get ids 0..2^k-2 from left to right, star vertex v_i gets id
// 2^k - 2 + i. Path edges come first in the edge order, then star edges.
GkGraph gk(int k, int max_k = kMaxGkOrder);

// {v_2, ..., v_k}: every star vertex but the one of degree 1. Requires k >= 2.
VertexList gk_fvs_certificate(int k);

// K_{k+1} model in G_k. For i in [k] the i-th set is v_i plus the maximal
// stretch of the path ending at the leftmost vertex labeled i and avoiding
// label i+1; the last set is the path right of the vertex labeled 1.
MinorCertificate gk_minor_certificate(int k);

struct ForestPlus {
  Graph graph;
  std::size_t extra_placed = 0;
  std::size_t extra_requested = 0;
  bool complete() const { return extra_placed == extra_requested; }
};

// Random spanning forest on n vertices plus up to `extra` edges, each kept
// only if it closes no cycle shorter than min_girth. At most 50 * extra
// candidate edges are tried.
ForestPlus forest_plus_edges(std::size_t n, std::size_t extra, std::size_t min_girth,
                             std::uint64_t seed);

// Erdos-Renyi G(n, p).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
// Two branch vertices 0 and 1 joined by paths with the given numbers of
// edges; internal vertices are numbered path by path. At most one length
// may be 1.
Graph theta(std::size_t p1, std::size_t p2, std::size_t p3);
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace okpack
