#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "okpack/graph.hpp"
#include "okpack/types.hpp"

namespace okpack {

inline constexpr std::uint64_t kDefaultCycleCap = 1'000'000;
inline constexpr std::uint64_t kDefaultSearchBudget = 50'000'000;

// All chordless cycles of length >= 3, each once: smallest id first, the
// smaller of its two cycle neighbors second. Ordered by first vertex, then
// by DFS over sorted neighbor lists. Throws CapExceeded past `cap` cycles.
std::vector<VertexList> enumerate_induced_cycles(const Graph& g,
                                                 std::uint64_t cap = kDefaultCycleCap);

struct PackingResult {
  std::size_t value = 0;
  PackingWitness witness;
};

// Maximum number of pairwise independent cycles, as a maximum clique over
// chordless cycles with "disjoint and non-adjacent" as compatibility.
PackingResult icp(const Graph& g, std::uint64_t cap = kDefaultCycleCap);

struct OkFreeResult {
  bool ok_free = true;
  std::optional<PackingWitness> witness;  // k independent cycles when !ok_free
};

// True iff g has no k pairwise independent cycles.
OkFreeResult is_ok_free(const Graph& g, int k, std::uint64_t cap = kDefaultCycleCap);

// Maximum number of vertex-disjoint cycles. Exhaustive, memoized on the
// remaining vertex set; throws CapExceeded past `cap` search nodes.
PackingResult cp(const Graph& g, std::uint64_t cap = kDefaultSearchBudget);

// K_{a,b} subgraph with |left| = a, |right| = b. Common-neighbour counting
// when the smaller side has at most 2 vertices, budgeted backtracking
// otherwise (throws BudgetExceeded).
std::optional<KttWitness> has_kab(const Graph& g, int a, int b,
                                  std::uint64_t budget = kDefaultSearchBudget);
std::optional<KttWitness> has_ktt_subgraph(const Graph& g, int t,
                                           std::uint64_t budget = kDefaultSearchBudget);

struct Banana {
  Vertex u;
  Vertex v;
  std::size_t paths;
  friend bool operator==(const Banana&, const Banana&) = default;
};

// Pairs of distinct vertices of degree != 2 joined by >= 2 paths whose
// internal vertices have degree 2, read off the degree-2 suppression.
std::vector<Banana> find_bananas(const Graph& g);

// X with find_bananas(g - X) empty. Each round shortens every maximal
// degree-2 path to one internal vertex, greedily removes disjoint cycles of
// length <= 4 there, and lifts them back; rounds repeat while deleting X
// exposes new bananas.
VertexList banana_hitting_set(const Graph& g);

// Greedy maximal packing: take a shortest cycle while it has length <= ell,
// delete its vertices, repeat.
PackingWitness disjoint_short_cycle_packing(const Graph& g, std::size_t ell);

struct SparsifyResult {
  VertexList removed;
  Graph graph;
};

// removed = vertices of disjoint_short_cycle_packing(g, ell - 1); the graph
// g - removed has girth >= ell (checked, std::logic_error otherwise).
SparsifyResult sparsify_girth(const Graph& g, std::size_t ell);

}  // namespace okpack
