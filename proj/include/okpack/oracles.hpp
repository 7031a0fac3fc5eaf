#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "okpack/generators.hpp"
#include "okpack/graph.hpp"
#include "okpack/types.hpp"

namespace okpack::oracles {

// Brute-force references. Every oracle enforces a hard size cap and throws
// TooLarge past it; none of them shares a search strategy with the module
// it checks.

inline constexpr std::size_t kMisLimit = 24;
inline constexpr std::size_t kColorLimit = 20;
inline constexpr std::size_t kFvsLimit = 20;
inline constexpr std::size_t kFvsRankLimit = 12;
inline constexpr std::size_t kTreewidthLimit = 20;
inline constexpr std::size_t kCycleLimit = 12;

// Lexicographically smallest maximum independent set.
VertexList brute_mis(const Graph& g);

// Minimum vertex cover by edge branching.
VertexList brute_vertex_cover(const Graph& g);

// First proper coloring in (vertex id, color) lexicographic order using
// colors 1..q, restricted to lists when given.
std::optional<ColoringAssignment> brute_coloring(const Graph& g, int q,
                                                 const ListAssignment* lists = nullptr);
std::optional<ColoringAssignment> brute_3color(const Graph& g,
                                               const ListAssignment* lists = nullptr);
int brute_chromatic_number(const Graph& g);

// Minimum FVS by iterative deepening over subset size; acyclicity by
// union-find.
VertexList brute_fvs(const Graph& g);

// Exact treewidth via dynamic programming over vertex subsets.
int brute_treewidth(const Graph& g);

bool verify_minor(const Graph& g, const MinorCertificate& cert);

// k pairwise independent cycles, searched over all vertex sets that carry a
// cycle (not only chordless ones).
std::optional<PackingWitness> brute_independent_cycles(const Graph& g, int k);

}  // namespace okpack::oracles
