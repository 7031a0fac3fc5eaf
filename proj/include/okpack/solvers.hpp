#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "okpack/graph.hpp"
#include "okpack/types.hpp"

namespace okpack {

inline constexpr std::size_t kDefaultFvsCap = 24;
inline constexpr std::uint64_t kDefaultColoringBudget = 10'000'000;

// Maximum independent set of a forest avoiding `forbidden`. Two-state tree
// DP, roots at the lowest id of each component; ties prefer leaving a
// vertex out. Throws std::invalid_argument on graphs with a cycle.
VertexList forest_mis(const Graph& g, std::span<const Vertex> forbidden = {});

// Maximum independent set given a feedback vertex set x: every independent
// subset of g[x] is extended by forest_mis on g - x. Ties go to the
// lexicographically smallest set. Throws std::invalid_argument if x is not
// an FVS of g and CapExceeded if |x| > cap.
VertexList mis_via_fvs(const Graph& g, std::span<const Vertex> x,
                       std::size_t cap = kDefaultFvsCap);

// V(g) minus mis_via_fvs(g, x).
VertexList min_vertex_cover_via_fvs(const Graph& g, std::span<const Vertex> x,
                                    std::size_t cap = kDefaultFvsCap);

// List coloring of a forest: bottom-up feasible color sets, then top-down
// with the lowest feasible color. Throws std::invalid_argument on graphs
// with a cycle.
std::optional<ColoringAssignment> forest_list_coloring(const Graph& g,
                                                       const ListAssignment& lists);

// Enumerates list colorings of g[x] (one budget unit each) and completes
// each on the forest g - x. Exact decision.
std::optional<ColoringAssignment> list_coloring_via_fvs(
    const Graph& g, std::span<const Vertex> x, const ListAssignment& lists,
    std::uint64_t budget = kDefaultColoringBudget);

// 1 <= q <= 31.
std::optional<ColoringAssignment> q_coloring_via_fvs(
    const Graph& g, std::span<const Vertex> x, int q,
    std::uint64_t budget = kDefaultColoringBudget);

// Least q admitting a proper q-coloring (0 for the empty graph).
int chromatic_number_via_fvs(const Graph& g, std::span<const Vertex> x,
                             std::uint64_t budget = kDefaultColoringBudget);

}  // namespace okpack
