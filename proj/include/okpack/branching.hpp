#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "okpack/fvs.hpp"
#include "okpack/graph.hpp"
#include "okpack/types.hpp"

namespace okpack {

struct BranchConfig {
  int max_q = 3;  // root instances with more independent 4-cycles are refused
  std::uint64_t packing_enum_budget = 5'000'000;
  std::uint64_t node_budget = 1'000'000;
  FvsConfig base_case_fvs_cfg;
};

struct BranchStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t packings_enumerated = 0;
  std::uint64_t base_case_calls = 0;
  std::uint64_t max_depth = 0;

  void merge(const BranchStats& other);
};

struct C4Packing {
  int q = 0;
  PackingWitness witness;  // q four-cycles, pairwise independent
};

// All 4-cycles of g, one per vertex set, sorted by vertex set. Each cycle is
// listed from its smallest vertex, smaller neighbour second.
std::vector<VertexList> four_cycles(const Graph& g);

// Maximum number of independent (not necessarily induced) 4-cycles, with
// the lexicographically least maximum packing over four_cycles order.
C4Packing max_independent_c4_packing(const Graph& g, std::uint64_t budget);

// Sorted vertex sets of all packings of q independent 4-cycles, without
// repeats. q >= 1.
std::vector<VertexList> enumerate_c4_packings(const Graph& g, int q, std::uint64_t budget);

struct MisResult {
  VertexList vertices;
  BranchStats stats;
};

// Maximum independent set by branching on a vertex of a packing 4-cycle
// whose closed neighbourhood meets the most q-packings; the q = 0 leaves go
// through log_fvs and mis_via_fvs. Throws BudgetExceeded when the root has
// more than cfg.max_q independent 4-cycles or a budget runs out, and
// std::logic_error if a coverage assertion fails.
MisResult qmis(const Graph& g, const BranchConfig& cfg = {});

struct ColoringResult {
  std::optional<ColoringAssignment> coloring;
  BranchStats stats;
};

// List coloring with lists inside {1,2,3}. Branches on a (vertex, color)
// pair from a packing 4-cycle that touches the most q-packings; q = 0
// leaves go through log_fvs and list_coloring_via_fvs.
ColoringResult list3color(const Graph& g, const ListAssignment& lists,
                          const BranchConfig& cfg = {});

ColoringResult three_coloring(const Graph& g, const BranchConfig& cfg = {});

}  // namespace okpack
