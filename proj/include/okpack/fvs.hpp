#pragma once

#include <cstdint>
#include <vector>

#include "okpack/graph.hpp"

namespace okpack {

struct FvsConfig {
  std::size_t girth_target = 11;
  std::size_t fallback_rank_threshold = 16;
  std::uint64_t fallback_node_budget = 2'000'000;
};

struct GreedyStep {
  Vertex vertex;
  std::size_t degree;       // degree in the core at deletion time
  std::size_t rank_before;  // cycle rank of that core
  std::size_t rank_after;   // cycle rank once the vertex is gone
};

struct FvsPhases {
  VertexList sparsify_removed;
  std::vector<GreedyStep> greedy_steps;
  VertexList fallback_removed;
  // The exact solver ran out of budget and fallback_removed came from the
  // shortest-cycle heuristic instead.
  bool fallback_heuristic = false;
};

struct FvsResult {
  VertexList vertices;
  FvsPhases phases;
  std::size_t input_rank = 0;
  bool valid = false;
};

// Sparsify to the configured girth, then repeatedly take the core and delete
// its highest-degree vertex among those on a cycle (lowest id on ties) until
// the cycle rank drops to the fallback threshold, where an exact search
// finishes the job. Always returns a valid FVS; throws std::logic_error if
// the final acyclicity check fails.
FvsResult log_fvs(const Graph& g, const FvsConfig& cfg = {});

// Minimum FVS. Branch and bound over shortest cycles of the degree-2
// suppression of the core; throws BudgetExceeded past `budget` nodes.
VertexList exact_fvs(const Graph& g, std::uint64_t budget = 2'000'000);

bool is_fvs(const Graph& g, std::span<const Vertex> x);

struct RichVertex {
  Vertex vertex;
  Rational ratio;  // degree / cycle rank
};

// Maximum-degree vertex (lowest id on ties) and its degree over r(g).
// Throws std::invalid_argument on forests.
RichVertex rich_ratio(const Graph& g);

}  // namespace okpack
