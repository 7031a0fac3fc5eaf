#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace okpack {

using Vertex = std::int32_t;
// A vertex list. When it stands for a set it is kept sorted and unique.
using VertexList = std::vector<Vertex>;
using Rational = boost::rational<std::int64_t>;

struct Edge {
  Vertex u;
  Vertex v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph over the id space [0, id_bound). Vertices can be
// absent: subgraphs keep the ids of the graph they were taken from, so that
// certificates and traces always refer to the input. Immutable once built.
//
// Edges are stored once, normalized to u < v, in first-insertion order; the
// edge-list writer relies on that order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  // Throws std::invalid_argument on self-loops and out-of-range endpoints.
  // Repeated edges collapse.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t id_bound() const noexcept { return adj_.size(); }
  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return order_ == 0; }

  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < adj_.size() && present_[v];
  }
  VertexList vertices() const;
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Subgraph induced by the present vertices not in `removed`.
  Graph without(std::span<const Vertex> removed) const;
  Graph without(Vertex v) const { return without(std::span<const Vertex>(&v, 1)); }
  // Subgraph induced by `keep` (absent ids are ignored).
  Graph induced(std::span<const Vertex> keep) const;
  // Same graph renumbered onto 0..order()-1 in increasing id order.
  // original_ids, if given, receives the old id of each new vertex.
  Graph compacted(VertexList* original_ids = nullptr) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Graph(std::vector<VertexList> adj, std::vector<char> present,
        std::vector<Edge> edges);

  std::vector<VertexList> adj_;
  std::vector<char> present_;
  std::vector<Edge> edges_;
  std::size_t order_ = 0;
};

// Multigraph with loops and parallel edges, on a (possibly sparse) id space.
// A loop contributes 2 to the degree of its vertex.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t id_bound, VertexList vertices, std::vector<Edge> edges);

  std::size_t id_bound() const noexcept { return present_.size(); }
  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool contains(Vertex v) const noexcept {
    return v >= 0 && static_cast<std::size_t>(v) < present_.size() && present_[v];
  }
  const VertexList& vertices() const noexcept { return vertices_; }
  // Normalized u <= v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t multiplicity(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const;

 private:
  std::vector<char> present_;
  VertexList vertices_;
  std::vector<Edge> edges_;
};

enum class RemovalReason { degree0, degree1 };

struct Removal {
  Vertex vertex;
  RemovalReason reason;
  friend bool operator==(const Removal&, const Removal&) = default;
};

using ReductionTrace = std::vector<Removal>;

struct CoreResult {
  Graph graph;
  ReductionTrace trace;
};

std::vector<VertexList> components(const Graph& g);

// |E| - |V| + #components.
std::size_t cycle_rank(const Graph& g);
std::size_t cycle_rank(const MultiGraph& g);
bool is_forest(const Graph& g);

// Iteratively deletes vertices of degree 0 or 1. Initial candidates are
// processed in increasing id order, newly exposed ones FIFO.
CoreResult core(const Graph& g);

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

// Length of a shortest cycle; nullopt stands for infinite girth.
std::optional<std::size_t> girth(const Graph& g);

// A shortest cycle among those of length <= max_len, in canonical form.
// The cycle comes from the lowest-id BFS root that attains the minimum and
// the first closing edge met in sorted-neighbor BFS order.
std::optional<VertexList> shortest_cycle(const Graph& g,
                                         std::size_t max_len = kUnbounded);

// Rotation starting at the smallest id, direction with the smaller of its
// two cycle neighbors second.
VertexList canonical_cycle(VertexList cycle);

// True iff `cycle` lists >= 3 distinct vertices of g, consecutive ones
// (with wrap-around) adjacent.
bool is_cycle_of(const Graph& g, std::span<const Vertex> cycle);

// Replaces each maximal path with degree-2 internal vertices by one edge.
// A component that is a bare cycle becomes its lowest id with a loop.
MultiGraph suppress_degree_two(const Graph& g);

// 2|E|/|V|. Throws std::invalid_argument on the empty graph.
Rational average_degree(const Graph& g);

// Maximum-degree vertex, lowest id on ties.
std::optional<Vertex> max_degree_vertex(const Graph& g);

// Sorted-set helpers used across modules.
VertexList sorted_unique(VertexList v);
bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super);

}  // namespace okpack
