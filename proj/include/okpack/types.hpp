#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "okpack/graph.hpp"

namespace okpack {

// Cycles of a host graph, pairwise vertex-disjoint; "independent" packings
// additionally have no edge between two of their cycles.
struct PackingWitness {
  std::vector<VertexList> cycles;
  std::size_t size() const noexcept { return cycles.size(); }
  friend bool operator==(const PackingWitness&, const PackingWitness&) = default;
};

bool is_packing(const Graph& g, const PackingWitness& w, bool independent);

// left x right complete bipartite subgraph (not necessarily induced).
struct KttWitness {
  VertexList left;
  VertexList right;
};

bool is_complete_bipartite_subgraph(const Graph& g, const KttWitness& w);

// Bit c set means color c is allowed; colors start at 1.
using ColorSet = std::uint32_t;

constexpr ColorSet color_bit(int c) { return ColorSet{1} << c; }
constexpr ColorSet first_colors(int q) { return ((ColorSet{1} << (q + 1)) - 1) & ~ColorSet{1}; }
constexpr int color_count(ColorSet s) { return std::popcount(s); }
constexpr int lowest_color(ColorSet s) { return std::countr_zero(s); }

struct ListAssignment {
  std::vector<ColorSet> lists;  // indexed by vertex id

  static ListAssignment uniform(std::size_t id_bound, int q) {
    return {std::vector<ColorSet>(id_bound, first_colors(q))};
  }
  ColorSet operator[](Vertex v) const { return lists[static_cast<std::size_t>(v)]; }
  ColorSet& operator[](Vertex v) { return lists[static_cast<std::size_t>(v)]; }
};

// colors[v] is the color of v, 0 for ids that are not vertices.
struct ColoringAssignment {
  std::vector<int> colors;

  int operator[](Vertex v) const { return colors[static_cast<std::size_t>(v)]; }
  int distinct_colors() const;
};

// Proper, every present vertex colored, and within its list when given.
bool is_proper_coloring(const Graph& g, const ColoringAssignment& c,
                        const ListAssignment* lists = nullptr);

bool is_independent_set(const Graph& g, std::span<const Vertex> set);
bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover);

}  // namespace okpack
