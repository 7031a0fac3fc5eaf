#include "okpack/types.hpp"

#include <algorithm>
#include <set>

namespace okpack {

bool is_packing(const Graph& g, const PackingWitness& w, bool independent) {
  std::vector<int> owner(g.id_bound(), -1);
  for (std::size_t i = 0; i < w.cycles.size(); ++i) {
    if (!is_cycle_of(g, w.cycles[i])) return false;
    for (Vertex v : w.cycles[i]) {
      if (owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
  }
  if (!independent) return true;
  for (std::size_t i = 0; i < w.cycles.size(); ++i) {
    for (Vertex v : w.cycles[i]) {
      for (Vertex x : g.neighbors(v)) {
        if (owner[x] != -1 && owner[x] != static_cast<int>(i)) return false;
      }
    }
  }
  return true;
}

bool is_complete_bipartite_subgraph(const Graph& g, const KttWitness& w) {
  std::set<Vertex> all(w.left.begin(), w.left.end());
  all.insert(w.right.begin(), w.right.end());
  if (all.size() != w.left.size() + w.right.size()) return false;
  for (Vertex a : w.left) {
    for (Vertex b : w.right) {
      if (!g.has_edge(a, b)) return false;
    }
  }
  return true;
}

int ColoringAssignment::distinct_colors() const {
  std::set<int> used;
  for (int c : colors) {
    if (c != 0) used.insert(c);
  }
  return static_cast<int>(used.size());
}

bool is_proper_coloring(const Graph& g, const ColoringAssignment& c,
                        const ListAssignment* lists) {
  if (c.colors.size() < g.id_bound()) return false;
  for (Vertex v : g.vertices()) {
    int col = c[v];
    if (col <= 0) return false;
    if (lists && !((*lists)[v] & color_bit(col))) return false;
    for (Vertex w : g.neighbors(v)) {
      if (c[w] == col) return false;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, std::span<const Vertex> set) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (!g.contains(set[i])) return false;
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
    }
  }
  return true;
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.id_bound(), 0);
  for (Vertex v : cover) {
    if (!g.contains(v)) return false;
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

}  // namespace okpack
