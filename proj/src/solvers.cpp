#include "okpack/solvers.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "okpack/errors.hpp"
#include "okpack/fvs.hpp"

namespace okpack {

namespace {

// BFS layout of a forest: order lists parents before children.
struct ForestLayout {
  VertexList order;
  std::vector<Vertex> parent;
};

ForestLayout layout(const Graph& g) {
  if (!is_forest(g)) throw std::invalid_argument("graph is not a forest");
  ForestLayout out;
  out.parent.assign(g.id_bound(), -1);
  std::vector<char> seen(g.id_bound(), 0);
  for (Vertex root : g.vertices()) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::size_t head = out.order.size();
    out.order.push_back(root);
    while (head < out.order.size()) {
      Vertex u = out.order[head++];
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        out.parent[w] = u;
        out.order.push_back(w);
      }
    }
  }
  return out;
}

// Tree DP on a fixed layout; forbidden is indexed by vertex id.
VertexList forest_mis_on(const Graph& g, const ForestLayout& lay,
                         const std::vector<char>& forbidden) {
  const std::size_t n = g.id_bound();
  std::vector<int> in(n, 0);
  std::vector<int> out(n, 0);
  for (auto it = lay.order.rbegin(); it != lay.order.rend(); ++it) {
    Vertex v = *it;
    in[v] = forbidden[v] ? -1 : in[v] + 1;
    Vertex p = lay.parent[v];
    if (p >= 0) {
      out[p] += std::max(in[v], out[v]);
      if (in[p] >= 0) in[p] += out[v];
    }
  }
  // in[v] currently sums children's out values plus one; -1 marks forbidden.
  std::vector<char> taken(n, 0);
  VertexList result;
  for (Vertex v : lay.order) {
    Vertex p = lay.parent[v];
    bool parent_taken = p >= 0 && taken[p];
    if (!parent_taken && in[v] > out[v]) {
      taken[v] = 1;
      result.push_back(v);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

void check_fvs(const Graph& g, std::span<const Vertex> x) {
  for (Vertex v : x) {
    if (!g.contains(v)) throw std::invalid_argument("FVS vertex " + std::to_string(v) + " not in graph");
  }
  if (!is_fvs(g, x)) throw std::invalid_argument("given set is not a feedback vertex set");
}

}  // namespace

VertexList forest_mis(const Graph& g, std::span<const Vertex> forbidden) {
  auto lay = layout(g);
  std::vector<char> mask(g.id_bound(), 0);
  for (Vertex v : forbidden) {
    if (g.contains(v)) mask[v] = 1;
  }
  return forest_mis_on(g, lay, mask);
}

VertexList mis_via_fvs(const Graph& g, std::span<const Vertex> x_in, std::size_t cap) {
  VertexList x = sorted_unique(VertexList(x_in.begin(), x_in.end()));
  if (x.size() > cap) throw CapExceeded("mis_via_fvs: FVS too large", cap, x.size());
  check_fvs(g, x);

  const Graph forest = g.without(x);
  const auto lay = layout(forest);
  const std::size_t s = x.size();
  std::vector<std::uint32_t> x_adj(s, 0);     // neighbours inside x
  std::vector<std::uint32_t> reach(g.id_bound(), 0);  // x-neighbours of forest vertices
  for (std::size_t i = 0; i < s; ++i) {
    for (Vertex w : g.neighbors(x[i])) {
      auto j = std::lower_bound(x.begin(), x.end(), w);
      if (j != x.end() && *j == w) {
        x_adj[i] |= std::uint32_t{1} << (j - x.begin());
      } else {
        reach[w] |= std::uint32_t{1} << i;
      }
    }
  }

  VertexList best;
  bool have = false;
  std::vector<char> forbidden(g.id_bound(), 0);
  auto evaluate = [&](std::uint32_t chosen) {
    for (Vertex v : lay.order) forbidden[v] = (reach[v] & chosen) != 0;
    VertexList cand = forest_mis_on(forest, lay, forbidden);
    for (std::size_t i = 0; i < s; ++i) {
      if (chosen >> i & 1) cand.push_back(x[i]);
    }
    std::sort(cand.begin(), cand.end());
    if (!have || cand.size() > best.size() || (cand.size() == best.size() && cand < best)) {
      best = std::move(cand);
      have = true;
    }
  };
  // independent subsets of g[x] only
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t chosen) -> void {
    if (i == s) {
      evaluate(chosen);
      return;
    }
    self(self, i + 1, chosen);
    if ((x_adj[i] & chosen) == 0) self(self, i + 1, chosen | (std::uint32_t{1} << i));
  };
  rec(rec, 0, 0);
  return best;
}

VertexList min_vertex_cover_via_fvs(const Graph& g, std::span<const Vertex> x, std::size_t cap) {
  VertexList mis = mis_via_fvs(g, x, cap);
  VertexList cover;
  for (Vertex v : g.vertices()) {
    if (!std::binary_search(mis.begin(), mis.end(), v)) cover.push_back(v);
  }
  if (!is_vertex_cover(g, cover)) throw std::logic_error("vertex cover check failed");
  return cover;
}

std::optional<ColoringAssignment> forest_list_coloring(const Graph& g,
                                                       const ListAssignment& lists) {
  auto lay = layout(g);
  std::vector<ColorSet> feasible(g.id_bound(), 0);
  for (Vertex v : lay.order) feasible[v] = lists[v] & ~ColorSet{1};
  for (auto it = lay.order.rbegin(); it != lay.order.rend(); ++it) {
    Vertex v = *it;
    if (feasible[v] == 0) return std::nullopt;
    Vertex p = lay.parent[v];
    // a single feasible color for v rules it out for the parent
    if (p >= 0 && color_count(feasible[v]) == 1) feasible[p] &= ~feasible[v];
  }
  ColoringAssignment out{std::vector<int>(g.id_bound(), 0)};
  for (Vertex v : lay.order) {
    ColorSet options = feasible[v];
    Vertex p = lay.parent[v];
    if (p >= 0) options &= ~color_bit(out.colors[p]);
    out.colors[v] = lowest_color(options);
  }
  return out;
}

std::optional<ColoringAssignment> list_coloring_via_fvs(const Graph& g,
                                                        std::span<const Vertex> x_in,
                                                        const ListAssignment& lists,
                                                        std::uint64_t budget) {
  VertexList x = sorted_unique(VertexList(x_in.begin(), x_in.end()));
  check_fvs(g, x);
  const Graph forest = g.without(x);
  Budget meter(budget);
  std::vector<int> colors(g.id_bound(), 0);
  std::optional<ColoringAssignment> found;

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    meter.charge();
    if (i == x.size()) {
      ListAssignment rest = lists;
      for (Vertex v : forest.vertices()) {
        for (Vertex w : g.neighbors(v)) {
          if (colors[w] != 0) rest[v] &= ~color_bit(colors[w]);
        }
      }
      auto part = forest_list_coloring(forest, rest);
      if (!part) return false;
      for (Vertex v : forest.vertices()) colors[v] = part->colors[v];
      found = ColoringAssignment{colors};
      return true;
    }
    Vertex v = x[i];
    ColorSet options = lists[v] & ~ColorSet{1};
    for (Vertex w : g.neighbors(v)) {
      if (colors[w] != 0) options &= ~color_bit(colors[w]);
    }
    for (; options != 0; options &= options - 1) {
      colors[v] = lowest_color(options);
      if (self(self, i + 1)) return true;
    }
    colors[v] = 0;
    return false;
  };
  rec(rec, 0);
  if (found && !is_proper_coloring(g, *found, &lists)) {
    throw std::logic_error("list coloring check failed");
  }
  return found;
}

std::optional<ColoringAssignment> q_coloring_via_fvs(const Graph& g, std::span<const Vertex> x,
                                                     int q, std::uint64_t budget) {
  if (q < 1 || q > 31) throw std::invalid_argument("q must be in [1, 31]");
  return list_coloring_via_fvs(g, x, ListAssignment::uniform(g.id_bound(), q), budget);
}

int chromatic_number_via_fvs(const Graph& g, std::span<const Vertex> x, std::uint64_t budget) {
  check_fvs(g, x);
  if (g.empty()) return 0;
  if (g.size() == 0) return 1;
  for (int q = 2; q <= 31; ++q) {
    if (q_coloring_via_fvs(g, x, q, budget)) return q;
  }
  throw std::invalid_argument("chromatic number exceeds 31");
}

}  // namespace okpack
