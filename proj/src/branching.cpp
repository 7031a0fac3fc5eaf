#include "okpack/branching.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "clique.hpp"
#include "okpack/errors.hpp"
#include "okpack/solvers.hpp"

namespace okpack {

namespace {

using detail::CompatibilityGraph;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

bool independent(const Graph& g, const VertexList& a, const VertexList& b) {
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (u == v || g.has_edge(u, v)) return false;
    }
  }
  return true;
}

CompatibilityGraph compatibility(const Graph& g, const std::vector<VertexList>& cycles) {
  CompatibilityGraph cg(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (independent(g, cycles[i], cycles[j])) cg.connect(i, j);
    }
  }
  return cg;
}

VertexList closed_neighbourhood(const Graph& g, Vertex v) {
  VertexList out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

bool meets(const VertexList& sorted_a, const VertexList& sorted_b) {
  auto i = sorted_a.begin();
  auto j = sorted_b.begin();
  while (i != sorted_a.end() && j != sorted_b.end()) {
    if (*i == *j) return true;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return false;
}

struct NodeView {
  C4Packing packing;
  std::vector<VertexList> family;
};

NodeView examine(const Graph& g, const BranchConfig& cfg, BranchStats& stats) {
  NodeView view;
  view.packing = max_independent_c4_packing(g, cfg.packing_enum_budget);
  if (view.packing.q > 0) {
    view.family = enumerate_c4_packings(g, view.packing.q, cfg.packing_enum_budget);
    stats.packings_enumerated += view.family.size();
  }
  return view;
}

// Progress promised to a child: if it still has q independent 4-cycles, it
// has at most `bound` q-packings.
struct Promise {
  int q = 0;
  std::size_t bound = 0;
};

class MisBrancher {
 public:
  MisBrancher(const BranchConfig& cfg) : cfg_(cfg), budget_(cfg.node_budget) {}

  VertexList run(const Graph& g) { return solve(g, 0, std::nullopt); }
  BranchStats stats;

 private:
  VertexList solve(const Graph& g, std::uint64_t depth, std::optional<Promise> promise) {
    budget_.charge();
    ++stats.nodes_expanded;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (g.empty()) return {};
    NodeView view = examine(g, cfg_, stats);
    const int q = view.packing.q;
    if (depth == 0 && q > cfg_.max_q) {
      throw BudgetExceeded("qmis: root has " + std::to_string(q) +
                           " independent 4-cycles, above max_q " + std::to_string(cfg_.max_q));
    }
    if (promise && promise->q == q && view.family.size() > promise->bound) {
      throw std::logic_error("qmis: branch did not shrink the packing family");
    }
    if (q == 0) {
      ++stats.base_case_calls;
      auto fvs = log_fvs(g, cfg_.base_case_fvs_cfg);
      return mis_via_fvs(g, fvs.vertices);
    }

    const std::size_t s = view.family.size();
    VertexList cyc = view.packing.witness.cycles.front();
    std::sort(cyc.begin(), cyc.end());
    Vertex pick = -1;
    std::size_t best_hits = 0;
    for (Vertex v : cyc) {
      VertexList nv = closed_neighbourhood(g, v);
      std::size_t hits = 0;
      for (const auto& set : view.family) hits += meets(nv, set) ? 1 : 0;
      if (pick < 0 || hits > best_hits) {
        pick = v;
        best_hits = hits;
      }
    }
    if (best_hits < ceil_div(s, 4)) {
      throw std::logic_error("qmis: selected vertex covers fewer than a quarter of the packings");
    }

    VertexList nv = closed_neighbourhood(g, pick);
    VertexList with = solve(g.without(nv), depth + 1, Promise{q, s - best_hits});
    with.push_back(pick);
    std::sort(with.begin(), with.end());
    VertexList without = solve(g.without(pick), depth + 1, Promise{q, s - 1});
    if (without.size() > with.size() || (without.size() == with.size() && without < with)) {
      return without;
    }
    return with;
  }

  const BranchConfig& cfg_;
  Budget budget_;
};

class ColorBrancher {
 public:
  ColorBrancher(const BranchConfig& cfg) : cfg_(cfg), budget_(cfg.node_budget) {}

  std::optional<std::vector<int>> run(const Graph& g, const ListAssignment& lists) {
    return solve(g, lists, std::vector<int>(g.id_bound(), 0), 0);
  }
  BranchStats stats;

 private:
  std::optional<std::vector<int>> solve(Graph g, ListAssignment lists, std::vector<int> colors,
                                        std::uint64_t depth) {
    budget_.charge();
    ++stats.nodes_expanded;
    stats.max_depth = std::max(stats.max_depth, depth);

    // empty list: dead; singleton: commit and strip from neighbours
    for (bool changed = true; changed;) {
      changed = false;
      for (Vertex v : g.vertices()) {
        if (lists[v] == 0) return std::nullopt;
        if (color_count(lists[v]) != 1) continue;
        int c = lowest_color(lists[v]);
        colors[v] = c;
        for (Vertex w : g.neighbors(v)) lists[w] &= ~color_bit(c);
        g = g.without(v);
        changed = true;
        break;
      }
    }
    if (g.empty()) return colors;

    NodeView view = examine(g, cfg_, stats);
    const int q = view.packing.q;
    if (depth == 0 && q > cfg_.max_q) {
      throw BudgetExceeded("list3color: root has " + std::to_string(q) +
                           " independent 4-cycles, above max_q " + std::to_string(cfg_.max_q));
    }
    if (q == 0) {
      ++stats.base_case_calls;
      auto fvs = log_fvs(g, cfg_.base_case_fvs_cfg);
      auto part = list_coloring_via_fvs(g, fvs.vertices, lists, cfg_.node_budget);
      if (!part) return std::nullopt;
      for (Vertex v : g.vertices()) colors[v] = part->colors[v];
      return colors;
    }

    // Every packing meets N[C]; with all lists of size >= 2 over 3 colors a
    // neighbour u of v shares a color with v, so some of the at most 12
    // (v, c) pairs hits a twelfth of the family.
    const std::size_t s = view.family.size();
    VertexList cyc = view.packing.witness.cycles.front();
    std::sort(cyc.begin(), cyc.end());
    Vertex pick = -1;
    int pick_color = 0;
    std::size_t best_hits = 0;
    for (Vertex v : cyc) {
      for (ColorSet opts = lists[v]; opts != 0; opts &= opts - 1) {
        int c = lowest_color(opts);
        std::size_t hits = 0;
        for (const auto& set : view.family) {
          bool hit = std::binary_search(set.begin(), set.end(), v);
          for (Vertex u : g.neighbors(v)) {
            if (hit) break;
            hit = (lists[u] & color_bit(c)) && std::binary_search(set.begin(), set.end(), u);
          }
          hits += hit ? 1 : 0;
        }
        if (pick < 0 || hits > best_hits) {
          pick = v;
          pick_color = c;
          best_hits = hits;
        }
      }
    }
    if (best_hits < ceil_div(s, 12)) {
      throw std::logic_error("list3color: selected pair hits fewer than a twelfth of the packings");
    }

    ListAssignment take = lists;
    take[pick] = color_bit(pick_color);
    if (auto found = solve(g, std::move(take), colors, depth + 1)) return found;
    lists[pick] &= ~color_bit(pick_color);
    return solve(std::move(g), std::move(lists), std::move(colors), depth + 1);
  }

  const BranchConfig& cfg_;
  Budget budget_;
};

}  // namespace

void BranchStats::merge(const BranchStats& other) {
  nodes_expanded += other.nodes_expanded;
  packings_enumerated += other.packings_enumerated;
  base_case_calls += other.base_case_calls;
  max_depth = std::max(max_depth, other.max_depth);
}

std::vector<VertexList> four_cycles(const Graph& g) {
  std::map<VertexList, VertexList> by_set;
  for (Vertex a : g.vertices()) {
    auto na = g.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      Vertex b = na[i];
      if (b < a) continue;
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        Vertex d = na[j];
        for (Vertex c : g.neighbors(b)) {
          if (c <= a || c == d || !g.has_edge(c, d)) continue;
          VertexList set{a, b, c, d};
          std::sort(set.begin(), set.end());
          by_set.try_emplace(std::move(set), VertexList{a, b, c, d});
        }
      }
    }
  }
  std::vector<VertexList> out;
  out.reserve(by_set.size());
  for (auto& [set, cyc] : by_set) out.push_back(std::move(cyc));
  return out;
}

C4Packing max_independent_c4_packing(const Graph& g, std::uint64_t budget) {
  auto cycles = four_cycles(g);
  Budget meter(budget);
  auto clique = detail::maximum_clique(compatibility(g, cycles), meter);
  C4Packing out;
  out.q = static_cast<int>(clique.size());
  for (auto i : clique) out.witness.cycles.push_back(cycles[i]);
  return out;
}

std::vector<VertexList> enumerate_c4_packings(const Graph& g, int q, std::uint64_t budget) {
  if (q < 1) throw std::invalid_argument("enumerate_c4_packings: q must be >= 1");
  auto cycles = four_cycles(g);
  Budget meter(budget);
  std::set<VertexList> family;
  detail::for_each_clique(compatibility(g, cycles), static_cast<std::size_t>(q), meter,
                          [&](const std::vector<std::size_t>& clique) {
                            VertexList set;
                            for (auto i : clique) set.insert(set.end(), cycles[i].begin(), cycles[i].end());
                            std::sort(set.begin(), set.end());
                            family.insert(std::move(set));
                            return true;
                          });
  return {family.begin(), family.end()};
}

MisResult qmis(const Graph& g, const BranchConfig& cfg) {
  MisBrancher brancher(cfg);
  MisResult out;
  out.vertices = brancher.run(g);
  out.stats = brancher.stats;
  if (!is_independent_set(g, out.vertices)) throw std::logic_error("qmis: result not independent");
  return out;
}

ColoringResult list3color(const Graph& g, const ListAssignment& lists, const BranchConfig& cfg) {
  ListAssignment clipped = lists;
  clipped.lists.resize(g.id_bound(), 0);
  for (Vertex v : g.vertices()) {
    if (clipped[v] & ~first_colors(3)) {
      throw std::invalid_argument("list3color: lists must be subsets of {1,2,3}");
    }
  }
  ColorBrancher brancher(cfg);
  ColoringResult out;
  if (auto colors = brancher.run(g, clipped)) {
    out.coloring = ColoringAssignment{std::move(*colors)};
    if (!is_proper_coloring(g, *out.coloring, &clipped)) {
      throw std::logic_error("list3color: result is not a proper list coloring");
    }
  }
  out.stats = brancher.stats;
  return out;
}

ColoringResult three_coloring(const Graph& g, const BranchConfig& cfg) {
  return list3color(g, ListAssignment::uniform(g.id_bound(), 3), cfg);
}

}  // namespace okpack
