#include "okpack/fvs.hpp"

#include <algorithm>
#include <stdexcept>

#include "okpack/detectors.hpp"
#include "okpack/errors.hpp"

namespace okpack {

namespace {

// Vertices with at least one incident edge that is not a bridge, i.e. the
// vertices lying on some cycle.
std::vector<char> on_some_cycle(const Graph& g) {
  const std::size_t n = g.id_bound();
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<char> cyclic(n, 0);
  int timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex s : g.vertices()) {
    if (disc[s] != -1) continue;
    disc[s] = low[s] = timer++;
    stack.push_back({s, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          disc[w] = low[w] = timer++;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
          // back edge: both ends are on a cycle
          cyclic[f.v] = cyclic[w] = 1;
        }
        continue;
      }
      Vertex v = f.v;
      Vertex p = f.parent;
      stack.pop_back();
      if (p >= 0) {
        low[p] = std::min(low[p], low[v]);
        if (low[v] <= disc[p]) cyclic[v] = cyclic[p] = 1;  // tree edge p-v is not a bridge
      }
    }
  }
  return cyclic;
}

// Multigraph on 0..n-1 used by the exact search. adj lists repeat a
// neighbour once per parallel edge; a loop appears as the vertex itself.
struct LocalMulti {
  VertexList ids;
  std::vector<std::vector<int>> adj;
};

LocalMulti localize(const MultiGraph& m) {
  LocalMulti out;
  out.ids = m.vertices();
  std::vector<int> index(m.id_bound(), -1);
  for (std::size_t i = 0; i < out.ids.size(); ++i) index[out.ids[i]] = static_cast<int>(i);
  out.adj.resize(out.ids.size());
  for (const Edge& e : m.edges()) {
    int a = index[e.u];
    int b = index[e.v];
    out.adj[a].push_back(b);
    if (a != b) out.adj[b].push_back(a);
  }
  return out;
}

class MultiFvsSearch {
 public:
  MultiFvsSearch(const LocalMulti& g, Budget& budget) : g_(g), budget_(budget) {}

  std::vector<int> solve() {
    std::vector<char> alive(g_.ids.size(), 1);
    best_ = heuristic(alive);
    std::vector<int> chosen;
    search(alive, chosen);
    return best_;
  }

  // One vertex per shortest cycle until acyclic: highest degree, then lowest index.
  std::vector<int> heuristic(std::vector<char> alive) const {
    std::vector<int> out;
    reduce(alive, out);
    while (auto c = shortest_cycle(alive)) {
      int pick = pick_order(*c, alive).front();
      out.push_back(pick);
      alive[pick] = 0;
      reduce(alive, out);
    }
    return out;
  }

 private:
  std::size_t degree(int v, const std::vector<char>& alive) const {
    std::size_t d = 0;
    for (int w : g_.adj[v]) d += alive[w] ? (w == v ? 2 : 1) : 0;
    return d;
  }

  bool has_loop(int v) const {
    return std::find(g_.adj[v].begin(), g_.adj[v].end(), v) != g_.adj[v].end();
  }

  // Drops vertices of degree <= 1 and forces looped vertices into the set.
  void reduce(std::vector<char>& alive, std::vector<int>& forced) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < alive.size(); ++v) {
        if (!alive[v]) continue;
        int iv = static_cast<int>(v);
        if (has_loop(iv)) {
          forced.push_back(iv);
          alive[v] = 0;
          changed = true;
        } else if (degree(iv, alive) <= 1) {
          alive[v] = 0;
          changed = true;
        }
      }
    }
  }

  std::optional<std::vector<int>> shortest_cycle(const std::vector<char>& alive) const {
    const std::size_t n = alive.size();
    // parallel edges first
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::vector<int> seen;
      for (int w : g_.adj[v]) {
        if (!alive[w] || w == static_cast<int>(v)) continue;
        if (std::find(seen.begin(), seen.end(), w) != seen.end()) {
          return std::vector<int>{static_cast<int>(v), w};
        }
        seen.push_back(w);
      }
    }
    std::optional<std::vector<int>> best;
    std::vector<int> dist(n);
    std::vector<int> parent(n);
    for (std::size_t s = 0; s < n; ++s) {
      if (!alive[s]) continue;
      std::fill(dist.begin(), dist.end(), -1);
      std::vector<int> queue{static_cast<int>(s)};
      dist[s] = 0;
      parent[s] = -1;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        if (best && 2 * static_cast<std::size_t>(dist[u]) >= best->size()) break;
        for (int w : g_.adj[u]) {
          if (!alive[w]) continue;
          if (dist[w] < 0) {
            dist[w] = dist[u] + 1;
            parent[w] = u;
            queue.push_back(w);
          } else if (w != parent[u]) {
            auto len = static_cast<std::size_t>(dist[u] + dist[w] + 1);
            if (!best || len < best->size()) {
              std::vector<int> left;
              for (int x = u; x != -1; x = parent[x]) left.push_back(x);
              std::reverse(left.begin(), left.end());
              for (int x = w; x != static_cast<int>(s); x = parent[x]) left.push_back(x);
              // non-simple walks only occur above the true minimum
              std::vector<int> sorted = left;
              std::sort(sorted.begin(), sorted.end());
              if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) {
                best = std::move(left);
              }
            }
          }
        }
      }
    }
    return best;
  }

  std::vector<int> pick_order(std::vector<int> cyc, const std::vector<char>& alive) const {
    std::sort(cyc.begin(), cyc.end(), [&](int a, int b) {
      auto da = degree(a, alive);
      auto db = degree(b, alive);
      return da != db ? da > db : a < b;
    });
    return cyc;
  }

  std::size_t disjoint_cycles(std::vector<char> alive) const {
    std::size_t count = 0;
    std::vector<int> sink;
    while (true) {
      reduce(alive, sink);
      count += sink.size();  // a loop is a cycle of its own
      sink.clear();
      auto c = shortest_cycle(alive);
      if (!c) return count;
      ++count;
      for (int v : *c) alive[v] = 0;
    }
  }

  void search(std::vector<char> alive, std::vector<int> chosen) {
    budget_.charge();
    reduce(alive, chosen);
    if (chosen.size() >= best_.size()) return;
    auto c = shortest_cycle(alive);
    if (!c) {
      best_ = chosen;
      return;
    }
    if (chosen.size() + disjoint_cycles(alive) >= best_.size()) return;
    for (int v : pick_order(*c, alive)) {
      std::vector<char> next = alive;
      next[v] = 0;
      chosen.push_back(v);
      search(next, chosen);
      chosen.pop_back();
    }
  }

  const LocalMulti& g_;
  Budget& budget_;
  std::vector<int> best_;
};

VertexList shortest_cycle_cover(Graph h) {
  VertexList out;
  while (auto c = shortest_cycle(h)) {
    Vertex v = *std::min_element(c->begin(), c->end());
    out.push_back(v);
    h = h.without(v);
  }
  return out;
}

}  // namespace

bool is_fvs(const Graph& g, std::span<const Vertex> x) { return is_forest(g.without(x)); }

VertexList exact_fvs(const Graph& g, std::uint64_t budget) {
  Graph c = core(g).graph;
  if (c.empty()) return {};
  LocalMulti m = localize(suppress_degree_two(c));
  Budget meter(budget);
  MultiFvsSearch search(m, meter);
  VertexList out;
  for (int i : search.solve()) out.push_back(m.ids[i]);
  out = sorted_unique(std::move(out));
  if (!is_fvs(g, out)) throw std::logic_error("exact_fvs: result is not a feedback vertex set");
  return out;
}

FvsResult log_fvs(const Graph& g, const FvsConfig& cfg) {
  if (cfg.girth_target < 3) throw std::invalid_argument("girth_target must be >= 3");
  if (cfg.fallback_rank_threshold == 0 || cfg.fallback_node_budget == 0) {
    throw std::invalid_argument("FVS thresholds must be positive");
  }
  FvsResult out;
  out.input_rank = cycle_rank(g);

  auto sparse = sparsify_girth(g, cfg.girth_target);
  out.phases.sparsify_removed = sparse.removed;
  Graph h = std::move(sparse.graph);
  while (true) {
    h = core(h).graph;
    if (h.empty()) break;
    const std::size_t rank = cycle_rank(h);
    if (rank <= cfg.fallback_rank_threshold) {
      try {
        out.phases.fallback_removed = exact_fvs(h, cfg.fallback_node_budget);
      } catch (const BudgetExceeded&) {
        out.phases.fallback_removed = sorted_unique(shortest_cycle_cover(h));
        out.phases.fallback_heuristic = true;
      }
      break;
    }
    auto cyclic = on_some_cycle(h);
    Vertex pick = -1;
    for (Vertex v : h.vertices()) {
      if (cyclic[v] && (pick < 0 || h.degree(v) > h.degree(pick))) pick = v;
    }
    Graph next = h.without(pick);
    out.phases.greedy_steps.push_back({pick, h.degree(pick), rank, cycle_rank(next)});
    h = std::move(next);
  }

  VertexList all = out.phases.sparsify_removed;
  for (const auto& step : out.phases.greedy_steps) all.push_back(step.vertex);
  all.insert(all.end(), out.phases.fallback_removed.begin(), out.phases.fallback_removed.end());
  out.vertices = sorted_unique(std::move(all));
  out.valid = is_fvs(g, out.vertices);
  if (!out.valid) throw std::logic_error("log_fvs: produced set is not a feedback vertex set");
  return out;
}

RichVertex rich_ratio(const Graph& g) {
  const std::size_t rank = cycle_rank(g);
  if (rank == 0) throw std::invalid_argument("rich_ratio: graph is a forest");
  Vertex v = *max_degree_vertex(g);
  return {v, Rational(static_cast<std::int64_t>(g.degree(v)), static_cast<std::int64_t>(rank))};
}

}  // namespace okpack
