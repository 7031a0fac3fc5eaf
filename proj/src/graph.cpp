#include "okpack/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace okpack {

Graph::Graph(std::size_t n) : adj_(n), present_(n, 1), order_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n ||
        static_cast<std::size_t>(v) >= n) {
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range for n=" +
                                  std::to_string(n));
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    auto key = (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    if (!seen.insert(key).second) continue;
    edges_.push_back({u, v});
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(std::vector<VertexList> adj, std::vector<char> present,
             std::vector<Edge> edges)
    : adj_(std::move(adj)), present_(std::move(present)), edges_(std::move(edges)) {
  order_ = static_cast<std::size_t>(std::count(present_.begin(), present_.end(), 1));
}

VertexList Graph::vertices() const {
  VertexList out;
  out.reserve(order_);
  for (std::size_t v = 0; v < present_.size(); ++v) {
    if (present_[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

Graph Graph::without(std::span<const Vertex> removed) const {
  std::vector<char> keep = present_;
  for (Vertex v : removed) {
    if (contains(v)) keep[v] = 0;
  }
  std::vector<VertexList> adj(adj_.size());
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (!keep[v]) continue;
    for (Vertex w : adj_[v]) {
      if (keep[w]) adj[v].push_back(w);
    }
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) {
    if (keep[e.u] && keep[e.v]) edges.push_back(e);
  }
  return Graph(std::move(adj), std::move(keep), std::move(edges));
}

Graph Graph::induced(std::span<const Vertex> keep_list) const {
  std::vector<char> keep(present_.size(), 0);
  for (Vertex v : keep_list) {
    if (contains(v)) keep[v] = 1;
  }
  VertexList removed;
  for (std::size_t v = 0; v < present_.size(); ++v) {
    if (present_[v] && !keep[v]) removed.push_back(static_cast<Vertex>(v));
  }
  return without(removed);
}

Graph Graph::compacted(VertexList* original_ids) const {
  VertexList ids = vertices();
  std::vector<Vertex> index(adj_.size(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back({index[e.u], index[e.v]});
  if (original_ids) *original_ids = ids;
  return Graph(ids.size(), edges);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.present_ == b.present_ && a.adj_ == b.adj_;
}

MultiGraph::MultiGraph(std::size_t id_bound, VertexList vertices,
                       std::vector<Edge> edges)
    : present_(id_bound, 0), vertices_(sorted_unique(std::move(vertices))),
      edges_(std::move(edges)) {
  for (Vertex v : vertices_) {
    if (v < 0 || static_cast<std::size_t>(v) >= id_bound) {
      throw std::invalid_argument("multigraph vertex out of range");
    }
    present_[v] = 1;
  }
  for (auto& e : edges_) {
    if (!contains(e.u) || !contains(e.v)) {
      throw std::invalid_argument("multigraph edge endpoint not a vertex");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
}

std::size_t MultiGraph::multiplicity(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto [lo, hi] = std::equal_range(edges_.begin(), edges_.end(), Edge{u, v});
  return static_cast<std::size_t>(hi - lo);
}

std::size_t MultiGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) {
    d += static_cast<std::size_t>(e.u == v) + static_cast<std::size_t>(e.v == v);
  }
  return d;
}

std::vector<VertexList> components(const Graph& g) {
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexList> out;
  for (Vertex s : g.vertices()) {
    if (seen[s]) continue;
    VertexList comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t cycle_rank(const Graph& g) {
  return g.size() + components(g).size() - g.order();
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::size_t cycle_rank(const MultiGraph& g) {
  DisjointSets sets(g.id_bound());
  std::size_t merges = 0;
  for (const Edge& e : g.edges()) merges += sets.unite(e.u, e.v) ? 1 : 0;
  // components = order - merges
  return g.size() + (g.order() - merges) - g.order();
}

bool is_forest(const Graph& g) { return cycle_rank(g) == 0; }

CoreResult core(const Graph& g) {
  std::vector<std::size_t> deg(g.id_bound(), 0);
  std::vector<char> removed(g.id_bound(), 0);
  std::deque<Vertex> queue;
  for (Vertex v : g.vertices()) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) queue.push_back(v);
  }
  ReductionTrace trace;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    trace.push_back({v, deg[v] == 0 ? RemovalReason::degree0 : RemovalReason::degree1});
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (--deg[w] == 1) queue.push_back(w);
    }
  }
  VertexList gone;
  gone.reserve(trace.size());
  for (const auto& r : trace) gone.push_back(r.vertex);
  return {g.without(gone), std::move(trace)};
}

namespace {

// Scratch space for repeated BFS runs over one graph.
struct BfsScratch {
  explicit BfsScratch(std::size_t n) : dist(n, -1), parent(n, -1) {}
  void reset() {
    for (Vertex v : touched) {
      dist[v] = -1;
      parent[v] = -1;
    }
    touched.clear();
  }
  std::vector<std::int64_t> dist;
  std::vector<Vertex> parent;
  VertexList touched;
};

struct Closing {
  std::size_t length;
  Vertex a;
  Vertex b;
};

// Shortest closed walk through `root` made of two BFS-tree paths and one
// non-tree edge, restricted to lengths < bound.
std::optional<Closing> bfs_closing(const Graph& g, Vertex root, std::size_t bound,
                                   BfsScratch& s) {
  s.reset();
  std::optional<Closing> best;
  std::size_t head = 0;
  s.dist[root] = 0;
  s.touched.push_back(root);
  while (head < s.touched.size()) {
    Vertex u = s.touched[head++];
    auto du = static_cast<std::size_t>(s.dist[u]);
    if (2 * du >= bound) break;
    for (Vertex w : g.neighbors(u)) {
      if (s.dist[w] < 0) {
        s.dist[w] = s.dist[u] + 1;
        s.parent[w] = u;
        s.touched.push_back(w);
      } else if (w != s.parent[u]) {
        std::size_t len = du + static_cast<std::size_t>(s.dist[w]) + 1;
        if (len < bound) {
          best = Closing{len, u, w};
          bound = len;
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<VertexList> shortest_cycle(const Graph& g, std::size_t max_len) {
  if (max_len < 3 || g.size() < 3) return std::nullopt;
  std::size_t bound = max_len == kUnbounded ? kUnbounded : max_len + 1;
  BfsScratch scratch(g.id_bound());
  std::optional<Closing> best;
  VertexList best_cycle;
  for (Vertex root : core(g).graph.vertices()) {
    auto c = bfs_closing(g, root, bound, scratch);
    if (!c) continue;
    best = c;
    bound = c->length;
    // Rebuild now: the scratch parents are overwritten by the next root.
    VertexList left;
    for (Vertex x = c->a; x != -1; x = scratch.parent[x]) left.push_back(x);
    std::reverse(left.begin(), left.end());
    VertexList right;
    for (Vertex x = c->b; x != root; x = scratch.parent[x]) right.push_back(x);
    best_cycle = left;
    best_cycle.insert(best_cycle.end(), right.begin(), right.end());
    if (bound == 3) break;
  }
  if (!best) return std::nullopt;
  return canonical_cycle(std::move(best_cycle));
}

std::optional<std::size_t> girth(const Graph& g) {
  auto c = shortest_cycle(g);
  if (!c) return std::nullopt;
  return c->size();
}

VertexList canonical_cycle(VertexList cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

bool is_cycle_of(const Graph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 3) return false;
  VertexList distinct(cycle.begin(), cycle.end());
  distinct = sorted_unique(std::move(distinct));
  if (distinct.size() != cycle.size()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

MultiGraph suppress_degree_two(const Graph& g) {
  std::vector<char> marked(g.id_bound(), 0);
  VertexList kept;
  std::vector<Edge> edges;
  for (Vertex u : g.vertices()) {
    if (g.degree(u) == 2) continue;
    kept.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (g.degree(w) != 2) {
        if (u < w) edges.push_back({u, w});
        continue;
      }
      if (marked[w]) continue;
      Vertex prev = u;
      Vertex cur = w;
      while (g.degree(cur) == 2) {
        marked[cur] = 1;
        auto nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      edges.push_back({std::min(u, cur), std::max(u, cur)});
    }
  }
  // Whatever degree-2 vertex is still unmarked lies on a bare cycle component.
  for (Vertex v : g.vertices()) {
    if (g.degree(v) != 2 || marked[v]) continue;
    kept.push_back(v);
    edges.push_back({v, v});
    Vertex prev = v;
    Vertex cur = v;
    do {
      marked[cur] = 1;
      auto nb = g.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    } while (cur != v);
  }
  return MultiGraph(g.id_bound(), std::move(kept), std::move(edges));
}

Rational average_degree(const Graph& g) {
  if (g.empty()) throw std::invalid_argument("average degree of the empty graph");
  return Rational(static_cast<std::int64_t>(2 * g.size()),
                  static_cast<std::int64_t>(g.order()));
}

std::optional<Vertex> max_degree_vertex(const Graph& g) {
  std::optional<Vertex> best;
  for (Vertex v : g.vertices()) {
    if (!best || g.degree(v) > g.degree(*best)) best = v;
  }
  return best;
}

VertexList sorted_unique(VertexList v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool is_subset(std::span<const Vertex> sub, std::span<const Vertex> super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

}  // namespace okpack
