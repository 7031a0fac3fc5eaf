#include "okpack/detectors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "clique.hpp"
#include "okpack/errors.hpp"

namespace okpack {

using detail::Bits;

namespace {

// Chordless cycles through `root` that stay inside `alive`, built as induced
// paths root, p1, ..., pj closed by an edge back to root. `above_root`
// restricts every other cycle vertex to ids > root. Each cycle is reported
// once (p1 < closing vertex).
class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, const Bits& alive)
      : g_(g), alive_(alive), inner_count_(g.id_bound(), 0), on_path_(g.id_bound(), 0),
        root_adj_(g.id_bound(), 0) {}

  void run(Vertex root, bool above_root, const std::function<void(const VertexList&)>& emit) {
    root_ = root;
    above_root_ = above_root;
    emit_ = &emit;
    for (Vertex w : g_.neighbors(root)) root_adj_[w] = 1;
    path_ = {root};
    on_path_[root] = 1;
    for (Vertex p1 : g_.neighbors(root)) {
      if (!usable(p1)) continue;
      push(p1);
      extend();
      pop();
    }
    on_path_[root] = 0;
    for (Vertex w : g_.neighbors(root)) root_adj_[w] = 0;
  }

 private:
  bool usable(Vertex w) const {
    return alive_.test(static_cast<std::size_t>(w)) && !on_path_[w] && (!above_root_ || w > root_);
  }

  void push(Vertex v) {
    path_.push_back(v);
    on_path_[v] = 1;
    for (Vertex w : g_.neighbors(v)) ++inner_count_[w];
  }

  void pop() {
    Vertex v = path_.back();
    for (Vertex w : g_.neighbors(v)) --inner_count_[w];
    on_path_[v] = 0;
    path_.pop_back();
  }

  void extend() {
    Vertex last = path_.back();
    Vertex first = path_[1];
    for (Vertex w : g_.neighbors(last)) {
      // w may only see `last` among the inner path vertices
      if (!usable(w) || inner_count_[w] != 1) continue;
      if (root_adj_[w]) {
        if (w > first) {
          path_.push_back(w);
          (*emit_)(path_);
          path_.pop_back();
        }
        continue;
      }
      push(w);
      extend();
      pop();
    }
  }

  const Graph& g_;
  const Bits& alive_;
  std::vector<int> inner_count_;
  std::vector<char> on_path_;
  std::vector<char> root_adj_;
  VertexList path_;
  Vertex root_ = -1;
  bool above_root_ = true;
  const std::function<void(const VertexList&)>* emit_ = nullptr;
};

Bits all_vertices(const Graph& g) {
  Bits b(g.id_bound());
  for (Vertex v : g.vertices()) b.set(static_cast<std::size_t>(v));
  return b;
}

PackingResult max_independent(const Graph& g, const std::vector<VertexList>& cycles) {
  const std::size_t n = g.id_bound();
  std::vector<Bits> body(cycles.size(), Bits(n));
  std::vector<Bits> closed(cycles.size(), Bits(n));
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (Vertex v : cycles[i]) {
      body[i].set(static_cast<std::size_t>(v));
      closed[i].set(static_cast<std::size_t>(v));
      for (Vertex w : g.neighbors(v)) closed[i].set(static_cast<std::size_t>(w));
    }
  }
  detail::CompatibilityGraph compat(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!body[i].intersects(closed[j])) compat.connect(i, j);
    }
  }
  Budget unlimited(kUnbounded);
  PackingResult out;
  for (std::size_t i : detail::maximum_clique(compat, unlimited)) {
    out.witness.cycles.push_back(cycles[i]);
  }
  out.value = out.witness.size();
  return out;
}

}  // namespace

std::vector<VertexList> enumerate_induced_cycles(const Graph& g, std::uint64_t cap) {
  std::vector<VertexList> out;
  Bits alive = all_vertices(g);
  InducedPathSearch search(g, alive);
  std::function<void(const VertexList&)> emit = [&](const VertexList& c) {
    if (out.size() >= cap) {
      throw CapExceeded("induced cycle enumeration", cap, out.size() + 1);
    }
    out.push_back(c);
  };
  for (Vertex s : core(g).graph.vertices()) search.run(s, true, emit);
  return out;
}

PackingResult icp(const Graph& g, std::uint64_t cap) {
  return max_independent(g, enumerate_induced_cycles(g, cap));
}

OkFreeResult is_ok_free(const Graph& g, int k, std::uint64_t cap) {
  if (k < 1) throw std::invalid_argument("is_ok_free needs k >= 1");
  auto packing = icp(g, cap);
  OkFreeResult out;
  out.ok_free = packing.value < static_cast<std::size_t>(k);
  if (!out.ok_free) {
    packing.witness.cycles.resize(static_cast<std::size_t>(k));
    out.witness = std::move(packing.witness);
  }
  return out;
}

namespace {

class CyclePacker {
 public:
  CyclePacker(const Graph& g, std::uint64_t cap) : g_(g), cap_(cap) {}

  std::size_t solve(Bits alive) {
    reduce(alive);
    if (alive.none()) return 0;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second.value;
    if (++nodes_ > cap_) throw CapExceeded("cycle packing search", cap_, nodes_);

    // Highest degree inside alive, lowest id on ties.
    Vertex pivot = -1;
    std::size_t pivot_deg = 0;
    for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
      std::size_t d = inner_degree(static_cast<Vertex>(v), alive);
      if (pivot < 0 || d > pivot_deg) {
        pivot = static_cast<Vertex>(v);
        pivot_deg = d;
      }
    }
    // Either the pivot is unused, or some packing uses a cycle through it,
    // which may be taken chordless in the current graph.
    Bits skip = alive;
    skip.reset(static_cast<std::size_t>(pivot));
    Entry best{solve(skip), pivot, {}};

    std::vector<VertexList> through;
    InducedPathSearch search(g_, alive);
    search.run(pivot, false, [&](const VertexList& c) { through.push_back(c); });
    for (const auto& c : through) {
      Bits rest = alive;
      for (Vertex v : c) rest.reset(static_cast<std::size_t>(v));
      std::size_t value = 1 + solve(rest);
      if (value > best.value) best = {value, pivot, c};
    }
    memo_.emplace(alive, best);
    return best.value;
  }

  PackingWitness witness(Bits alive) {
    PackingWitness out;
    while (true) {
      reduce(alive);
      if (alive.none()) break;
      const Entry& e = memo_.at(alive);
      if (e.value == 0) break;
      if (e.cycle.empty()) {
        alive.reset(static_cast<std::size_t>(e.pivot));
        continue;
      }
      out.cycles.push_back(canonical_cycle(e.cycle));
      for (Vertex v : e.cycle) alive.reset(static_cast<std::size_t>(v));
    }
    return out;
  }

 private:
  struct Entry {
    std::size_t value;
    Vertex pivot;
    VertexList cycle;  // empty: the pivot is left unused
  };

  std::size_t inner_degree(Vertex v, const Bits& alive) const {
    std::size_t d = 0;
    for (Vertex w : g_.neighbors(v)) d += alive.test(static_cast<std::size_t>(w)) ? 1 : 0;
    return d;
  }

  void reduce(Bits& alive) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto v = alive.find_first(); v != Bits::npos; v = alive.find_next(v)) {
        if (inner_degree(static_cast<Vertex>(v), alive) < 2) {
          alive.reset(v);
          changed = true;
        }
      }
    }
  }

  const Graph& g_;
  std::uint64_t cap_;
  std::uint64_t nodes_ = 0;
  std::map<Bits, Entry> memo_;
};

}  // namespace

PackingResult cp(const Graph& g, std::uint64_t cap) {
  CyclePacker packer(g, cap);
  Bits alive = all_vertices(g);
  PackingResult out;
  out.value = packer.solve(alive);
  out.witness = packer.witness(alive);
  if (out.witness.size() != out.value) {
    throw std::logic_error("cp: witness reconstruction disagrees with value");
  }
  return out;
}

namespace {

// `left` of size s with >= t common neighbours; returns the first t of them.
std::optional<std::pair<VertexList, VertexList>> find_biclique(const Graph& g, std::size_t s,
                                                               std::size_t t, Budget& budget) {
  auto common_of = [&](const VertexList& left) {
    VertexList common(g.neighbors(left[0]).begin(), g.neighbors(left[0]).end());
    for (std::size_t i = 1; i < left.size(); ++i) {
      VertexList next;
      auto nb = g.neighbors(left[i]);
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    return common;
  };
  auto finish = [&](VertexList left) {
    VertexList common = common_of(left);
    common.resize(t);
    return std::make_pair(std::move(left), std::move(common));
  };

  if (s == 1) {
    for (Vertex v : g.vertices()) {
      if (g.degree(v) >= t) return finish({v});
    }
    return std::nullopt;
  }
  if (s == 2) {
    std::vector<std::size_t> count(g.id_bound(), 0);
    VertexList touched;
    for (Vertex u : g.vertices()) {
      for (Vertex x : g.neighbors(u)) {
        for (Vertex w : g.neighbors(x)) {
          if (w <= u) continue;
          if (count[w]++ == 0) touched.push_back(w);
        }
      }
      std::sort(touched.begin(), touched.end());
      for (Vertex w : touched) {
        if (count[w] >= t) return finish({u, w});
      }
      for (Vertex w : touched) count[w] = 0;
      touched.clear();
    }
    return std::nullopt;
  }

  // Generic: grow the left side in increasing id order while at least t
  // common neighbours remain.
  VertexList left;
  std::function<bool(const VertexList&)> grow = [&](const VertexList& common) -> bool {
    budget.charge();
    if (left.size() == s) return true;
    // candidates: vertices sharing a neighbour in `common`, above left.back()
    VertexList cand;
    for (Vertex c : common) {
      for (Vertex z : g.neighbors(c)) {
        if (z > left.back()) cand.push_back(z);
      }
    }
    cand = sorted_unique(std::move(cand));
    for (Vertex z : cand) {
      VertexList next;
      auto nb = g.neighbors(z);
      std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(),
                            std::back_inserter(next));
      if (next.size() < t) continue;
      left.push_back(z);
      if (grow(next)) return true;
      left.pop_back();
    }
    return false;
  };
  for (Vertex v : g.vertices()) {
    if (g.degree(v) < t) continue;
    left = {v};
    VertexList common(g.neighbors(v).begin(), g.neighbors(v).end());
    if (grow(common)) return finish(left);
  }
  return std::nullopt;
}

}  // namespace

std::optional<KttWitness> has_kab(const Graph& g, int a, int b, std::uint64_t budget) {
  if (a < 1 || b < 1) throw std::invalid_argument("has_kab needs a, b >= 1");
  Budget meter(budget);
  const auto s = static_cast<std::size_t>(std::min(a, b));
  const auto t = static_cast<std::size_t>(std::max(a, b));
  auto found = find_biclique(g, s, t, meter);
  if (!found) return std::nullopt;
  if (a <= b) return KttWitness{found->first, found->second};
  return KttWitness{found->second, found->first};
}

std::optional<KttWitness> has_ktt_subgraph(const Graph& g, int t, std::uint64_t budget) {
  return has_kab(g, t, t, budget);
}

std::vector<Banana> find_bananas(const Graph& g) {
  MultiGraph m = suppress_degree_two(g);
  std::vector<Banana> out;
  const auto& edges = m.edges();
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    while (j < edges.size() && edges[j] == edges[i]) ++j;
    if (edges[i].u != edges[i].v && j - i >= 2) {
      out.push_back({edges[i].u, edges[i].v, j - i});
    }
    i = j;
  }
  return out;
}

namespace {

// Every maximal degree-2 path between two distinct branch vertices shrinks
// to its lowest-id internal vertex; paths closing on a single vertex and
// bare cycle components are dropped, as they carry no banana.
Graph shorten_degree_two_paths(const Graph& g) {
  std::vector<char> marked(g.id_bound(), 0);
  std::vector<Edge> edges;
  VertexList keep;
  for (Vertex u : g.vertices()) {
    if (g.degree(u) == 2) continue;
    keep.push_back(u);
    for (Vertex w : g.neighbors(u)) {
      if (g.degree(w) != 2) {
        if (u < w) edges.push_back({u, w});
        continue;
      }
      if (marked[w]) continue;
      Vertex prev = u;
      Vertex cur = w;
      Vertex rep = w;
      while (g.degree(cur) == 2) {
        marked[cur] = 1;
        rep = std::min(rep, cur);
        auto nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (cur == u) continue;
      keep.push_back(rep);
      edges.push_back({u, rep});
      edges.push_back({rep, cur});
    }
  }
  return Graph(g.id_bound(), edges).induced(keep);
}

}  // namespace

VertexList banana_hitting_set(const Graph& g) {
  VertexList hit;
  Graph current = g;
  while (!find_bananas(current).empty()) {
    Graph shortened = shorten_degree_two_paths(current);
    auto packing = disjoint_short_cycle_packing(shortened, 4);
    VertexList round;
    for (const auto& c : packing.cycles) round.insert(round.end(), c.begin(), c.end());
    if (round.empty()) {
      throw std::logic_error("banana_hitting_set: bananas left but no short cycle found");
    }
    hit.insert(hit.end(), round.begin(), round.end());
    current = current.without(round);
  }
  return sorted_unique(std::move(hit));
}

PackingWitness disjoint_short_cycle_packing(const Graph& g, std::size_t ell) {
  if (ell < 3) throw std::invalid_argument("cycle length bound must be >= 3");
  PackingWitness out;
  Graph current = g;
  while (auto c = shortest_cycle(current, ell)) {
    current = current.without(*c);
    out.cycles.push_back(std::move(*c));
  }
  return out;
}

SparsifyResult sparsify_girth(const Graph& g, std::size_t ell) {
  if (ell < 3) throw std::invalid_argument("girth target must be >= 3");
  SparsifyResult out;
  if (ell > 3) {
    for (const auto& c : disjoint_short_cycle_packing(g, ell - 1).cycles) {
      out.removed.insert(out.removed.end(), c.begin(), c.end());
    }
  }
  out.removed = sorted_unique(std::move(out.removed));
  out.graph = g.without(out.removed);
  auto gi = girth(out.graph);
  if (gi && *gi < ell) throw std::logic_error("sparsify_girth: girth post-condition violated");
  return out;
}

}  // namespace okpack
