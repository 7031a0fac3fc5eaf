#include "okpack/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>

#include "okpack/errors.hpp"

namespace okpack::oracles {

namespace {

using Mask = std::uint32_t;

// Graph on 0..n-1 with bitmask adjacency, ids ordered like the original.
struct Dense {
  VertexList ids;
  std::vector<Mask> adj;
  std::size_t n() const { return ids.size(); }
  Mask all() const { return n() == 32 ? ~Mask{0} : (Mask{1} << n()) - 1; }
};

Dense densify(const Graph& g, std::size_t limit, const char* who) {
  if (g.order() > limit) {
    throw TooLarge(std::string(who) + ": " + std::to_string(g.order()) +
                   " vertices exceeds the limit of " + std::to_string(limit));
  }
  Dense d;
  d.ids = g.vertices();
  std::vector<int> index(g.id_bound(), -1);
  for (std::size_t i = 0; i < d.ids.size(); ++i) index[d.ids[i]] = static_cast<int>(i);
  d.adj.assign(d.ids.size(), 0);
  for (const Edge& e : g.edges()) {
    d.adj[index[e.u]] |= Mask{1} << index[e.v];
    d.adj[index[e.v]] |= Mask{1} << index[e.u];
  }
  return d;
}

VertexList to_ids(const Dense& d, Mask m) {
  VertexList out;
  for (; m; m &= m - 1) out.push_back(d.ids[std::countr_zero(m)]);
  return out;
}

int alpha(const Dense& d, Mask mask) {
  if (!mask) return 0;
  int best_v = -1;
  int best_deg = -1;
  for (Mask m = mask; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int deg = std::popcount(d.adj[v] & mask);
    if (deg > best_deg) {
      best_deg = deg;
      best_v = v;
    }
  }
  Mask bit = Mask{1} << best_v;
  if (best_deg <= 1) {
    // A vertex of degree <= 1 is always in some maximum independent set.
    for (Mask m = mask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      if (std::popcount(d.adj[v] & mask) <= 1) {
        Mask vb = Mask{1} << v;
        return 1 + alpha(d, mask & ~(d.adj[v] | vb));
      }
    }
  }
  return std::max(alpha(d, mask & ~bit), 1 + alpha(d, mask & ~(d.adj[best_v] | bit)));
}

bool acyclic_without(const Graph& g, const std::vector<char>& removed) {
  std::vector<Vertex> parent(g.id_bound());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<Vertex(Vertex)> find = [&](Vertex x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const Edge& e : g.edges()) {
    if (removed[e.u] || removed[e.v]) continue;
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

}  // namespace

VertexList brute_mis(const Graph& g) {
  Dense d = densify(g, kMisLimit, "brute_mis");
  Mask remaining = d.all();
  int need = alpha(d, remaining);
  Mask chosen = 0;
  for (std::size_t v = 0; v < d.n() && need > 0; ++v) {
    Mask bit = Mask{1} << v;
    if (!(remaining & bit)) continue;
    Mask rest = remaining & ~(d.adj[v] | bit);
    if (1 + alpha(d, rest) == need) {
      chosen |= bit;
      remaining = rest;
      --need;
    } else {
      remaining &= ~bit;
    }
  }
  return to_ids(d, chosen);
}

VertexList brute_vertex_cover(const Graph& g) {
  Dense d = densify(g, kMisLimit, "brute_vertex_cover");
  Mask best = d.all();
  std::function<void(Mask, Mask)> go = [&](Mask alive, Mask cover) {
    if (std::popcount(cover) >= std::popcount(best)) return;
    for (Mask m = alive; m; m &= m - 1) {
      int u = std::countr_zero(m);
      Mask nb = d.adj[u] & alive;
      if (!nb) continue;
      int v = std::countr_zero(nb);
      go(alive & ~(Mask{1} << u), cover | (Mask{1} << u));
      go(alive & ~(Mask{1} << v), cover | (Mask{1} << v));
      return;
    }
    best = cover;
  };
  go(d.all(), 0);
  return to_ids(d, best);
}

std::optional<ColoringAssignment> brute_coloring(const Graph& g, int q,
                                                 const ListAssignment* lists) {
  Dense d = densify(g, kColorLimit, "brute_coloring");
  std::vector<int> color(d.n(), 0);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == d.n()) return true;
    for (int c = 1; c <= q; ++c) {
      if (lists && !((*lists)[d.ids[i]] & color_bit(c))) continue;
      bool clash = false;
      for (Mask m = d.adj[i]; m && !clash; m &= m - 1) {
        clash = color[std::countr_zero(m)] == c;
      }
      if (clash) continue;
      color[i] = c;
      if (go(i + 1)) return true;
      color[i] = 0;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  ColoringAssignment out{std::vector<int>(g.id_bound(), 0)};
  for (std::size_t i = 0; i < d.n(); ++i) out.colors[d.ids[i]] = color[i];
  return out;
}

std::optional<ColoringAssignment> brute_3color(const Graph& g, const ListAssignment* lists) {
  return brute_coloring(g, 3, lists);
}

int brute_chromatic_number(const Graph& g) {
  for (int q = 0;; ++q) {
    if (q == 0 && g.empty()) return 0;
    if (q > 0 && brute_coloring(g, q)) return q;
  }
}

VertexList brute_fvs(const Graph& g) {
  const std::size_t rank = cycle_rank(g);
  if (g.order() > kFvsLimit && rank > kFvsRankLimit) {
    throw TooLarge("brute_fvs: " + std::to_string(g.order()) + " vertices and cycle rank " +
                   std::to_string(rank));
  }
  // A minimum FVS never uses a vertex outside the 2-core.
  VertexList candidates = core(g).graph.vertices();
  std::vector<char> removed(g.id_bound(), 0);
  for (std::size_t size = 0; size <= rank; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    if (size > candidates.size()) break;
    while (true) {
      for (std::size_t i : pick) removed[candidates[i]] = 1;
      bool ok = acyclic_without(g, removed);
      for (std::size_t i : pick) removed[candidates[i]] = 0;
      if (ok) {
        VertexList out;
        for (std::size_t i : pick) out.push_back(candidates[i]);
        return out;
      }
      // next combination
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == candidates.size() - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw std::logic_error("brute_fvs: no FVS within cycle rank");
}

int brute_treewidth(const Graph& g) {
  Dense d = densify(g, kTreewidthLimit, "brute_treewidth");
  const std::size_t n = d.n();
  if (n == 0) return -1;
  // tw[S]: best width of an elimination of S placed first.
  std::vector<std::int8_t> tw(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    int best = 127;
    for (Mask m = s; m; m &= m - 1) {
      int v = std::countr_zero(m);
      Mask rest = s & ~(Mask{1} << v);
      int sub = tw[rest];
      if (sub >= best) continue;
      // Q(rest, v): vertices outside rest + v reachable from v through rest.
      Mask comp = Mask{1} << v;
      Mask frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= d.adj[std::countr_zero(f)];
        next &= rest & ~comp;
        comp |= next;
        frontier = next;
      }
      Mask boundary = 0;
      for (Mask c = comp; c; c &= c - 1) boundary |= d.adj[std::countr_zero(c)];
      boundary &= ~(rest | (Mask{1} << v));
      best = std::min(best, std::max(sub, std::popcount(boundary)));
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  return tw[d.all()];
}

bool verify_minor(const Graph& g, const MinorCertificate& cert) {
  const auto& sets = cert.branch_sets;
  if (sets.size() != cert.target.id_bound()) return false;
  std::vector<int> owner(g.id_bound(), -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) return false;
    for (Vertex v : sets[i]) {
      if (!g.contains(v) || owner[v] != -1) return false;
      owner[v] = static_cast<int>(i);
    }
    // connectivity of the induced subgraph
    VertexList reached{sets[i].front()};
    std::vector<char> seen(g.id_bound(), 0);
    seen[sets[i].front()] = 1;
    for (std::size_t h = 0; h < reached.size(); ++h) {
      for (Vertex w : g.neighbors(reached[h])) {
        if (owner[w] == static_cast<int>(i) && !seen[w]) {
          seen[w] = 1;
          reached.push_back(w);
        }
      }
    }
    // owner[] is only final for sets up to i, which is all this set needs.
    if (reached.size() != sets[i].size()) return false;
  }
  for (const Edge& e : cert.target.edges()) {
    bool found = false;
    for (Vertex v : sets[e.u]) {
      for (Vertex w : g.neighbors(v)) {
        if (owner[w] == e.v) {
          found = true;
          break;
        }
      }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

std::optional<PackingWitness> brute_independent_cycles(const Graph& g, int k) {
  Dense d = densify(g, kCycleLimit, "brute_independent_cycles");
  if (k <= 0) return PackingWitness{};
  // Vertex sets whose induced subgraph has minimum degree >= 2; every cycle's
  // vertex set contains one and each one contains a cycle.
  std::vector<Mask> supports;
  for (Mask s = 1; s <= d.all() && s != 0; ++s) {
    bool ok = true;
    for (Mask m = s; m && ok; m &= m - 1) ok = std::popcount(d.adj[std::countr_zero(m)] & s) >= 2;
    if (ok) supports.push_back(s);
    if (s == d.all()) break;
  }
  std::vector<Mask> closed(supports.size());
  for (std::size_t i = 0; i < supports.size(); ++i) {
    Mask c = supports[i];
    for (Mask m = supports[i]; m; m &= m - 1) c |= d.adj[std::countr_zero(m)];
    closed[i] = c;
  }
  std::vector<std::size_t> chosen;
  std::function<bool(std::size_t, Mask)> go = [&](std::size_t from, Mask blocked) {
    if (chosen.size() == static_cast<std::size_t>(k)) return true;
    for (std::size_t i = from; i < supports.size(); ++i) {
      if (supports[i] & blocked) continue;
      chosen.push_back(i);
      if (go(i + 1, blocked | closed[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!go(0, 0)) return std::nullopt;

  PackingWitness out;
  for (std::size_t i : chosen) {
    Mask s = supports[i];
    // Walk without backtracking inside the support until a vertex repeats.
    std::vector<int> position(d.n(), -1);
    std::vector<int> walk;
    int prev = -1;
    int cur = std::countr_zero(s);
    while (position[cur] == -1) {
      position[cur] = static_cast<int>(walk.size());
      walk.push_back(cur);
      Mask options = d.adj[cur] & s;
      if (prev >= 0) options &= ~(Mask{1} << prev);
      prev = cur;
      cur = std::countr_zero(options);
    }
    VertexList cyc;
    for (std::size_t j = static_cast<std::size_t>(position[cur]); j < walk.size(); ++j) {
      cyc.push_back(d.ids[walk[j]]);
    }
    out.cycles.push_back(canonical_cycle(std::move(cyc)));
  }
  return out;
}

}  // namespace okpack::oracles
