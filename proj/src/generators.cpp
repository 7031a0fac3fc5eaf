#include "okpack/generators.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace okpack {

namespace {

void check_order(int k, int max_k) {
  if (k < 1 || k > max_k) {
    throw std::invalid_argument("k must lie in [1, " + std::to_string(max_k) +
                                "], got " + std::to_string(k));
  }
}

// Truncated BFS distance; returns limit + 1 if v is farther or unreachable.
std::size_t bounded_distance(const std::vector<VertexList>& adj, Vertex s, Vertex t,
                             std::size_t limit) {
  if (s == t) return 0;
  std::vector<std::size_t> dist(adj.size(), limit + 1);
  VertexList frontier{s};
  dist[s] = 0;
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    Vertex u = frontier[i];
    if (dist[u] >= limit) break;
    for (Vertex w : adj[u]) {
      if (dist[w] <= limit) continue;
      dist[w] = dist[u] + 1;
      if (w == t) return dist[w];
      frontier.push_back(w);
    }
  }
  return limit + 1;
}

}  // namespace

std::vector<int> word_w(int k, int max_k) {
  check_order(k, max_k);
  std::vector<int> w{1};
  for (int i = 2; i <= k; ++i) {
    std::vector<int> next;
    next.reserve(2 * w.size() + 1);
    for (int x : w) next.push_back(x + 1);
    next.push_back(1);
    for (int x : w) next.push_back(x + 1);
    w = std::move(next);
  }
  return w;
}

std::vector<int> word_w_by_valuation(int k, int max_k) {
  check_order(k, max_k);
  std::size_t len = (std::size_t{1} << k) - 1;
  std::vector<int> w(len);
  for (std::size_t j = 1; j <= len; ++j) w[j - 1] = k - std::countr_zero(j);
  return w;
}

GkGraph gk(int k, int max_k) {
  auto word = word_w(k, max_k);
  const auto path_len = word.size();
  const auto n = path_len + static_cast<std::size_t>(k);
  GkLabels labels;
  labels.word = word;
  for (std::size_t l = 0; l < path_len; ++l) labels.path_ids.push_back(static_cast<Vertex>(l));
  for (int i = 1; i <= k; ++i) {
    labels.star_ids.push_back(static_cast<Vertex>(path_len + static_cast<std::size_t>(i) - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(2 * path_len);
  for (std::size_t l = 0; l + 1 < path_len; ++l) {
    edges.push_back({static_cast<Vertex>(l), static_cast<Vertex>(l + 1)});
  }
  for (int i = 1; i <= k; ++i) {
    for (std::size_t l = 0; l < path_len; ++l) {
      if (word[l] == i) edges.push_back({static_cast<Vertex>(l), labels.star_ids[i - 1]});
    }
  }
  return {Graph(n, edges), std::move(labels)};
}

VertexList gk_fvs_certificate(int k) {
  if (k < 2) throw std::invalid_argument("FVS certificate needs k >= 2");
  auto [g, labels] = gk(k);
  return VertexList(labels.star_ids.begin() + 1, labels.star_ids.end());
}

MinorCertificate gk_minor_certificate(int k) {
  auto [g, labels] = gk(k);
  const auto& word = labels.word;
  MinorCertificate cert;
  if (k == 1) {
    // G_1 is a single edge; the generic rule leaves the last set empty.
    cert.branch_sets = {{labels.star_ids[0]}, {labels.path_ids[0]}};
    cert.target = Graph(2, {{0, 1}});
    return cert;
  }
  for (int i = 1; i <= k; ++i) {
    auto leftmost = static_cast<std::size_t>(
        std::find(word.begin(), word.end(), i) - word.begin());
    VertexList set{labels.star_ids[i - 1]};
    for (std::size_t l = leftmost + 1; l-- > 0;) {
      if (word[l] == i + 1) break;
      set.push_back(labels.path_ids[l]);
    }
    cert.branch_sets.push_back(sorted_unique(std::move(set)));
  }
  auto middle = static_cast<std::size_t>(std::find(word.begin(), word.end(), 1) - word.begin());
  VertexList right;
  for (std::size_t l = middle + 1; l < word.size(); ++l) right.push_back(labels.path_ids[l]);
  cert.branch_sets.push_back(std::move(right));
  cert.target = complete(static_cast<std::size_t>(k) + 1);
  return cert;
}

ForestPlus forest_plus_edges(std::size_t n, std::size_t extra, std::size_t min_girth,
                             std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("forest_plus_edges needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<VertexList> adj(n);
  std::vector<Edge> edges;
  std::bernoulli_distribution attach(0.9);
  for (std::size_t i = 1; i < n; ++i) {
    if (!attach(rng)) continue;
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    Vertex u = order[i];
    Vertex v = order[pick(rng)];
    edges.push_back({std::min(u, v), std::max(u, v)});
    adj[u].push_back(v);
    adj[v].push_back(u);
  }

  ForestPlus out;
  out.extra_requested = extra;
  if (n >= 2) {
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    const std::size_t need = min_girth > 0 ? min_girth - 1 : 0;
    for (std::size_t tries = 0; tries < 50 * extra && out.extra_placed < extra; ++tries) {
      Vertex u = pick(rng);
      Vertex v = pick(rng);
      if (u == v) continue;
      if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end()) continue;
      // The new edge closes a cycle of length dist(u, v) + 1.
      if (bounded_distance(adj, u, v, need) < need) continue;
      edges.push_back({std::min(u, v), std::max(u, v)});
      adj[u].push_back(v);
      adj[v].push_back(u);
      ++out.extra_placed;
    }
  }
  out.graph = Graph(n, edges);
  return out;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  return Graph(n, edges);
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < a; ++u) {
    for (std::size_t v = 0; v < b; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(a + v)});
    }
  }
  return Graph(a + b, edges);
}

Graph theta(std::size_t p1, std::size_t p2, std::size_t p3) {
  std::size_t lengths[] = {p1, p2, p3};
  if (std::count(std::begin(lengths), std::end(lengths), std::size_t{1}) > 1 ||
      std::count(std::begin(lengths), std::end(lengths), std::size_t{0}) > 0) {
    throw std::invalid_argument("theta needs positive path lengths, at most one equal to 1");
  }
  std::vector<Edge> edges;
  Vertex next = 2;
  for (std::size_t len : lengths) {
    Vertex prev = 0;
    for (std::size_t i = 1; i < len; ++i) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back({prev, 1});
  }
  return Graph(static_cast<std::size_t>(next), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto shift = static_cast<Vertex>(a.id_bound());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  Graph out(a.id_bound() + b.id_bound(), edges);
  VertexList absent;
  for (std::size_t v = 0; v < a.id_bound(); ++v) {
    if (!a.contains(static_cast<Vertex>(v))) absent.push_back(static_cast<Vertex>(v));
  }
  for (std::size_t v = 0; v < b.id_bound(); ++v) {
    if (!b.contains(static_cast<Vertex>(v))) absent.push_back(static_cast<Vertex>(v) + shift);
  }
  return absent.empty() ? out : out.without(absent);
}

}  // namespace okpack
