#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "okpack/bench.hpp"
#include "okpack/branching.hpp"
#include "okpack/detectors.hpp"
#include "okpack/errors.hpp"
#include "okpack/fvs.hpp"
#include "okpack/generators.hpp"
#include "okpack/io.hpp"
#include "okpack/oracles.hpp"
#include "okpack/solvers.hpp"

namespace py = pybind11;
using namespace okpack;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph(n, es);
}

std::vector<std::pair<Vertex, Vertex>> edge_pairs(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

py::dict fvs_dict(const FvsResult& r) {
  py::list steps;
  for (const auto& s : r.phases.greedy_steps) {
    py::dict d;
    d["vertex"] = s.vertex;
    d["degree"] = s.degree;
    d["rank_before"] = s.rank_before;
    d["rank_after"] = s.rank_after;
    steps.append(d);
  }
  py::dict phases;
  phases["sparsify_removed"] = r.phases.sparsify_removed;
  phases["greedy_steps"] = steps;
  phases["fallback_removed"] = r.phases.fallback_removed;
  phases["fallback_heuristic"] = r.phases.fallback_heuristic;
  py::dict out;
  out["fvs"] = r.vertices;
  out["phases"] = phases;
  out["input_rank"] = r.input_rank;
  out["valid"] = r.valid;
  return out;
}

// Colors of present vertices keyed by vertex id.
py::object coloring_dict(const Graph& g, const std::optional<ColoringAssignment>& c) {
  if (!c) return py::none();
  py::dict out;
  for (Vertex v : g.vertices()) out[py::int_(v)] = (*c)[v];
  return out;
}

py::dict stats_dict(const BranchStats& s) {
  py::dict d;
  d["nodes_expanded"] = s.nodes_expanded;
  d["packings_enumerated"] = s.packings_enumerated;
  d["base_case_calls"] = s.base_case_calls;
  d["max_depth"] = s.max_depth;
  return d;
}

}  // namespace

PYBIND11_MODULE(_okpack, m) {
  m.doc() = "Feedback vertex sets, cycle packings and exact solvers for O_k-free graphs.";

  auto search_limit = py::register_exception<SearchLimitError>(m, "SearchLimitError");
  py::register_exception<CapExceeded>(m, "CapExceeded", search_limit.ptr());
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", search_limit.ptr());
  py::register_exception<TooLarge>(m, "TooLarge", search_limit.ptr());
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<Vertex, Vertex>>{})
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("id_bound", &Graph::id_bound)
      .def_property_readonly("edges", &edge_pairs)
      .def("vertices", &Graph::vertices)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.contains(v)) throw py::index_error("no such vertex");
        auto nb = g.neighbors(v);
        return VertexList(nb.begin(), nb.end());
      })
      .def("degree", [](const Graph& g, Vertex v) {
        if (!g.contains(v)) throw py::index_error("no such vertex");
        return g.degree(v);
      })
      .def("has_edge", &Graph::has_edge)
      .def("without", [](const Graph& g, const VertexList& x) { return g.without(x); })
      .def("induced", [](const Graph& g, const VertexList& keep) { return g.induced(keep); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(order=" << g.order() << ", size=" << g.size() << ")";
        return s.str();
      });

  // generators
  m.def("gk", [](int k) {
    auto r = gk(k);
    py::dict labels;
    labels["word"] = r.labels.word;
    labels["path_ids"] = r.labels.path_ids;
    labels["star_ids"] = r.labels.star_ids;
    return py::make_tuple(r.graph, labels);
  }, py::arg("k"));
  m.def("word_w", [](int k) { return word_w(k); }, py::arg("k"));
  m.def("gk_fvs_certificate", &gk_fvs_certificate, py::arg("k"));
  m.def("forest_plus_edges", [](std::size_t n, std::size_t extra, std::size_t min_girth, std::uint64_t seed) {
    return forest_plus_edges(n, extra, min_girth, seed).graph;
  }, py::arg("n"), py::arg("extra"), py::arg("min_girth"), py::arg("seed"));
  m.def("random_graph", &random_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("cycle", &cycle, py::arg("n"));
  m.def("path", &path, py::arg("n"));
  m.def("complete", &complete, py::arg("n"));
  m.def("complete_bipartite", &complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("theta", &theta, py::arg("p1"), py::arg("p2"), py::arg("p3"));

  // structure
  m.def("cycle_rank", py::overload_cast<const Graph&>(&cycle_rank));
  m.def("core", [](const Graph& g) { return core(g).graph; });
  m.def("girth", &girth);
  m.def("shortest_cycle", [](const Graph& g) { return shortest_cycle(g); });
  m.def("average_degree", [](const Graph& g) { return fraction(average_degree(g)); });
  m.def("icp", [](const Graph& g, std::uint64_t cap) {
    auto r = icp(g, cap);
    return py::make_tuple(r.value, r.witness.cycles);
  }, py::arg("g"), py::arg("cap") = kDefaultCycleCap);
  m.def("is_ok_free", [](const Graph& g, int k, std::uint64_t cap) {
    return is_ok_free(g, k, cap).ok_free;
  }, py::arg("g"), py::arg("k"), py::arg("cap") = kDefaultCycleCap);
  m.def("has_ktt_subgraph", [](const Graph& g, int t) {
    auto w = has_ktt_subgraph(g, t);
    return w ? py::object(py::make_tuple(w->left, w->right)) : py::object(py::none());
  }, py::arg("g"), py::arg("t"));
  m.def("find_bananas", [](const Graph& g) {
    py::list out;
    for (const auto& b : find_bananas(g)) out.append(py::make_tuple(b.u, b.v, b.paths));
    return out;
  });
  m.def("banana_hitting_set", &banana_hitting_set);
  m.def("sparsify_girth", [](const Graph& g, std::size_t ell) {
    auto r = sparsify_girth(g, ell);
    return py::make_tuple(r.removed, r.graph);
  }, py::arg("g"), py::arg("ell"));

  // fvs
  m.def("log_fvs", [](const Graph& g, std::size_t girth_target, std::size_t fallback_rank) {
    FvsConfig cfg;
    cfg.girth_target = girth_target;
    cfg.fallback_rank_threshold = fallback_rank;
    return fvs_dict(log_fvs(g, cfg));
  }, py::arg("g"), py::arg("girth_target") = 11, py::arg("fallback_rank") = 16);
  m.def("exact_fvs", &exact_fvs, py::arg("g"), py::arg("budget") = 2'000'000);
  m.def("is_fvs", [](const Graph& g, const VertexList& x) { return is_fvs(g, x); });
  m.def("rich_ratio", [](const Graph& g) {
    auto r = rich_ratio(g);
    return py::make_tuple(r.vertex, fraction(r.ratio));
  });

  // solvers
  m.def("mis_via_fvs", [](const Graph& g, const VertexList& x) { return mis_via_fvs(g, x); });
  m.def("min_vertex_cover_via_fvs",
        [](const Graph& g, const VertexList& x) { return min_vertex_cover_via_fvs(g, x); });
  m.def("q_coloring_via_fvs", [](const Graph& g, const VertexList& x, int q) {
    return coloring_dict(g, q_coloring_via_fvs(g, x, q));
  });
  m.def("chromatic_number_via_fvs",
        [](const Graph& g, const VertexList& x) { return chromatic_number_via_fvs(g, x); });

  // branching
  m.def("qmis", [](const Graph& g, int max_q) {
    BranchConfig cfg;
    cfg.max_q = max_q;
    auto r = qmis(g, cfg);
    return py::make_tuple(r.vertices, stats_dict(r.stats));
  }, py::arg("g"), py::arg("max_q") = 3);
  m.def("three_coloring", [](const Graph& g, int max_q) {
    BranchConfig cfg;
    cfg.max_q = max_q;
    auto r = three_coloring(g, cfg);
    return py::make_tuple(coloring_dict(g, r.coloring), stats_dict(r.stats));
  }, py::arg("g"), py::arg("max_q") = 3);

  // oracles
  m.def("brute_mis", &oracles::brute_mis);
  m.def("brute_fvs", &oracles::brute_fvs);
  m.def("brute_treewidth", &oracles::brute_treewidth);
  m.def("brute_3color", [](const Graph& g) { return coloring_dict(g, oracles::brute_3color(g)); });

  // io
  m.def("to_edge_list", &to_edge_list);
  m.def("from_edge_list", [](const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
  });
}
