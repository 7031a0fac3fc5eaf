// okpack command line: generate, analyze, and solve graphs, and run the
// log-FVS benchmark.
//
// Exit codes: 0 success, 1 failed check or generation, 2 bad flags or
// unreadable input, 3 search budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "okpack/bench.hpp"
#include "okpack/branching.hpp"
#include "okpack/detectors.hpp"
#include "okpack/errors.hpp"
#include "okpack/fvs.hpp"
#include "okpack/generators.hpp"
#include "okpack/io.hpp"
#include "okpack/oracles.hpp"
#include "okpack/solvers.hpp"

using nlohmann::json;
using namespace okpack;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  bool dimacs = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("path", path, "edge list file")->required();
    cmd->add_flag("--dimacs", dimacs, "read DIMACS 'p edge' format instead");
  }
  Graph load() const {
    try {
      return dimacs ? read_dimacs_file(path) : read_edge_list_file(path);
    } catch (const std::exception& e) {
      throw UsageError(path + ": " + e.what());
    }
  }
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- gen ----

struct GenOptions {
  std::string out;
  int k = 0;
  std::size_t n = 0;
  std::size_t extra = 0;
  std::size_t min_girth = 3;
  std::uint64_t seed = 0;
  std::vector<std::size_t> theta;
  std::size_t a = 0;
  std::size_t b = 0;
};

int write_graph(const Graph& g, const std::string& out) {
  if (out.empty()) {
    write_edge_list(std::cout, g);
    return kExitOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "cannot write " << out << '\n';
    return kExitFailed;
  }
  write_edge_list(f, g);
  return f ? kExitOk : kExitFailed;
}

void setup_gen(CLI::App& app, GenOptions& o, int& code) {
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->require_subcommand(1);
  gen->fallthrough();
  gen->add_option("--out", o.out, "output path (default stdout)");

  auto* gk_cmd = gen->add_subcommand("gk", "extremal graph G_k");
  gk_cmd->add_option("--k", o.k)->required()->check(CLI::Range(1, kMaxGkOrder));
  gk_cmd->callback([&] { code = write_graph(gk(o.k).graph, o.out); });

  auto* fp = gen->add_subcommand("forest-plus", "random forest plus extra edges");
  fp->add_option("--n", o.n)->required();
  fp->add_option("--extra", o.extra)->required();
  fp->add_option("--min-girth", o.min_girth)->check(CLI::Range(3, 1 << 20));
  fp->add_option("--seed", o.seed);
  fp->callback([&] {
    auto r = forest_plus_edges(o.n, o.extra, o.min_girth, o.seed);
    if (!r.complete()) {
      std::cerr << "placed only " << r.extra_placed << " of " << r.extra_requested
                << " extra edges\n";
      code = kExitFailed;
      return;
    }
    code = write_graph(r.graph, o.out);
  });

  auto* cyc = gen->add_subcommand("cycle", "cycle C_n");
  cyc->add_option("--n", o.n)->required()->check(CLI::Range(3, 1 << 26));
  cyc->callback([&] { code = write_graph(cycle(o.n), o.out); });

  auto* th = gen->add_subcommand("theta", "theta graph from three path lengths");
  th->add_option("--p", o.theta)->required()->expected(3);
  th->callback([&] {
    try {
      code = write_graph(theta(o.theta[0], o.theta[1], o.theta[2]), o.out);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  });

  auto* kab = gen->add_subcommand("kab", "complete bipartite K_{a,b}");
  kab->add_option("--a", o.a)->required();
  kab->add_option("--b", o.b)->required();
  kab->callback([&] { code = write_graph(complete_bipartite(o.a, o.b), o.out); });
}

// ---- analyze ----

struct AnalyzeOptions {
  Input input;
  bool girth = false;
  bool cycle_rank = false;
  bool icp = false;
  std::uint64_t icp_cap = kDefaultCycleCap;
  std::optional<int> ktt;
  std::optional<int> okfree;
};

int run_analyze(const AnalyzeOptions& o) {
  Graph g = o.input.load();
  json report{{"n", g.order()}, {"m", g.size()}};
  json witness = json::object();
  try {
    if (o.girth) {
      auto gi = girth(g);
      report["girth"] = gi ? json(*gi) : json(nullptr);
    }
    if (o.cycle_rank) report["cycle_rank"] = okpack::cycle_rank(g);
    if (o.ktt) {
      auto w = has_ktt_subgraph(g, *o.ktt);
      report["ktt"] = w.has_value();
      if (w) witness["ktt"] = to_json(*w);
    }
    if (o.okfree) {
      auto r = is_ok_free(g, *o.okfree, o.icp_cap);
      report["okfree"] = r.ok_free;
      if (r.witness) witness["okfree"] = to_json(*r.witness);
    }
    if (o.icp) {
      auto r = okpack::icp(g, o.icp_cap);
      report["icp"] = r.value;
      witness["icp"] = to_json(r.witness);
    }
  } catch (const SearchLimitError& e) {
    report["capped"] = true;
    if (!witness.empty()) report["witness"] = witness;
    emit(report);
    std::cerr << e.what() << '\n';
    return kExitFailed;
  }
  if (!witness.empty()) report["witness"] = witness;
  emit(report);
  return kExitOk;
}

// ---- fvs ----

struct FvsOptions {
  Input input;
  std::string mode = "log";
  FvsConfig cfg;
  std::uint64_t budget = 2'000'000;
  bool json_out = false;
};

int run_fvs(const FvsOptions& o) {
  Graph g = o.input.load();
  FvsResult r;
  if (o.mode == "log") {
    r = log_fvs(g, o.cfg);
  } else {
    r.input_rank = cycle_rank(g);
    r.vertices = exact_fvs(g, o.budget);
    r.phases.fallback_removed = r.vertices;
  }
  r.valid = is_fvs(g, r.vertices);
  if (o.json_out) {
    emit(to_json(r));
  } else {
    std::cout << "size " << r.vertices.size() << '\n';
    for (std::size_t i = 0; i < r.vertices.size(); ++i) {
      std::cout << (i ? " " : "") << r.vertices[i];
    }
    std::cout << '\n';
    std::cerr << "input rank " << r.input_rank << ", sparsify " << r.phases.sparsify_removed.size()
              << ", greedy " << r.phases.greedy_steps.size() << ", fallback "
              << r.phases.fallback_removed.size()
              << (r.phases.fallback_heuristic ? " (heuristic)" : "") << '\n';
    for (const auto& s : r.phases.greedy_steps) {
      std::cerr << "  delete " << s.vertex << " degree " << s.degree << " rank " << s.rank_before
                << " -> " << s.rank_after << '\n';
    }
  }
  if (!r.valid) {
    std::cerr << "result is not a feedback vertex set\n";
    return kExitFailed;
  }
  return kExitOk;
}

// ---- solve ----

struct SolveOptions {
  Input input;
  std::string problem;
  std::string method = "branch";
  std::string cross_check;
  BranchConfig cfg;
};

json stats_json(const BranchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded},
          {"packings_enumerated", s.packings_enumerated},
          {"base_case_calls", s.base_case_calls},
          {"max_depth", s.max_depth}};
}

VertexList complement(const Graph& g, const VertexList& set) {
  VertexList out;
  for (Vertex v : g.vertices()) {
    if (!std::binary_search(set.begin(), set.end(), v)) out.push_back(v);
  }
  return out;
}

// One solver run; "value" is what cross-checks compare.
json solve_once(const Graph& g, const SolveOptions& o, const std::string& method) {
  json out{{"problem", o.problem}, {"method", method}};
  auto fvs = [&] { return log_fvs(g, o.cfg.base_case_fvs_cfg).vertices; };

  if (o.problem == "mis" || o.problem == "vc") {
    VertexList mis;
    if (method == "branch") {
      auto r = qmis(g, o.cfg);
      mis = r.vertices;
      out["stats"] = stats_json(r.stats);
    } else if (method == "fvs") {
      mis = mis_via_fvs(g, fvs());
    } else {
      mis = oracles::brute_mis(g);
    }
    if (!is_independent_set(g, mis)) throw std::logic_error("unverified independent set");
    VertexList sol = o.problem == "mis" ? mis : complement(g, mis);
    if (o.problem == "vc" && !is_vertex_cover(g, sol)) throw std::logic_error("unverified cover");
    out["size"] = sol.size();
    out["vertices"] = sol;
    out["value"] = sol.size();
    return out;
  }

  if (o.problem == "color3") {
    std::optional<ColoringAssignment> c;
    if (method == "branch") {
      auto r = three_coloring(g, o.cfg);
      c = r.coloring;
      out["stats"] = stats_json(r.stats);
    } else if (method == "fvs") {
      c = q_coloring_via_fvs(g, fvs(), 3, o.cfg.node_budget);
    } else {
      c = oracles::brute_3color(g);
    }
    if (c && !is_proper_coloring(g, *c)) throw std::logic_error("unverified coloring");
    out["colorable"] = c.has_value();
    out["coloring"] = c ? coloring_json(g, *c) : json(nullptr);
    out["value"] = c.has_value();
    return out;
  }

  // chroma
  int chi = 0;
  if (method == "branch") {
    // branching decides 2- and 3-colorability; beyond that the FVS solver takes over
    if (g.empty()) {
      chi = 0;
    } else if (g.size() == 0) {
      chi = 1;
    } else if (list3color(g, ListAssignment::uniform(g.id_bound(), 2), o.cfg).coloring) {
      chi = 2;
    } else if (three_coloring(g, o.cfg).coloring) {
      chi = 3;
    } else {
      chi = chromatic_number_via_fvs(g, fvs(), o.cfg.node_budget);
    }
  } else if (method == "fvs") {
    chi = chromatic_number_via_fvs(g, fvs(), o.cfg.node_budget);
  } else {
    chi = oracles::brute_chromatic_number(g);
  }
  out["chromatic_number"] = chi;
  out["value"] = chi;
  return out;
}

int run_solve(const SolveOptions& o) {
  Graph g = o.input.load();
  json primary;
  try {
    primary = solve_once(g, o, o.method);
    if (!o.cross_check.empty()) {
      json other = solve_once(g, o, o.cross_check);
      bool agree = other["value"] == primary["value"];
      primary["cross_check"] = {{"method", o.cross_check}, {"value", other["value"]}, {"agree", agree}};
      if (!agree) {
        primary.erase("value");
        emit(primary);
        std::cerr << "methods disagree\n";
        return kExitFailed;
      }
    }
  } catch (const SearchLimitError& e) {
    std::cerr << e.what() << '\n';
    emit({{"problem", o.problem}, {"method", o.method}, {"budget_exceeded", true}});
    return kExitBudget;
  }
  primary.erase("value");
  emit(primary);
  return kExitOk;
}

// ---- bench ----

struct BenchOptions {
  int kmax = 0;
  std::vector<std::size_t> sizes;
  std::size_t extra = 3;
  std::size_t min_girth = 3;
  std::uint64_t seed = 1;
  std::string csv;
  FvsConfig cfg;
};

int run_bench_cmd(const std::vector<BenchInstance>& instances, const BenchOptions& o) {
  auto rows = run_bench(instances, o.cfg, worker_count());
  if (o.csv.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream f(o.csv, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << o.csv << '\n';
      return kExitFailed;
    }
    write_csv(f, rows);
  }
  for (const auto& r : rows) {
    if (!r.valid) {
      std::cerr << r.family << " k=" << r.k << ": invalid FVS\n";
      return kExitFailed;
    }
  }
  return kExitOk;
}

void add_fvs_cfg(CLI::App* cmd, FvsConfig& cfg) {
  cmd->add_option("--girth-target", cfg.girth_target)->check(CLI::Range(3, 1 << 20));
  cmd->add_option("--fallback-rank", cfg.fallback_rank_threshold)->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"okpack: feedback vertex sets and packings in O_k-free graphs"};
  app.require_subcommand(1);
  int code = kExitOk;

  GenOptions gen;
  setup_gen(app, gen, code);

  AnalyzeOptions an;
  auto* analyze = app.add_subcommand("analyze", "structural report as JSON");
  an.input.add_to(analyze);
  analyze->add_flag("--girth", an.girth);
  analyze->add_flag("--cycle-rank", an.cycle_rank);
  analyze->add_flag("--icp", an.icp, "maximum number of independent cycles");
  analyze->add_option("--icp-cap", an.icp_cap, "cycle enumeration cap (implies --icp)")
      ->each([&](const std::string&) { an.icp = true; });
  analyze->add_option("--ktt", an.ktt, "look for a K_{t,t} subgraph")->check(CLI::PositiveNumber);
  analyze->add_option("--okfree", an.okfree, "test for k independent cycles")
      ->check(CLI::PositiveNumber);
  analyze->callback([&] { code = run_analyze(an); });

  FvsOptions fv;
  auto* fvs_cmd = app.add_subcommand("fvs", "feedback vertex set");
  fv.input.add_to(fvs_cmd);
  fvs_cmd->add_option("--mode", fv.mode)->check(CLI::IsMember({"log", "exact"}));
  add_fvs_cfg(fvs_cmd, fv.cfg);
  fvs_cmd->add_option("--budget", fv.budget, "node budget of the exact search")
      ->check(CLI::PositiveNumber);
  fvs_cmd->add_flag("--json", fv.json_out);
  fvs_cmd->callback([&] {
    try {
      code = run_fvs(fv);
    } catch (const SearchLimitError& e) {
      std::cerr << e.what() << '\n';
      code = kExitBudget;
    }
  });

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "exact MIS, vertex cover, 3-coloring, chromatic number");
  solve->add_option("problem", so.problem)->required()->check(
      CLI::IsMember({"mis", "vc", "color3", "chroma"}));
  so.input.add_to(solve);
  const std::vector<std::string> methods{"branch", "fvs", "brute"};
  solve->add_option("--method", so.method)->check(CLI::IsMember(methods));
  solve->add_option("--cross-check", so.cross_check, "second method that must agree")
      ->check(CLI::IsMember(methods));
  solve->add_option("--max-q", so.cfg.max_q)->check(CLI::NonNegativeNumber);
  solve->add_option("--node-budget", so.cfg.node_budget)->check(CLI::PositiveNumber);
  solve->add_option("--packing-budget", so.cfg.packing_enum_budget)->check(CLI::PositiveNumber);
  solve->callback([&] { code = run_solve(so); });

  BenchOptions bo;
  auto* bench = app.add_subcommand("bench", "log_fvs on a graph family, one CSV row per instance");
  bench->require_subcommand(1);
  bench->fallthrough();
  bench->add_option("--csv", bo.csv, "output path (default stdout)");
  add_fvs_cfg(bench, bo.cfg);
  auto* bgk = bench->add_subcommand("gk", "G_1 .. G_kmax");
  bgk->add_option("--kmax", bo.kmax)->required()->check(CLI::Range(1, kMaxGkOrder));
  bgk->callback([&] { code = run_bench_cmd(gk_instances(bo.kmax), bo); });
  auto* bfp = bench->add_subcommand("forest-plus", "forest plus extra edges, one per size");
  bfp->add_option("--sizes", bo.sizes)->required()->delimiter(',')->check(CLI::Range(1, 1 << 26));
  bfp->add_option("--extra", bo.extra);
  bfp->add_option("--min-girth", bo.min_girth)->check(CLI::Range(3, 1 << 20));
  bfp->add_option("--seed", bo.seed);
  bfp->callback([&] {
    if (bo.sizes.empty()) throw UsageError("--sizes: empty family");
    code = run_bench_cmd(forest_plus_instances(bo.sizes, bo.extra, bo.min_girth, bo.seed), bo);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const SearchLimitError& e) {
    std::cerr << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return code;
}
