#include "okpack/bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "okpack/errors.hpp"
#include "okpack/generators.hpp"

namespace okpack {

std::vector<BenchInstance> gk_instances(int kmax) {
  if (kmax < 1 || kmax > kMaxGkOrder) {
    throw std::invalid_argument("kmax must be in [1, " + std::to_string(kMaxGkOrder) + "]");
  }
  std::vector<BenchInstance> out;
  for (int k = 1; k <= kmax; ++k) {
    out.push_back({"gk", k, gk(k).graph, static_cast<std::size_t>(k - 1), std::nullopt});
  }
  return out;
}

std::vector<BenchInstance> forest_plus_instances(const std::vector<std::size_t>& sizes,
                                                 std::size_t extra, std::size_t min_girth,
                                                 std::uint64_t seed) {
  std::vector<BenchInstance> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::uint64_t s = seed + i;
    auto fp = forest_plus_edges(sizes[i], extra, min_girth, s);
    BenchInstance inst{"forest-plus", static_cast<int>(extra + 1), std::move(fp.graph),
                       std::nullopt, s};
    try {
      inst.optimal_fvs = exact_fvs(inst.graph).size();
    } catch (const BudgetExceeded&) {
    }
    out.push_back(std::move(inst));
  }
  return out;
}

namespace {

BenchRow measure(const BenchInstance& inst, const FvsConfig& cfg) {
  BenchRow row;
  row.family = inst.family;
  row.k = inst.k;
  row.n = inst.graph.order();
  row.m = inst.graph.size();
  row.cycle_rank = cycle_rank(inst.graph);
  row.girth = girth(inst.graph);
  row.optimal_fvs = inst.optimal_fvs;
  row.seed = inst.seed;
  auto start = std::chrono::steady_clock::now();
  FvsResult r = log_fvs(inst.graph, cfg);
  row.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  row.fvs_size = r.vertices.size();
  row.valid = r.valid && is_fvs(inst.graph, r.vertices);
  return row;
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const FvsConfig& cfg, unsigned threads) {
  std::vector<BenchRow> rows(instances.size());
  std::vector<std::exception_ptr> errors(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < instances.size();) {
      try {
        rows[i] = measure(instances[i], cfg);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(instances.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

unsigned worker_count() {
  if (const char* env = std::getenv("OKPACK_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(3) << r.elapsed_ms;
    out << csv_field(r.family) << ',' << r.k << ',' << r.n << ',' << r.m << ',' << r.cycle_rank
        << ',' << opt(r.girth) << ',' << r.fvs_size << ',' << opt(r.optimal_fvs) << ','
        << ms.str() << ',' << opt(r.seed) << '\n';
  }
}

}  // namespace okpack
