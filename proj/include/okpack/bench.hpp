#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "okpack/fvs.hpp"
#include "okpack/graph.hpp"

namespace okpack {

struct BenchInstance {
  std::string family;
  int k = 0;
  Graph graph;
  std::optional<std::size_t> optimal_fvs;
  std::optional<std::uint64_t> seed;
};

struct BenchRow {
  std::string family;
  int k = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t cycle_rank = 0;
  std::optional<std::size_t> girth;  // none for forests
  std::size_t fvs_size = 0;
  std::optional<std::size_t> optimal_fvs;
  double elapsed_ms = 0;
  std::optional<std::uint64_t> seed;
  bool valid = false;
};

inline constexpr std::string_view kBenchCsvHeader =
    "family,k,n,m,cycle_rank,girth,fvs_size,optimal_fvs,elapsed_ms,seed";

// gk(1) .. gk(kmax); the optimum k - 1 comes from the FVS certificate.
std::vector<BenchInstance> gk_instances(int kmax);

// One forest_plus_edges instance per size, seeds seed, seed + 1, ...; k is
// extra + 1 since a forest plus j edges has no j + 1 independent cycles.
// The optimum is filled in when exact_fvs finishes within its budget.
std::vector<BenchInstance> forest_plus_instances(const std::vector<std::size_t>& sizes,
                                                 std::size_t extra, std::size_t min_girth,
                                                 std::uint64_t seed);

// Runs log_fvs on every instance over `threads` workers; rows come back in
// instance order.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances,
                                const FvsConfig& cfg, unsigned threads);

// OKPACK_THREADS if set to a positive integer, else the hardware concurrency.
unsigned worker_count();

// RFC 4180 field quoting.
std::string csv_field(std::string_view s);
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace okpack
