#pragma once

// Internal: cliques in small compatibility graphs (cycles or 4-cycle vertex
// sets as nodes, compatibility as edges).

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <functional>
#include <vector>

#include "okpack/errors.hpp"

namespace okpack::detail {

using Bits = boost::dynamic_bitset<std::uint64_t>;

class CompatibilityGraph {
 public:
  explicit CompatibilityGraph(std::size_t n) : adj_(n, Bits(n)) {}
  void connect(std::size_t i, std::size_t j) {
    adj_[i].set(j);
    adj_[j].set(i);
  }
  std::size_t size() const { return adj_.size(); }
  const Bits& neighbors(std::size_t i) const { return adj_[i]; }

 private:
  std::vector<Bits> adj_;
};

// Lexicographically least maximum clique (as a sorted index tuple).
// Charges one budget unit per search node.
std::vector<std::size_t> maximum_clique(const CompatibilityGraph& g, Budget& budget);

// Calls visit on every clique of exactly `size` nodes, in lexicographic
// order of sorted index tuples. visit returns false to stop early.
void for_each_clique(const CompatibilityGraph& g, std::size_t size, Budget& budget,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace okpack::detail
