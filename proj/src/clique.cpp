#include "clique.hpp"

namespace okpack::detail {

namespace {

// Greedy coloring bound: number of color classes needed for `cand`.
std::size_t coloring_bound(const CompatibilityGraph& g, Bits cand) {
  std::size_t colors = 0;
  while (cand.any()) {
    ++colors;
    Bits avail = cand;
    for (auto v = avail.find_first(); v != Bits::npos; v = avail.find_next(v)) {
      cand.reset(v);
      avail &= ~g.neighbors(v);
    }
  }
  return colors;
}

void expand(const CompatibilityGraph& g, std::vector<std::size_t>& current, Bits cand,
            std::vector<std::size_t>& best, Budget& budget) {
  budget.charge();
  if (current.size() > best.size()) best = current;
  if (cand.none()) return;
  if (current.size() + cand.count() <= best.size()) return;
  if (current.size() + coloring_bound(g, cand) <= best.size()) return;
  for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
    Bits later = cand;
    // only indices after v, to enumerate each clique once in lex order
    for (auto u = later.find_first(); u != Bits::npos && u <= v; u = later.find_next(u)) {
      later.reset(u);
    }
    if (current.size() + 1 + later.count() <= best.size()) break;
    current.push_back(v);
    expand(g, current, later & g.neighbors(v), best, budget);
    current.pop_back();
  }
}

bool enumerate(const CompatibilityGraph& g, std::size_t size, std::vector<std::size_t>& current,
               const Bits& cand, Budget& budget,
               const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  budget.charge();
  if (current.size() == size) return visit(current);
  if (current.size() + cand.count() < size) return true;
  for (auto v = cand.find_first(); v != Bits::npos; v = cand.find_next(v)) {
    Bits later = cand & g.neighbors(v);
    for (auto u = later.find_first(); u != Bits::npos && u <= v; u = later.find_next(u)) {
      later.reset(u);
    }
    current.push_back(v);
    bool go_on = enumerate(g, size, current, later, budget, visit);
    current.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> maximum_clique(const CompatibilityGraph& g, Budget& budget) {
  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  Bits all(g.size());
  all.set();
  expand(g, current, all, best, budget);
  return best;
}

void for_each_clique(const CompatibilityGraph& g, std::size_t size, Budget& budget,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> current;
  Bits all(g.size());
  all.set();
  enumerate(g, size, current, all, budget, visit);
}

}  // namespace okpack::detail
