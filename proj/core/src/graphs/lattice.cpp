#include "ncball/graphs/lattice.hpp"

#include <algorithm>

#include "ncball/error.hpp"

namespace ncball::graphs {

std::vector<std::vector<int>> hereditary_saturated_lattice(const DirectedGraph& graph) {
  const int n = graph.vertex_count();
  if (n > 24) throw_invalid("ideal lattice enumeration is limited to 24 vertices");
  std::vector<unsigned long> out_mask(static_cast<std::size_t>(n), 0);
  for (const auto& e : graph.edges()) out_mask[static_cast<std::size_t>(e.source)] |= 1UL << e.range;

  std::vector<unsigned long> found;
  for (unsigned long h = 0; h < (1UL << n); ++h) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      const bool in = (h >> v) & 1UL;
      const unsigned long targets = out_mask[static_cast<std::size_t>(v)];
      if (in && (targets & ~h)) ok = false;                             // hereditary
      if (!in && targets != 0 && (targets & ~h) == 0) ok = false;       // saturated
    }
    if (ok) found.push_back(h);
  }
  std::stable_sort(found.begin(), found.end(), [](unsigned long a, unsigned long b) {
    const int pa = __builtin_popcountl(a), pb = __builtin_popcountl(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<std::vector<int>> sets;
  for (unsigned long h : found) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((h >> v) & 1UL) s.push_back(v);
    sets.push_back(std::move(s));
  }
  return sets;
}

bool is_chain(const std::vector<std::vector<int>>& subsets) {
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      const auto& a = subsets[i].size() <= subsets[j].size() ? subsets[i] : subsets[j];
      const auto& b = subsets[i].size() <= subsets[j].size() ? subsets[j] : subsets[i];
      if (!std::includes(b.begin(), b.end(), a.begin(), a.end())) return false;
    }
  return true;
}

}  // namespace ncball::graphs
