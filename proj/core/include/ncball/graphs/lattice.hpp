#pragma once

#include <vector>

#include "ncball/graphs/graph.hpp"

namespace ncball::graphs {

/// Gauge-invariant ideals: subsets closed under edges (hereditary) and under
/// the saturation rule, sorted by size and then by vertex bitmask, so a chain
/// appears in inclusion order. Graphs with more than 24 vertices throw
/// Error(invalid_parameter).
std::vector<std::vector<int>> hereditary_saturated_lattice(const DirectedGraph& graph);

/// Whether the subsets are totally ordered by inclusion.
bool is_chain(const std::vector<std::vector<int>>& subsets);

}  // namespace ncball::graphs
