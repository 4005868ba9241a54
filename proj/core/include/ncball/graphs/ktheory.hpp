#pragma once

#include <vector>

#include "ncball/graphs/graph.hpp"
#include "ncball/graphs/smith.hpp"

namespace ncball::graphs {

struct GraphKTheory {
  AbelianGroup k0;
  AbelianGroup k1;
  /// Coordinates of [P_v] in K0 for every vertex v: first one entry per
  /// torsion factor (reduced modulo it), then one per free summand.
  std::vector<std::vector<mpz_class>> vertex_classes;
  /// The boundary matrix 1 - A^t restricted to regular columns.
  IntMatrix boundary;

  /// True when the vertex classes generate K0.
  bool classes_generate() const;
};

/// K0 = coker(1 - A^t : Z^regular -> Z^vertices), K1 = ker of the same map.
GraphKTheory ktheory_graph(const DirectedGraph& graph);

}  // namespace ncball::graphs
