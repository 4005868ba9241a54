#pragma once

#include <vector>

#include "ncball/graphs/exact_matrix.hpp"
#include "ncball/graphs/graph.hpp"
#include "ncball/report.hpp"

namespace ncball::graphs {

/// Directed path e_1 e_2 ... e_L with r(e_k) = s(e_{k+1}); the trivial path
/// at a vertex has no edges.
struct Path {
  int start = 0;
  std::vector<int> edges;
  std::size_t length() const { return edges.size(); }
};

/// Concrete Cuntz-Krieger family on the span of paths ending at the unique
/// sink, of length <= max_length. S_e prepends e (and kills paths that
/// would grow past max_length); P_v projects onto paths starting at v.
struct CKFamily {
  DirectedGraph graph;
  int max_length = 0;
  int sink = 0;
  std::vector<Path> basis;
  std::vector<ExactMatrix> vertex_projections;
  std::vector<ExactMatrix> edge_isometries;

  std::size_t dimension() const { return basis.size(); }
  /// Basis indices of paths no longer than `length`.
  std::vector<std::size_t> paths_up_to(int length) const;
};

/// Throws Error(unsupported_graph) unless the graph has exactly one sink
/// and every vertex reaches it; Error(invalid_parameter) if max_length < 1.
CKFamily path_ck_family(const DirectedGraph& graph, int max_length);

/// Checks S_e^* S_e = P_{r(e)} for every edge and P_v = sum_{s(e)=v} S_e S_e^*
/// for every regular vertex, plus orthogonality of the P_v, exactly on the
/// paths of length <= max_length - 1. Entry values count violating matrix
/// entries.
VerificationReport verify_ck(const CKFamily& family);

}  // namespace ncball::graphs
