#pragma once

#include <string>

#include "ncball/gluing/double_rep.hpp"
#include "ncball/graphs/smith.hpp"

namespace ncball::gluing {

/// Image of the generator of K_1 of the boundary under the index map, one
/// integer per ideal copy.
struct IndexClass {
  long d1 = 0;
  long d2 = 0;
  friend bool operator==(const IndexClass&, const IndexClass&) = default;
};

/// In the path representation of the graph M(n), with S the loop at v_n
/// and P its vertex projection, the lifts U_1 = lambda S + 1 - P and
/// U_2 = S + 1 - P (type 1) or S^* + 1 - P (type 2) give
/// d_c = rank(1 - U_c^* U_c) - rank(1 - U_c U_c^*) on paths of length
/// <= max_length - 1. lambda is a formal unimodular symbol when some phase
/// differs from 1. Ranks are exact traces of projections; Error(identity_failed)
/// is thrown if a defect is not a projection with integral trace.
IndexClass index_class(int n, const BetaSpec& beta, int max_length = 6);

struct DoubleKTheory {
  graphs::AbelianGroup k0;
  graphs::AbelianGroup k1;
  /// "p1=p2", "p1=-p2" or "independent".
  std::string relation;
};

/// Six-term sequence 0 -> K_1 -> Z -> Z^2 -> K_0 -> Z -> 0 with the middle map
/// 1 -> (d1, d2): K_1 = its kernel, K_0 = its cokernel plus Z.
DoubleKTheory ktheory_double(const IndexClass& idx);

struct MirrorDistinction {
  int n = 0;
  IndexClass identity_index;
  IndexClass mirror_index;
  DoubleKTheory identity;
  DoubleKTheory mirror;
  /// "distinguishable" when the groups agree but the relations differ.
  std::string verdict;
  /// Descriptive only; not computed.
  std::string ideal_space_shape;
};

MirrorDistinction distinguish_mirror(int n, int max_length = 6);

}  // namespace ncball::gluing
