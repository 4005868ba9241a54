#pragma once

#include <map>
#include <utility>

#include "ncball/fock/operator.hpp"
#include "ncball/ncalg/polynomial.hpp"

namespace ncball::fock {

/// Generator matrices on one shared space together with the numeric q used
/// to evaluate Scalar coefficients (s = sqrt(q)).
class Assignment {
 public:
  Assignment(TruncatedSpace space, double q);

  const TruncatedSpace& space() const noexcept { return space_; }
  double q() const noexcept { return q_; }

  /// Assigns the unstarred generator letter+index; its adjoint is derived.
  void set(char letter, int index, OperatorMatrix m);
  bool has(char letter, int index) const;
  /// Matrix of g, taking the star into account.
  const OperatorMatrix& get(const ncalg::Generator& g) const;

 private:
  TruncatedSpace space_;
  double q_;
  std::map<std::pair<char, int>, std::pair<OperatorMatrix, OperatorMatrix>> matrices_;
};

/// The *-homomorphism from the free algebra: words become products of the
/// assigned matrices, scalars are evaluated at s = sqrt(q).
/// Throws Error(invalid_parameter) for an unassigned generator.
OperatorMatrix evaluate(const ncalg::Polynomial& p, const Assignment& a);

/// ||P eval(p) P|| for the interior projector with the given margin.
double residual(const ncalg::Polynomial& p, const Assignment& a, int margin);

}  // namespace ncball::fock
