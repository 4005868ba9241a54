#pragma once

#include <optional>
#include <vector>

#include "ncball/fock/operator.hpp"
#include "ncball/report.hpp"
#include "ncball/reps/catalog.hpp"

namespace ncball::gluing {

using fock::Complex;
using fock::OperatorMatrix;
using reps::Representation;

enum class Parity {
  /// Boundary of an even ball: beta acts on w_1..w_n, the double is built
  /// from two copies of the even ball.
  even_boundary,
  /// Boundary of an odd ball: beta acts on t_1..t_n.
  odd_boundary,
};

struct BetaSpec {
  Parity parity = Parity::even_boundary;
  /// lambda_1..lambda_n, each of modulus one. For odd boundaries lambda_1 is
  /// unused; the sign of t_1 is first_sign.
  std::vector<Complex> phases;
  /// Even boundaries: w_1 -> lambda_1 w_1^* (the mirror gluing).
  bool conjugate_first = false;
  /// Odd boundaries: t_1 -> first_sign t_1.
  int first_sign = 1;

  /// 1 for the identity-like gluing, 2 for the conjugating / sign-flipping one.
  int type() const;
  static BetaSpec even(int n, bool conjugate_first, std::vector<Complex> phases = {});
  static BetaSpec odd(int n, int first_sign, std::vector<Complex> phases = {});
};

/// Glued generators g_0..g_n on blocks(2) x H, g_k = diag(first, second).
/// Even boundaries give e_0..e_n, odd boundaries f_0..f_n.
struct DoubleRep {
  Representation first;
  Representation second;
  BetaSpec beta;
  std::vector<OperatorMatrix> generators;

  int n() const { return static_cast<int>(generators.size()) - 1; }
  double q() const { return first.q(); }
};

/// Component formulas: the glued generators seen in one copy of the ball
/// (component 0 is the beta-twisted copy, component 1 the plain one).
std::vector<OperatorMatrix> component_generators(const Representation& rep, const BetaSpec& beta,
                                                 int component);

/// Throws Error(invalid_parameter) when the representations belong to the
/// wrong ball family, differ in q, space or size, or beta does not fit;
/// Error(not_positive) from the square roots propagates.
DoubleRep build_double_rep(const Representation& first, const Representation& second,
                           const BetaSpec& beta);

/// Even type 1: (e_0, ..., e_n) against the odd-boundary presentation with
/// n+1 generators, t_{i+1} = e_i, plus R z_i = q^{1/2} z_i R per component.
/// Odd: (f_0 + i f_1, f_2, ..., f_n) against the even-boundary presentation,
/// plus R x_1 = x_1 R and R x_i = q^{1/2} x_i R per component.
/// Even type 2 throws Error(unsupported_presentation).
VerificationReport verify_glued_relations(const DoubleRep& d, std::optional<int> margin = std::nullopt,
                                          double tol = 1e-10);

}  // namespace ncball::gluing
