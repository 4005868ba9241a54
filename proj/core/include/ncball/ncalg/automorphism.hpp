#pragma once

#include <gmpxx.h>

#include <vector>

#include "ncball/ncalg/presentation.hpp"
#include "ncball/report.hpp"

namespace ncball::ncalg {

/// Image of one generator under a diagonal substitution g_i -> lambda_i g_i
/// (or lambda_i g_i^* when conjugate is set).
///
/// A formal phase is an indeterminate with lambda * conj(lambda) = 1, so a
/// check that passes for formal phases passes for every unimodular value.
/// A concrete phase is an exact Gaussian rational re + i*im and must have
/// modulus exactly one.
struct Phase {
  enum class Kind { formal, value };
  Kind kind = Kind::formal;
  mpq_class re = 1;
  mpq_class im = 0;
  bool conjugate = false;

  static Phase formal(bool conjugate = false) { return {Kind::formal, 1, 0, conjugate}; }
  static Phase value(mpq_class re, mpq_class im, bool conjugate = false) {
    return {Kind::value, std::move(re), std::move(im), conjugate};
  }
  static Phase sign(int s) { return value(s < 0 ? -1 : 1, 0); }
};

/// Substitutes the phases into every relation of pres and reduces each
/// image. Entry i passes iff the image of relation i vanishes identically
/// in the formal phases.
///
/// Throws Error(invalid_parameter) when phases.size() != n, a concrete phase
/// is not unimodular, or (odd families) the phase of the self-adjoint
/// generator is not a real sign.
VerificationReport phase_automorphism_report(const Presentation& pres,
                                             const std::vector<Phase>& phases);

/// True iff every relation image reduces to zero.
bool check_phase_automorphism(const Presentation& pres, const std::vector<Phase>& phases);

}  // namespace ncball::ncalg
