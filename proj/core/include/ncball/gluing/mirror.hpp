#pragma once

#include <vector>

#include "ncball/fock/operator.hpp"
#include "ncball/report.hpp"
#include "ncball/reps/catalog.hpp"

namespace ncball::gluing {

enum class MirrorKind { sigma_plus, sigma_minus, varrho };

/// Closed-form images of e_0..e_n under the irreducible representations of
/// the mirror sphere (all phases 1): sigma_+ and sigma_- on H_n, and
/// varrho_j^theta on H_{j-1}. For n = 1 the one-dimensional varrho_1 takes
/// the conjugate phase on e_1, since e_1 is the image of z_1^*.
std::vector<fock::OperatorMatrix> mirror_closed_form(MirrorKind kind, int n, double q, int cutoff,
                                                     int j = 0, fock::Complex theta = 1.0);

/// Compares the closed forms with the mirror component formulas applied to
/// the even-ball catalog: sigma_+ <- first copy of sigma, sigma_- <- second
/// copy of sigma, varrho_j^theta <- first copy of rho_j^theta. Entries pass
/// when the largest interior entry difference (margin 1) is <= tol.
VerificationReport mirror_rep_consistency(int n, double q, int cutoff,
                                          const std::vector<fock::Complex>& thetas = reps::theta_grid(),
                                          double tol = 1e-12);

}  // namespace ncball::gluing
