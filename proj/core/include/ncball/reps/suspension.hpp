#pragma once

#include "ncball/reps/catalog.hpp"
#include "ncball/report.hpp"

namespace ncball::reps {

/// The one-dimensional representation of C with no generators.
Representation point_rep(char letter, double q);

/// Quantum double suspension on matrices: on H x l2<levels>,
/// G_j = g_j x diag(q^{k/2}) for j <= n and G_{n+1} = 1 x W with
/// W xi_k = sqrt(1 - q^{k+1}) xi_{k+1}.
Representation suspend_rep(const Representation& rep, int levels);

/// Residuals of G_j G_{n+1} = s G_{n+1} G_j, G_j G_{n+1}^* = s^{-1} G_{n+1}^* G_j,
/// G_{n+1}^* G_{n+1} - q G_{n+1} G_{n+1}^* = 1 - q and of the radius identity
/// 1 - sum G_j G_j^* = (1 - sum g_j g_j^*) x diag(q^k), on the interior.
/// `suspended` must be suspend_rep(base, levels).
VerificationReport suspension_identity_report(const Representation& base,
                                              const Representation& suspended, int margin,
                                              double tol);

/// Largest |entry| of P (a - b) P.
double max_entry_difference(const fock::OperatorMatrix& a, const fock::OperatorMatrix& b,
                            const fock::InteriorProjector& p);

}  // namespace ncball::reps
