#pragma once

#include <optional>
#include <vector>

#include "ncball/ncalg/presentation.hpp"
#include "ncball/report.hpp"
#include "ncball/reps/catalog.hpp"

namespace ncball::reps {

/// Smallest interior margin that keeps a relation exact under truncation:
/// (longest word) - 1, at least 1.
int margin_for(const ncalg::Polynomial& relation);

/// Interior residual of every relation of pres, then the positivity checks
/// of the family:
///   ball-even: 1 - sum z_j z_j^* >= 0, z_1^* z_1 - z_1 z_1^* >= 0,
///              z_n^* z_n - (1 - q) >= 0;
///   ball-odd:  1 - x_1^2 - sum_{j>=2} x_j x_j^* >= 0.
/// Residual entries pass when <= tol, positivity entries when the smallest
/// eigenvalue of the compressed operator is >= -tol. Without an explicit
/// margin each relation uses margin_for().
/// Throws Error(invalid_parameter) when the generators do not match pres.
VerificationReport verify_rep(const Representation& rep, const ncalg::Presentation& pres,
                              std::optional<int> margin = std::nullopt, double tol = 1e-10);

struct SumIdentityOptions {
  double q = 0.5;
  /// Cutoff of the base representation sigma of the n-generator ball.
  int base_cutoff = 8;
  /// Levels of the suspension axis.
  int levels = 16;
  /// Truncation orders K of the series.
  std::vector<int> orders = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  double tol = 1e-10;
};

/// Series identities for the suspension of sigma: with T the isometric part
/// of Z_{n+1} (restricted to all but the top level),
///   Z_i = sum_{k<K} q^{k/2} T^k Z_i (1 - TT^*) T^{*k} + O(q^{K/2} ||Z_i||),
///   Z_{n+1} = T + sum_{k<K} (sqrt(1 - q^{k+1}) - 1) T^{k+1} (1 - TT^*) T^{*k}
///             + O(q^{K+1} / (1 - q)),
/// plus monotone decrease of each residual in K. Residuals are measured
/// with margin 1 on the suspension axis. Not-invertible from the polar
/// factor propagates.
VerificationReport check_sum_identities(int n, const SumIdentityOptions& options = {});

/// Residuals of the twisted canonical commutation relations for
/// a_i = sigma(z_i)^* / sqrt(1 - q) with mu = sqrt(q):
///   a_j a_i = mu a_i a_j (i < j), a_j a_i^* = mu a_i^* a_j (i != j),
///   a_i a_i^* = 1 + mu^2 a_i^* a_i - (1 - mu^2) sum_{j>i} a_j^* a_j.
VerificationReport tccr_report(int n, double q, int cutoff = 8, int margin = 2,
                               double tol = 1e-10);

}  // namespace ncball::reps
