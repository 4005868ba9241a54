#include "ncball/gluing/mirror.hpp"

#include <fmt/format.h>

#include "ncball/error.hpp"
#include "ncball/gluing/double_rep.hpp"
#include "ncball/reps/suspension.hpp"

namespace ncball::gluing {

using fock::OperatorMatrix;
using fock::QValue;
using fock::TruncatedSpace;

std::vector<OperatorMatrix> mirror_closed_form(MirrorKind kind, int n, double q_value, int cutoff, int j,
                                               Complex theta) {
  if (n < 1) throw_invalid("n must be at least 1");
  const QValue q(q_value);
  std::vector<OperatorMatrix> e;
  if (kind != MirrorKind::varrho) {
    const TruncatedSpace space(n, cutoff);
    if (kind == MirrorKind::sigma_plus) {
      e.push_back(Complex(q.sqrt()) * fock::q_diagonal_all(space, q));
      e.push_back(fock::weighted_shift(1, space, q).adjoint());
    } else {
      e.push_back(Complex(-1.0) * fock::q_diagonal_all(space, q));
      e.push_back(fock::weighted_shift(1, space, q));
    }
    for (int i = 2; i <= n; ++i) e.push_back(fock::weighted_shift(i, space, q));
    return e;
  }
  if (j < 1 || j > n) throw_invalid(fmt::format("varrho_j needs 1 <= j <= {}", n));
  const TruncatedSpace space(j - 1, cutoff);
  e.push_back(OperatorMatrix::zero(space));
  if (j == n) {
    e.push_back(std::conj(theta) * fock::q_diagonal_all(space, q));
    for (int i = 2; i <= n; ++i) e.push_back(fock::weighted_shift(i - 1, space, q));
    return e;
  }
  for (int i = 1; i <= n; ++i) {
    if (i < n - j + 1)
      e.push_back(OperatorMatrix::zero(space));
    else if (i == n - j + 1)
      e.push_back(theta * fock::q_diagonal_all(space, q));
    else
      e.push_back(fock::weighted_shift(i + j - n - 1, space, q));
  }
  return e;
}

namespace {

void compare(VerificationReport& report, const std::string& label, const std::vector<OperatorMatrix>& closed,
             const std::vector<OperatorMatrix>& built, double tol) {
  const fock::InteriorProjector p(closed.front().space(), 1);
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const double diff = reps::max_entry_difference(closed[i], built[i], p);
    report.add(fmt::format("{}(e{})", label, i), diff <= tol, diff, "entrywise, margin 1");
  }
}

}  // namespace

VerificationReport mirror_rep_consistency(int n, double q, int cutoff, const std::vector<Complex>& thetas,
                                          double tol) {
  VerificationReport report(fmt::format("mirror sphere representations, n = {}, q = {}, cutoff {}", n, q, cutoff));
  const BetaSpec beta = BetaSpec::even(n, true);
  reps::RepSpec spec{ncalg::Family::ball_even, n, reps::Kind::sigma, 0, 1.0, 0.0, q, cutoff};
  const auto sigma = reps::irrep_ball_even(spec);
  compare(report, "sigma_+", mirror_closed_form(MirrorKind::sigma_plus, n, q, cutoff),
          component_generators(sigma, beta, 0), tol);
  compare(report, "sigma_-", mirror_closed_form(MirrorKind::sigma_minus, n, q, cutoff),
          component_generators(sigma, beta, 1), tol);
  spec.kind = reps::Kind::rho;
  for (int j = 1; j <= n; ++j)
    for (Complex theta : thetas) {
      spec.j = j;
      spec.theta = theta;
      const auto rho = reps::irrep_ball_even(spec);
      const std::string label = "varrho" + rho.label().substr(3);
      compare(report, label, mirror_closed_form(MirrorKind::varrho, n, q, cutoff, j, theta),
              component_generators(rho, beta, 0), tol);
    }
  return report;
}

}  // namespace ncball::gluing
