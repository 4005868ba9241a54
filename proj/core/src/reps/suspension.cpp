#include "ncball/reps/suspension.hpp"

#include <fmt/format.h>

#include <cmath>

#include "ncball/error.hpp"
#include "ncball/fock/numeric.hpp"

namespace ncball::reps {

using fock::Complex;
using fock::InteriorProjector;
using fock::OperatorMatrix;
using fock::TruncatedSpace;

Representation point_rep(char letter, double q) {
  return {"C", letter, 1, q, TruncatedSpace(), {}};
}

Representation suspend_rep(const Representation& rep, int levels) {
  if (levels < 2) throw_invalid("suspension needs at least two levels");
  const fock::QValue q(rep.q());
  const TruncatedSpace level_space(1, levels);
  const OperatorMatrix d = fock::q_diagonal_all(level_space, q);
  const OperatorMatrix w = fock::weighted_shift(1, level_space, q);
  std::vector<OperatorMatrix> gens;
  for (const auto& g : rep.matrices()) gens.push_back(g.tensor(d));
  gens.push_back(OperatorMatrix::identity(rep.space()).tensor(w));
  const TruncatedSpace space = gens.front().space();
  return {"Sigma2(" + rep.label() + ")", rep.letter(), rep.first_index(), rep.q(), space,
          std::move(gens)};
}

double max_entry_difference(const OperatorMatrix& a, const OperatorMatrix& b,
                            const InteriorProjector& p) {
  const fock::DenseMatrix d = (a - b).compress(p);
  return d.size() == 0 ? 0.0 : d.cwiseAbs().maxCoeff();
}

VerificationReport suspension_identity_report(const Representation& base,
                                              const Representation& suspended, int margin,
                                              double tol) {
  const int n = base.size();
  if (suspended.size() != n + 1 || suspended.letter() != base.letter())
    throw_invalid("suspended representation does not match its base");
  const double q = base.q();
  const Complex s(std::sqrt(q));
  const int first = base.first_index();
  const OperatorMatrix& top = suspended.generator(first + n);
  const OperatorMatrix top_adj = top.adjoint();
  const InteriorProjector p(suspended.space(), margin);
  const std::string note = fmt::format("interior margin {}", margin);

  VerificationReport report("suspension identities of " + base.label());
  for (int j = first; j < first + n; ++j) {
    const OperatorMatrix& g = suspended.generator(j);
    const double r1 = fock::compressed_norm(g * top - s * (top * g), p);
    report.add(fmt::format("G{0} G{1} = s G{1} G{0}", j, first + n), r1 <= tol, r1, note);
    const double r2 = fock::compressed_norm(g * top_adj - (1.0 / s) * (top_adj * g), p);
    report.add(fmt::format("G{0} G{1}' = s^-1 G{1}' G{0}", j, first + n), r2 <= tol, r2, note);
  }
  const OperatorMatrix id = OperatorMatrix::identity(suspended.space());
  const double r3 = fock::compressed_norm(
      top_adj * top - Complex(q) * (top * top_adj) - Complex(1.0 - q) * id, p);
  report.add(fmt::format("G{0}' G{0} - q G{0} G{0}' = 1 - q", first + n), r3 <= tol, r3, note);

  OperatorMatrix big = id;
  for (const auto& g : suspended.matrices()) big -= g * g.adjoint();
  OperatorMatrix small = OperatorMatrix::identity(base.space());
  for (const auto& g : base.matrices()) small -= g * g.adjoint();
  const int levels = suspended.space().axes().back().extent;
  const TruncatedSpace level_space(1, levels);
  std::vector<Complex> qk(static_cast<std::size_t>(levels));
  for (int k = 0; k < levels; ++k) qk[static_cast<std::size_t>(k)] = std::pow(q, k);
  const OperatorMatrix rhs = small.tensor(OperatorMatrix::diagonal(level_space, qk));
  const double r4 = max_entry_difference(big, rhs, p);
  report.add("1 - sum G G' = (1 - sum g g') x diag(q^k)", r4 <= tol, r4, note + ", entrywise");
  return report;
}

}  // namespace ncball::reps
