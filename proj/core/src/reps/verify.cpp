#include "ncball/reps/verify.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

#include "ncball/error.hpp"
#include "ncball/fock/numeric.hpp"
#include "ncball/reps/suspension.hpp"

namespace ncball::reps {

using fock::Complex;
using fock::InteriorProjector;
using fock::OperatorMatrix;

int margin_for(const ncalg::Polynomial& relation) {
  return std::max<int>(1, static_cast<int>(relation.degree()) - 1);
}

namespace {

void positivity(VerificationReport& report, const std::string& name, const OperatorMatrix& op,
                int margin, double tol) {
  const InteriorProjector p(op.space(), margin);
  const fock::DenseMatrix c = op.compress(p);
  const fock::DenseMatrix h = 0.5 * (c + c.adjoint());
  const double slack = fock::min_eigenvalue(h);
  report.add(name, slack >= -tol, slack, fmt::format("smallest eigenvalue, margin {}", margin));
}

}  // namespace

VerificationReport verify_rep(const Representation& rep, const ncalg::Presentation& pres,
                              std::optional<int> margin, double tol) {
  if (rep.letter() != pres.letter() || rep.first_index() != 1 || rep.size() != pres.n())
    throw_invalid(fmt::format("{} does not carry the generators of {}", rep.label(), pres.name()));
  VerificationReport report(rep.label() + " on " + pres.name());
  const fock::Assignment a = rep.assignment();
  for (const auto& rel : pres.relations()) {
    const int m = margin.value_or(margin_for(rel.expr));
    const double r = fock::residual(rel.expr, a, m);
    report.add(rel.name, r <= tol, r, fmt::format("residual, margin {}", m));
  }

  const int pm = margin.value_or(1);
  const double q = rep.q();
  const OperatorMatrix id = OperatorMatrix::identity(rep.space());
  const char L = rep.letter();
  auto g = [&](int i) -> const OperatorMatrix& { return rep.generator(i); };
  switch (pres.family()) {
    case ncalg::Family::ball_even: {
      OperatorMatrix radius = id;
      for (int j = 1; j <= pres.n(); ++j) radius -= g(j) * g(j).adjoint();
      positivity(report, fmt::format("1 - sum {0}j {0}j' >= 0", L), radius, pm, tol);
      positivity(report, fmt::format("{0}1' {0}1 - {0}1 {0}1' >= 0", L),
                 g(1).adjoint() * g(1) - g(1) * g(1).adjoint(), pm, tol);
      const int n = pres.n();
      positivity(report, fmt::format("{0}{1}' {0}{1} >= 1 - q", L, n),
                 g(n).adjoint() * g(n) - Complex(1.0 - q) * id, pm, tol);
      break;
    }
    case ncalg::Family::ball_odd: {
      OperatorMatrix radius = id - g(1) * g(1);
      for (int j = 2; j <= pres.n(); ++j) radius -= g(j) * g(j).adjoint();
      positivity(report, fmt::format("1 - {0}1^2 - sum {0}j {0}j' >= 0", L), radius, pm, tol);
      break;
    }
    default:
      break;
  }
  return report;
}

VerificationReport check_sum_identities(int n, const SumIdentityOptions& options) {
  if (n < 1) throw_invalid("sum identities need n >= 1");
  const double q = options.q;
  RepSpec spec{ncalg::Family::ball_even, n, Kind::sigma, 0, {1.0, 0.0}, 0.0, q, options.base_cutoff};
  const Representation big = suspend_rep(irrep_ball_even(spec), options.levels);
  const auto& space = big.space();

  std::vector<int> margins(static_cast<std::size_t>(space.m()), 0);
  margins.back() = 1;
  const InteriorProjector interior(space, margins);
  const OperatorMatrix& top = big.generator(n + 1);
  const OperatorMatrix t = fock::polar_isometry(top, 1e-8, interior);
  const OperatorMatrix t_adj = t.adjoint();
  const OperatorMatrix id = OperatorMatrix::identity(space);
  const OperatorMatrix vacuum = id - t * t_adj;

  // T^k and T^{*k} for every order needed.
  const int kmax = options.orders.empty() ? 0 : *std::max_element(options.orders.begin(), options.orders.end());
  std::vector<OperatorMatrix> tp{id}, tpa{id};
  for (int k = 1; k <= kmax + 1; ++k) {
    tp.push_back(tp.back() * t);
    tpa.push_back(tpa.back() * t_adj);
  }

  VerificationReport report(fmt::format("series identities, n = {}, q = {}", n, q));
  for (int i = 1; i <= n + 1; ++i) {
    const OperatorMatrix& z = big.generator(i);
    const double z_norm = fock::compressed_norm(z, interior);
    double previous = std::numeric_limits<double>::infinity();
    bool monotone = true;
    for (int K : options.orders) {
      OperatorMatrix partial = OperatorMatrix::zero(space);
      double bound = 0.0;
      if (i <= n) {
        for (int k = 0; k < K; ++k)
          partial += Complex(std::pow(q, 0.5 * k)) * (tp[static_cast<std::size_t>(k)] * z * vacuum *
                                                      tpa[static_cast<std::size_t>(k)]);
        bound = std::pow(q, 0.5 * K) * z_norm;
      } else {
        partial = t;
        for (int k = 0; k < K; ++k)
          partial += Complex(std::sqrt(1.0 - std::pow(q, k + 1)) - 1.0) *
                     (tp[static_cast<std::size_t>(k + 1)] * vacuum * tpa[static_cast<std::size_t>(k)]);
        bound = std::pow(q, K + 1) / (1.0 - q);
      }
      const double r = fock::compressed_norm(z - partial, interior);
      report.add(fmt::format("Z{} series, K = {}", i, K), r <= bound + options.tol, r,
                 fmt::format("tail bound {:.6g}", bound));
      if (r > previous + 1e-12) monotone = false;
      previous = r;
    }
    report.add(fmt::format("Z{} series residual decreases in K", i), monotone,
               std::numeric_limits<double>::quiet_NaN(), "monotone convergence");
  }
  return report;
}

VerificationReport tccr_report(int n, double q, int cutoff, int margin, double tol) {
  RepSpec spec{ncalg::Family::ball_even, n, Kind::sigma, 0, {1.0, 0.0}, 0.0, q, cutoff};
  const Representation sigma = irrep_ball_even(spec);
  const double scale = 1.0 / std::sqrt(1.0 - q);
  std::vector<OperatorMatrix> a, a_adj;
  for (int i = 1; i <= n; ++i) {
    a.push_back(Complex(scale) * sigma.generator(i).adjoint());
    a_adj.push_back(a.back().adjoint());
  }
  auto A = [&](int i) -> const OperatorMatrix& { return a[static_cast<std::size_t>(i - 1)]; };
  auto Ad = [&](int i) -> const OperatorMatrix& { return a_adj[static_cast<std::size_t>(i - 1)]; };
  const Complex mu(std::sqrt(q));
  const InteriorProjector p(sigma.space(), margin);
  const std::string note = fmt::format("interior margin {}", margin);
  VerificationReport report(fmt::format("TCCR, n = {}, q = {}", n, q));
  auto add = [&](const std::string& name, const OperatorMatrix& m) {
    const double r = fock::compressed_norm(m, p);
    report.add(name, r <= tol, r, note);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      add(fmt::format("a{0} a{1} = mu a{1} a{0}", j, i), A(j) * A(i) - mu * (A(i) * A(j)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j)
        add(fmt::format("a{0} a{1}' = mu a{1}' a{0}", j, i), A(j) * Ad(i) - mu * (Ad(i) * A(j)));
  const OperatorMatrix id = OperatorMatrix::identity(sigma.space());
  for (int i = 1; i <= n; ++i) {
    OperatorMatrix rhs = id + Complex(q) * (Ad(i) * A(i));
    for (int j = i + 1; j <= n; ++j) rhs -= Complex(1.0 - q) * (Ad(j) * A(j));
    add(fmt::format("a{0} a{0}' = 1 + mu^2 a{0}' a{0} - (1 - mu^2) sum_(j>{0}) a_j' a_j", i),
        A(i) * Ad(i) - rhs);
  }
  return report;
}

}  // namespace ncball::reps
