#include "ncball/reps/injectivity.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ncball/error.hpp"
#include "ncball/fock/numeric.hpp"

namespace ncball::reps {

using fock::InteriorProjector;

std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::normality_defect: return "normality-defect";
    case Criterion::sign_spectrum: return "sign-spectrum";
    case Criterion::circle_cover: return "circle-cover";
  }
  return "?";
}

Criterion criterion_for(Family family) {
  switch (family) {
    case Family::ball_even: return Criterion::normality_defect;
    case Family::boundary_odd: return Criterion::sign_spectrum;
    case Family::boundary_even: return Criterion::circle_cover;
    default: throw_invalid("no injectivity criterion is defined for odd balls");
  }
}

InjectivityResult injectivity_check(const Representation& rep, Criterion criterion,
                                    const InjectivityOptions& options) {
  const auto& g1 = rep.generator(rep.first_index());
  const InteriorProjector p(rep.space(), options.margin);
  InjectivityResult out;
  switch (criterion) {
    case Criterion::normality_defect: {
      const double defect = fock::compressed_norm(g1.adjoint() * g1 - g1 * g1.adjoint(), p);
      out.injective = defect > options.tol;
      out.witness = defect;
      out.note = fmt::format("||[g1', g1]|| on interior margin {}", options.margin);
      break;
    }
    case Criterion::sign_spectrum: {
      const fock::DenseMatrix c = g1.compress(p);
      const auto ev = fock::hermitian_eigenvalues(0.5 * (c + c.adjoint()));
      const double lo = ev.empty() ? 0.0 : ev.front();
      const double hi = ev.empty() ? 0.0 : ev.back();
      out.extremes = {lo, hi};
      out.injective = lo < -options.tol && hi > options.tol;
      out.witness = std::min(hi, -lo);
      out.note = "extreme eigenvalues of t1";
      break;
    }
    case Criterion::circle_cover: {
      std::vector<double> phases;
      for (auto z : fock::eigenvalues(g1.compress(p)))
        if (std::abs(z) > options.tol) phases.push_back(std::arg(z));
      std::sort(phases.begin(), phases.end());
      double gap = 2.0 * std::numbers::pi;
      if (!phases.empty()) {
        gap = phases.front() + 2.0 * std::numbers::pi - phases.back();
        for (std::size_t i = 1; i < phases.size(); ++i) gap = std::max(gap, phases[i] - phases[i - 1]);
      }
      out.injective = gap <= options.delta;
      out.witness = gap;
      out.note = fmt::format("finite-truncation surrogate: largest phase gap vs delta = {}",
                             options.delta);
      break;
    }
  }
  return out;
}

}  // namespace ncball::reps
