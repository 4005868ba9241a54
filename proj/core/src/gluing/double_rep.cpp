#include "ncball/gluing/double_rep.hpp"

#include <fmt/format.h>

#include <cmath>

#include "ncball/error.hpp"
#include "ncball/fock/evaluate.hpp"
#include "ncball/fock/numeric.hpp"
#include "ncball/ncalg/presentation.hpp"
#include "ncball/reps/verify.hpp"

namespace ncball::gluing {

using ncalg::Family;

int BetaSpec::type() const {
  return parity == Parity::even_boundary ? (conjugate_first ? 2 : 1) : (first_sign < 0 ? 2 : 1);
}

BetaSpec BetaSpec::even(int n, bool conjugate_first, std::vector<Complex> phases) {
  if (phases.empty()) phases.assign(static_cast<std::size_t>(n), Complex(1.0));
  return {Parity::even_boundary, std::move(phases), conjugate_first, 1};
}

BetaSpec BetaSpec::odd(int n, int first_sign, std::vector<Complex> phases) {
  if (phases.empty()) phases.assign(static_cast<std::size_t>(n), Complex(1.0));
  return {Parity::odd_boundary, std::move(phases), false, first_sign};
}

namespace {

void validate(const BetaSpec& beta, int n) {
  if (static_cast<int>(beta.phases.size()) != n)
    throw_invalid(fmt::format("beta needs {} phases, got {}", n, beta.phases.size()));
  for (const Complex& l : beta.phases)
    if (std::abs(std::abs(l) - 1.0) > 1e-12) throw_invalid("beta phases must have modulus one");
  if (beta.parity == Parity::odd_boundary) {
    if (beta.first_sign != 1 && beta.first_sign != -1) throw_invalid("first_sign must be +1 or -1");
    if (beta.conjugate_first) throw_invalid("odd boundaries have no conjugating gluing");
  }
}

Family ball_of(Parity p) { return p == Parity::even_boundary ? Family::ball_even : Family::ball_odd; }

}  // namespace

std::vector<OperatorMatrix> component_generators(const Representation& rep, const BetaSpec& beta,
                                                 int component) {
  const int n = rep.size();
  validate(beta, n);
  const auto& space = rep.space();
  const OperatorMatrix one = OperatorMatrix::identity(space);
  const bool twisted = component == 0;
  auto phase = [&](int i) { return twisted ? beta.phases[static_cast<std::size_t>(i - 1)] : Complex(1.0); };
  auto g = [&](int i) -> const OperatorMatrix& { return rep.generator(i); };

  std::vector<OperatorMatrix> out;
  if (beta.parity == Parity::even_boundary) {
    OperatorMatrix tail = one;
    for (int j = 2; j <= n; ++j) tail -= g(j) * g(j).adjoint();
    const OperatorMatrix defect = tail - g(1) * g(1).adjoint();
    if (twisted && beta.conjugate_first)
      out.push_back(fock::psd_sqrt(tail - g(1).adjoint() * g(1)));
    else
      out.push_back((twisted ? 1.0 : -1.0) * fock::psd_sqrt(defect));
    out.push_back(phase(1) * (twisted && beta.conjugate_first ? g(1).adjoint() : g(1)));
  } else {
    OperatorMatrix radius = one - g(1) * g(1);
    for (int j = 2; j <= n; ++j) radius -= g(j) * g(j).adjoint();
    out.push_back((twisted ? 1.0 : -1.0) * fock::psd_sqrt(radius));
    out.push_back(Complex(twisted ? beta.first_sign : 1) * g(1));
  }
  for (int i = 2; i <= n; ++i) out.push_back(phase(i) * g(i));
  return out;
}

DoubleRep build_double_rep(const Representation& first, const Representation& second,
                           const BetaSpec& beta) {
  const Family family = ball_of(beta.parity);
  for (const Representation* r : {&first, &second})
    if (!r->spec() || r->spec()->family != family)
      throw_invalid(fmt::format("{} is not a {} representation", r->label(), ncalg::to_string(family)));
  if (first.q() != second.q()) throw_invalid("doubled representations must share q");
  if (!(first.space() == second.space())) throw_invalid("doubled representations must share a space");
  if (first.size() != second.size()) throw_invalid("doubled representations must share n");

  const auto a = component_generators(first, beta, 0);
  const auto b = component_generators(second, beta, 1);
  std::vector<OperatorMatrix> glued;
  for (std::size_t k = 0; k < a.size(); ++k) glued.push_back(fock::block_diagonal({a[k], b[k]}));
  return {first, second, beta, std::move(glued)};
}

namespace {

// ||P (R g - c g R) P|| for each listed generator of one component.
void commutation_entries(VerificationReport& report, const std::string& tag, const OperatorMatrix& r,
                         const Representation& rep, int margin, double tol, bool plain_first) {
  const fock::InteriorProjector p(rep.space(), margin);
  const double sq = std::sqrt(rep.q());
  for (int i = 1; i <= rep.size(); ++i) {
    const bool plain = plain_first && i == 1;
    const OperatorMatrix& g = rep.generator(i);
    const double res = fock::compressed_norm(r * g - Complex(plain ? 1.0 : sq) * (g * r), p);
    report.add(fmt::format("{}: R {}{} = {}{}{} R", tag, rep.letter(), i, plain ? "" : "q^(1/2) ", rep.letter(), i),
               res <= tol, res, fmt::format("componentwise, margin {}", margin));
  }
}

}  // namespace

VerificationReport verify_glued_relations(const DoubleRep& d, std::optional<int> margin, double tol) {
  const int n = d.n();
  const bool even = d.beta.parity == Parity::even_boundary;
  if (even && d.beta.conjugate_first)
    throw Error(ErrorKind::unsupported_presentation,
                "the mirror gluing has no finite presentation to verify against");

  const auto& space = d.generators.front().space();
  fock::Assignment a(space, d.q());
  ncalg::Presentation pres = even ? ncalg::build_presentation(Family::boundary_odd, n + 1)
                                  : ncalg::build_presentation(Family::boundary_even, n);
  if (even) {
    for (int k = 0; k <= n; ++k) a.set('t', k + 1, d.generators[static_cast<std::size_t>(k)]);
  } else {
    a.set('w', 1, d.generators[0] + Complex(0.0, 1.0) * d.generators[1]);
    for (int k = 2; k <= n; ++k) a.set('w', k, d.generators[static_cast<std::size_t>(k)]);
  }

  VerificationReport report(fmt::format("{} glued generators against {}, {} | {}",
                                        even ? "even type-1" : (d.beta.type() == 1 ? "odd type-1" : "odd type-2"),
                                        pres.name(), d.first.label(), d.second.label()));
  for (const auto& rel : pres.relations()) {
    const int m = margin.value_or(reps::margin_for(rel.expr));
    const double r = fock::residual(rel.expr, a, m);
    report.add(rel.name, r <= tol, r, fmt::format("residual, margin {}", m));
  }

  const int m = margin.value_or(1);
  const Representation* comps[] = {&d.first, &d.second};
  for (int c = 0; c < 2; ++c) {
    const OperatorMatrix r = fock::diagonal_block(d.generators[0], c);
    commutation_entries(report, c == 0 ? "first copy" : "second copy", c == 0 ? r : -r, *comps[c], m, tol,
                        !even);
  }
  return report;
}

}  // namespace ncball::gluing
