#include "ncball/ncalg/automorphism.hpp"

#include <limits>
#include <map>
#include <utility>

#include "ncball/error.hpp"
#include "ncball/ncalg/rewrite.hpp"

namespace ncball::ncalg {
namespace {

struct Gaussian {
  mpq_class re = 1;
  mpq_class im = 0;
  Gaussian operator*(const Gaussian& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Gaussian conj() const { return {re, -im}; }
};

/// Exponent vector over the formal phases; a Laurent monomial in the
/// lambda_i with lambda_i^{-1} standing for conj(lambda_i).
using Character = std::vector<int>;

struct Split {
  Polynomial real;
  Polynomial imag;
};

void validate(const Presentation& pres, const std::vector<Phase>& phases) {
  if (phases.size() != static_cast<std::size_t>(pres.n()))
    throw_invalid("expected " + std::to_string(pres.n()) + " phases, got " +
                  std::to_string(phases.size()));
  for (std::size_t i = 0; i < phases.size(); ++i) {
    const Phase& p = phases[i];
    if (p.kind == Phase::Kind::value && p.re * p.re + p.im * p.im != 1)
      throw_invalid("phase " + std::to_string(i + 1) + " is not unimodular");
    if (pres.is_self_adjoint(static_cast<int>(i) + 1) &&
        (p.kind != Phase::Kind::value || p.im != 0))
      throw_invalid("the self-adjoint generator only admits the real phases +1 and -1");
  }
}

}  // namespace

VerificationReport phase_automorphism_report(const Presentation& pres,
                                             const std::vector<Phase>& phases) {
  validate(pres, phases);
  const std::size_t n = phases.size();
  VerificationReport report("phase substitution on " + pres.name());

  for (const auto& relation : pres.relations()) {
    std::map<Character, Split> images;
    for (const auto& [word, coeff] : relation.expr.terms()) {
      Character chi(n, 0);
      Gaussian factor;
      Word image;
      image.reserve(word.size());
      for (const auto& g : word) {
        const Phase& p = phases[static_cast<std::size_t>(g.index - 1)];
        image.push_back({g.letter, g.index, p.conjugate ? !g.starred : g.starred});
        if (p.kind == Phase::Kind::formal) {
          chi[static_cast<std::size_t>(g.index - 1)] += g.starred ? -1 : 1;
        } else {
          Gaussian lambda{p.re, p.im};
          factor = factor * (g.starred ? lambda.conj() : lambda);
        }
      }
      Split& slot = images[chi];
      if (factor.re != 0) slot.real.add_term(image, Scalar(factor.re) * coeff);
      if (factor.im != 0) slot.imag.add_term(image, Scalar(factor.im) * coeff);
    }
    bool vanishes = true;
    std::string residue;
    for (const auto& [chi, split] : images) {
      for (const Polynomial* part : {&split.real, &split.imag}) {
        Polynomial nf = normal_form(*part, pres);
        if (!nf.is_zero()) {
          vanishes = false;
          if (residue.empty()) residue = "residue: " + nf.to_string();
        }
      }
    }
    report.add(relation.name, vanishes, std::numeric_limits<double>::quiet_NaN(),
               "image under substitution", residue);
  }
  return report;
}

bool check_phase_automorphism(const Presentation& pres, const std::vector<Phase>& phases) {
  return phase_automorphism_report(pres, phases).all_passed();
}

}  // namespace ncball::ncalg
