// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed here and never relaxed.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../support/oracles.hpp"
#include "ncball/error.hpp"
#include "ncball/gluing/double_rep.hpp"
#include "ncball/gluing/index.hpp"
#include "ncball/gluing/mirror.hpp"
#include "ncball/graphs/ktheory.hpp"
#include "ncball/graphs/lattice.hpp"
#include "ncball/ncalg/identities.hpp"
#include "ncball/ncalg/rewrite.hpp"
#include "ncball/reps/injectivity.hpp"
#include "ncball/reps/suspension.hpp"
#include "ncball/reps/verify.hpp"

using namespace ncball;
using ncalg::Family;
using reps::Kind;

namespace {

constexpr Family all_families[] = {Family::ball_even, Family::ball_odd, Family::boundary_even,
                                   Family::boundary_odd};

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

Outcome symbolic_identities() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  for (Family f : all_families)
    for (int n = 1; n <= 4; ++n) {
      const auto pres = ncalg::build_presentation(f, n);
      const auto report = ncalg::verify_identities_symbolic(pres);
      o.expect(report.all_passed(), pres.name() + " leaves a nonzero residue");
      // Each relation and derived identity is an entry; relations are never skipped.
      o.expect(report.entries().size() >= pres.relations().size() + pres.derived_identities().size(),
               pres.name() + " report is missing entries");
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 10.0, "took " + num(secs) + " s");
  o.detail = o.passed ? "16 presentations, " + num(secs) + " s" : o.detail;
  return o;
}

Outcome catalog_residuals() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  std::size_t checks = 0;
  double worst = 0.0;
  for (Family f : all_families)
    for (int n = 1; n <= 3; ++n) {
      const auto pres = ncalg::build_presentation(f, n);
      for (double q : {0.3, 0.6, 0.9})
        for (const auto& rep : reps::catalog(f, n, q, 8, reps::theta_grid(8), {-1.0, -0.5, 0.0, 0.5, 1.0})) {
          const auto report = reps::verify_rep(rep, pres, 2, 1e-10);
          checks += report.entries().size();
          worst = std::max(worst, report.max_value());
          o.expect(report.all_passed(), pres.name() + " " + rep.label() + " q=" + num(q));
        }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 60.0, "took " + num(secs) + " s");
  if (o.passed) o.detail = std::to_string(checks) + " checks, " + num(secs) + " s";
  return o;
}

Outcome suspension_coherence() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 2; ++n) {
    const reps::RepSpec base{Family::ball_even, n, Kind::sigma, 0, 1.0, 0.0, 0.5, 6};
    reps::RepSpec next = base;
    next.n = n + 1;
    const auto sigma = reps::irrep(base);
    const auto up = reps::suspend_rep(sigma, 6);
    const auto target = reps::irrep(next);
    o.expect(up.space() == target.space(), "suspension lands on the wrong space");
    if (!(up.space() == target.space())) continue;
    const fock::InteriorProjector everything(target.space(), 0);
    for (int j = 1; j <= n + 1; ++j) {
      const double d = reps::max_entry_difference(up.generator(j), target.generator(j), everything);
      worst = std::max(worst, d);
      o.expect(d <= 1e-12, "z" + std::to_string(j) + " differs by " + num(d));
    }
    const auto ids = reps::suspension_identity_report(sigma, up, 1, 1e-12);
    worst = std::max(worst, ids.max_value());
    o.expect(ids.all_passed(), "suspension identities fail for n=" + std::to_string(n));
  }
  if (o.passed) o.detail = "max deviation " + num(worst);
  return o;
}

Outcome sum_identities() {
  Outcome o;
  for (int n = 1; n <= 2; ++n) {
    reps::SumIdentityOptions opts;
    opts.q = 0.5;
    opts.tol = 1e-10;
    const auto r = reps::check_sum_identities(n, opts);
    o.expect(r.all_passed(), "n=" + std::to_string(n));
  }
  if (o.passed) o.detail = "n=1,2, K=0..12";
  return o;
}

Outcome tccr() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (double q : {0.3, 0.6}) {
      const auto r = reps::tccr_report(n, q, 8, 2, 1e-10);
      worst = std::max(worst, r.max_value());
      o.expect(r.all_passed(), "n=" + std::to_string(n) + " q=" + num(q));
    }
  if (o.passed) o.detail = "max residual " + num(worst);
  return o;
}

Outcome graph_ktheory() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  struct Expected {
    graphs::GraphFamily family;
    long k0;
    long k1;
  };
  for (const auto& e : {Expected{graphs::GraphFamily::M, 1, 0}, Expected{graphs::GraphFamily::L_odd, 1, 1},
                        Expected{graphs::GraphFamily::L_even, 2, 0}})
    for (int n = 1; n <= 5; ++n) {
      const auto g = graphs::build_graph(e.family, n);
      const auto k = graphs::ktheory_graph(g);
      const auto ref = oracle::graph_groups(g);
      const std::string tag = std::string(graphs::to_string(e.family)) + "(" + std::to_string(n) + ")";
      o.expect(k.k0.rank == e.k0 && k.k0.torsion.empty(), tag + " K0 = " + k.k0.to_string());
      o.expect(k.k1.rank == e.k1 && k.k1.torsion.empty(), tag + " K1 = " + k.k1.to_string());
      o.expect(ref.k0_rank == e.k0 && ref.k0_torsion.empty() && ref.k1_rank == e.k1, tag + " oracle disagrees");
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.expect(secs < 1.0, "took " + num(secs) + " s");
  if (o.passed) o.detail = "15 graphs, " + num(secs) + " s";
  return o;
}

Outcome ideal_lattice() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    const auto g = graphs::build_graph(graphs::GraphFamily::M, n);
    const auto lat = graphs::hereditary_saturated_lattice(g);
    o.expect(lat.size() == static_cast<std::size_t>(n + 2), "M(" + std::to_string(n) + ") has " +
                                                                std::to_string(lat.size()) + " ideals");
    o.expect(graphs::is_chain(lat), "M(" + std::to_string(n) + ") lattice is not a chain");
    o.expect(oracle::closure_lattice(g).size() == lat.size(), "closure oracle disagrees");
  }
  if (o.passed) o.detail = "n=1..6";
  return o;
}

Outcome index_and_mirror() {
  using gluing::BetaSpec;
  Outcome o;
  for (int n = 1; n <= 4; ++n)
    for (int len = 3; len <= 8; ++len) {
      const auto type1 = gluing::index_class(n, BetaSpec::even(n, false), len);
      const auto type2 = gluing::index_class(n, BetaSpec::even(n, true), len);
      const std::string tag = " n=" + std::to_string(n) + " maxLen=" + std::to_string(len);
      o.expect(type1 == gluing::IndexClass{-1, -1}, "type-1 index" + tag);
      o.expect(type2 == gluing::IndexClass{-1, 1}, "type-2 index" + tag);
    }
  for (int n = 1; n <= 4; ++n) {
    const auto m = gluing::distinguish_mirror(n);
    for (const auto* side : {&m.identity, &m.mirror}) {
      o.expect(side->k0.rank == 2 && side->k0.torsion.empty(), "K0 = " + side->k0.to_string());
      o.expect(side->k1.is_zero(), "K1 = " + side->k1.to_string());
    }
    o.expect(m.mirror.relation == "p1=p2", "mirror relation " + m.mirror.relation);
    o.expect(m.identity.relation == "p1=-p2", "identity relation " + m.identity.relation);
    o.expect(m.verdict == "distinguishable", "verdict " + m.verdict);
  }
  if (o.passed) o.detail = "n=1..4, maxLen=3..8";
  return o;
}

Outcome glued_relations() {
  using gluing::BetaSpec;
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 2; ++n) {
    const auto sigma = reps::irrep({Family::ball_even, n, Kind::sigma, 0, 1.0, 0.0, 0.5, 8});
    const auto even = gluing::build_double_rep(sigma, sigma, BetaSpec::even(n, false));
    const auto r = gluing::verify_glued_relations(even, std::nullopt, 1e-10);
    worst = std::max(worst, r.max_value());
    o.expect(r.all_passed(), "even double n=" + std::to_string(n));
    for (int sign : {1, -1})
      for (double s : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const auto x = reps::irrep({Family::ball_odd, n, Kind::sigma_s, 0, 1.0, s, 0.5, 8});
        const auto odd = gluing::build_double_rep(x, x, BetaSpec::odd(n, sign));
        const auto ro = gluing::verify_glued_relations(odd, std::nullopt, 1e-10);
        worst = std::max(worst, ro.max_value());
        o.expect(ro.all_passed(), "odd double n=" + std::to_string(n) + " sign=" + std::to_string(sign));
      }
  }
  if (o.passed) o.detail = "max residual " + num(worst);
  return o;
}

Outcome mirror_consistency() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (double q : {0.3, 0.6, 0.9}) {
      const auto r = gluing::mirror_rep_consistency(n, q, 6, reps::theta_grid(8), 1e-12);
      worst = std::max(worst, r.max_value());
      o.expect(r.all_passed(), "n=" + std::to_string(n) + " q=" + num(q));
    }
  if (o.passed) o.detail = "max deviation " + num(worst);
  return o;
}

Outcome injectivity() {
  Outcome o;
  for (int n = 1; n <= 3; ++n)
    for (double q : {0.3, 0.6, 0.9}) {
      const auto sigma = reps::irrep({Family::ball_even, n, Kind::sigma, 0, 1.0, 0.0, q, 8});
      const auto res = reps::injectivity_check(sigma, reps::Criterion::normality_defect);
      o.expect(res.injective && std::abs(res.witness - (1.0 - q)) <= 1e-10,
               "sigma witness " + num(res.witness) + " at q=" + num(q));
      for (const auto& rep : reps::catalog(Family::ball_even, n, q, 8))
        if (rep.spec()->kind == Kind::rho)
          o.expect(!reps::injectivity_check(rep, reps::Criterion::normality_defect).injective,
                   rep.label() + " flagged injective");
    }
  for (int n = 1; n <= 3; ++n) {
    std::vector<reps::Representation> pm;
    for (const auto& r : reps::boundary_descents(Family::boundary_odd, n, 0.5, 8))
      if (r.spec()->kind == Kind::sigma_s) pm.push_back(r);
    o.expect(pm.size() == 2, "expected sigma_{-1} and sigma_{+1}");
    if (pm.size() != 2) continue;
    const auto res = reps::injectivity_check(reps::direct_sum(pm), reps::Criterion::sign_spectrum);
    o.expect(res.injective, "sigma_{+1} + sigma_{-1} not injective at n=" + std::to_string(n));
  }
  if (o.passed) o.detail = "sigma witness 1-q, rho non-injective, sign spectrum covers both signs";
  return o;
}

Outcome confluence() {
  Outcome o;
  constexpr int per_presentation = 10'000;
  std::size_t divergences = 0;
  std::mt19937_64 rng(20260);
  const auto start = std::chrono::steady_clock::now();
  for (Family f : all_families)
    for (int n = 1; n <= 4; ++n) {
      const auto pres = ncalg::build_presentation(f, n);
      const auto gens = pres.generators();
      for (int k = 0; k < per_presentation; ++k) {
        const auto p = oracle::random_polynomial(gens, rng, 6, 3);
        const auto a = ncalg::normal_form(p, pres, {ncalg::Strategy::leftmost_innermost, 0});
        const auto b = ncalg::normal_form(p, pres, {ncalg::Strategy::random_redex, rng()});
        if (!(a == b)) {
          if (divergences == 0) o.fail(pres.name() + " diverges on " + p.to_string());
          ++divergences;
        }
      }
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.passed) o.detail = "160000 reductions, 0 divergences, " + num(secs) + " s";
  else o.detail += " (" + std::to_string(divergences) + " divergences)";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symbolic zero-reduction", symbolic_identities},
      {"catalog residuals and positivity", catalog_residuals},
      {"suspension coherence", suspension_coherence},
      {"sum identities", sum_identities},
      {"TCCR correspondence", tccr},
      {"graph K-theory table", graph_ktheory},
      {"ideal lattice chains", ideal_lattice},
      {"index and mirror distinction", index_and_mirror},
      {"glued relations", glued_relations},
      {"mirror representation consistency", mirror_consistency},
      {"injectivity criteria", injectivity},
      {"confluence fuzz", confluence},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.passed) ++failures;
    std::printf("%s criterion %zu: %s (%s)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
