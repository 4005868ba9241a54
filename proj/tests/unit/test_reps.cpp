#include <gtest/gtest.h>

#include <cmath>

#include "ncball/error.hpp"
#include "ncball/fock/numeric.hpp"
#include "ncball/reps/injectivity.hpp"
#include "ncball/reps/suspension.hpp"
#include "ncball/reps/verify.hpp"

using namespace ncball;
using namespace ncball::reps;
using ncalg::Family;

namespace {

RepSpec sigma_spec(int n, double q, int cutoff) {
  return {Family::ball_even, n, Kind::sigma, 0, 1.0, 0.0, q, cutoff};
}

}  // namespace

TEST(Catalog, SigmaOfTheDiscMatchesHandBuiltShift) {
  const double q = 0.6;
  const auto sigma = irrep(sigma_spec(1, q, 7));
  const auto& z = sigma.generator(1);
  for (int k = 0; k < 7; ++k)
    for (int l = 0; l < 7; ++l) {
      const double expected = (l == k + 1) ? std::sqrt(1.0 - std::pow(q, l)) : 0.0;
      EXPECT_NEAR(std::abs(z.entry(static_cast<std::size_t>(l), static_cast<std::size_t>(k))), expected, 1e-15);
    }
}

TEST(Catalog, SizesAndShapes) {
  for (int n = 1; n <= 3; ++n) {
    EXPECT_EQ(catalog(Family::ball_even, n, 0.5, 4).size(), static_cast<std::size_t>(8 * n + 1));
    EXPECT_EQ(catalog(Family::ball_odd, n, 0.5, 4).size(), static_cast<std::size_t>(8 * (n - 1) + 5));
    EXPECT_EQ(catalog_shape(Family::ball_even, n).circle_families, n);
    EXPECT_EQ(catalog_shape(Family::ball_even, n).other_families, 1);
  }
  RepSpec rho{Family::ball_even, 3, Kind::rho, 2, std::polar(1.0, 0.3), 0.0, 0.5, 5};
  const auto r = irrep(rho);
  EXPECT_EQ(r.space().dimension(), 5u);
  EXPECT_EQ(operator_norm(r.generator(1)), 0.0);
  EXPECT_NEAR(std::abs(r.generator(2).entry(0, 0) - std::polar(1.0, 0.3)), 0.0, 1e-15);
}

TEST(Catalog, InvalidSpecs) {
  RepSpec bad{Family::ball_even, 2, Kind::rho, 3, 1.0, 0.0, 0.5, 5};
  EXPECT_THROW(irrep(bad), Error);
  bad.j = 1;
  bad.theta = 2.0;
  EXPECT_THROW(irrep(bad), Error);
  RepSpec odd{Family::ball_odd, 2, Kind::sigma_s, 0, 1.0, 1.5, 0.5, 5};
  EXPECT_THROW(irrep(odd), Error);
  odd.s_param = 0.0;
  odd.q = 1.2;
  EXPECT_THROW(irrep(odd), Error);
}

TEST(Verify, CatalogSatisfiesRelationsOnInterior) {
  for (Family f : {Family::ball_even, Family::ball_odd, Family::boundary_even, Family::boundary_odd})
    for (int n = 1; n <= 2; ++n) {
      const auto pres = ncalg::build_presentation(f, n);
      for (const auto& rep : catalog(f, n, 0.45, 6, theta_grid(4))) {
        const auto report = verify_rep(rep, pres, 2, 1e-10);
        EXPECT_TRUE(report.all_passed()) << report.to_text();
      }
    }
}

TEST(Verify, TruncationEdgeIsVisibleWithoutMargin) {
  const auto pres = ncalg::build_presentation(Family::ball_even, 1);
  const auto report = verify_rep(irrep(sigma_spec(1, 0.5, 6)), pres, 0, 1e-10);
  EXPECT_FALSE(report.all_passed());
}

TEST(Verify, WrongGeneratorsRejected) {
  const auto pres = ncalg::build_presentation(Family::ball_even, 3);
  EXPECT_THROW(verify_rep(irrep(sigma_spec(2, 0.5, 4)), pres), Error);
}

TEST(Suspension, SigmaSuspendsToTheNextSigma) {
  for (int n = 1; n <= 2; ++n) {
    const auto base = irrep(sigma_spec(n, 0.5, 6));
    const auto up = suspend_rep(base, 6);
    const auto next = irrep(sigma_spec(n + 1, 0.5, 6));
    const fock::InteriorProjector all(next.space(), 0);
    for (int j = 1; j <= n + 1; ++j) EXPECT_LE(max_entry_difference(up.generator(j), next.generator(j), all), 1e-12);
    EXPECT_TRUE(suspension_identity_report(base, up, 1, 1e-12).all_passed());
  }
  const auto point = suspend_rep(point_rep('z', 0.5), 6);
  EXPECT_EQ(point.size(), 1);
  const auto disc = irrep(sigma_spec(1, 0.5, 6));
  EXPECT_LE(max_entry_difference(point.generator(1), disc.generator(1), fock::InteriorProjector(disc.space(), 0)),
            1e-15);
}

TEST(Series, SumIdentitiesConverge) {
  SumIdentityOptions opts;
  opts.base_cutoff = 5;
  opts.levels = 12;
  opts.orders = {0, 2, 4, 8};
  const auto r = check_sum_identities(1, opts);
  EXPECT_TRUE(r.all_passed()) << r.to_text();
}

TEST(Series, TwistedCommutationRelations) {
  for (int n = 1; n <= 2; ++n) EXPECT_TRUE(tccr_report(n, 0.4, 6).all_passed());
}

TEST(Injectivity, NormalityDefectOfSigma) {
  for (double q : {0.3, 0.7}) {
    const auto res = injectivity_check(irrep(sigma_spec(2, q, 8)), Criterion::normality_defect);
    EXPECT_TRUE(res.injective);
    EXPECT_NEAR(res.witness, 1.0 - q, 1e-10);
  }
  for (const auto& rep : catalog(Family::ball_even, 2, 0.5, 6))
    if (rep.spec()->kind == Kind::rho) EXPECT_FALSE(injectivity_check(rep, Criterion::normality_defect).injective);
}

TEST(Injectivity, SignSpectrumOnTheOddBoundary) {
  const auto descents = boundary_descents(Family::boundary_odd, 2, 0.5, 8);
  std::vector<Representation> sigmas;
  for (const auto& r : descents)
    if (r.spec()->kind == Kind::sigma_s) sigmas.push_back(r);
  ASSERT_EQ(sigmas.size(), 2u);
  EXPECT_FALSE(injectivity_check(sigmas[0], Criterion::sign_spectrum).injective);
  const auto sum = direct_sum(sigmas, "sigma_{+1} + sigma_{-1}");
  const auto res = injectivity_check(sum, Criterion::sign_spectrum);
  EXPECT_TRUE(res.injective);
  EXPECT_GT(res.witness, 0.0);
}

TEST(Injectivity, CircleCoverNeedsManyPhases) {
  const auto descents = boundary_descents(Family::boundary_even, 2, 0.5, 6, theta_grid(64));
  std::vector<Representation> top;
  for (const auto& r : descents)
    if (r.spec()->j == 2) top.push_back(r);
  EXPECT_FALSE(injectivity_check(top.front(), Criterion::circle_cover).injective);
  EXPECT_TRUE(injectivity_check(direct_sum(top), Criterion::circle_cover).injective);
}
