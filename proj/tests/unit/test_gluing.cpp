#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "../support/oracles.hpp"
#include "ncball/error.hpp"
#include "ncball/fock/numeric.hpp"
#include "ncball/gluing/double_rep.hpp"
#include "ncball/gluing/index.hpp"
#include "ncball/gluing/mirror.hpp"
#include "ncball/graphs/ck_family.hpp"
#include "ncball/reps/suspension.hpp"

using namespace ncball;
using namespace ncball::gluing;
using reps::Kind;
using reps::RepSpec;

namespace {

Representation sigma(int n, double q = 0.5, int cutoff = 6) {
  return reps::irrep({ncalg::Family::ball_even, n, Kind::sigma, 0, 1.0, 0.0, q, cutoff});
}

Representation sigma_s(int n, double s, double q = 0.5, int cutoff = 6) {
  return reps::irrep({ncalg::Family::ball_odd, n, Kind::sigma_s, 0, 1.0, s, q, cutoff});
}

double diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  return reps::max_entry_difference(a, b, fock::InteriorProjector(a.space(), 0));
}

}  // namespace

TEST(DoubleRep, EvenBlocksFollowTheComponentFormulas) {
  const auto s = sigma(2);
  const Complex lambda = std::polar(1.0, 0.7);
  const auto beta = BetaSpec::even(2, false, {lambda, 1.0});
  const auto d = build_double_rep(s, s, beta);
  ASSERT_EQ(d.n(), 2);
  const auto z1 = s.generator(1);
  const auto defect = fock::psd_sqrt(OperatorMatrix::identity(s.space()) - z1 * z1.adjoint() -
                                     s.generator(2) * s.generator(2).adjoint());
  EXPECT_LE(diff(d.generators[1], fock::block_diagonal({lambda * z1, z1})), 1e-15);
  EXPECT_LE(diff(d.generators[0], fock::block_diagonal({defect, -defect})), 1e-15);
  EXPECT_LE(diff(d.generators[2], fock::block_diagonal({s.generator(2), s.generator(2)})), 1e-15);

  const auto mirror = build_double_rep(s, s, BetaSpec::even(2, true));
  EXPECT_LE(diff(mirror.generators[1], fock::block_diagonal({z1.adjoint(), z1})), 1e-15);
}

TEST(DoubleRep, OddBlocksFollowTheComponentFormulas) {
  const auto x = sigma_s(2, 0.5);
  const auto plain = build_double_rep(x, x, BetaSpec::odd(2, 1));
  EXPECT_LE(diff(plain.generators[1], fock::block_diagonal({x.generator(1), x.generator(1)})), 1e-15);
  const auto flipped = build_double_rep(x, x, BetaSpec::odd(2, -1));
  EXPECT_LE(diff(flipped.generators[1], fock::block_diagonal({-x.generator(1), x.generator(1)})), 1e-15);
  EXPECT_EQ(flipped.beta.type(), 2);
  EXPECT_EQ(plain.beta.type(), 1);
}

TEST(DoubleRep, GluedRelationsHold) {
  for (int n = 1; n <= 2; ++n) {
    const auto s = sigma(n);
    const auto even = build_double_rep(s, s, BetaSpec::even(n, false));
    const auto r = verify_glued_relations(even);
    EXPECT_TRUE(r.all_passed()) << r.to_text();
    EXPECT_THROW(verify_glued_relations(build_double_rep(s, s, BetaSpec::even(n, true))), Error);
    for (int sign : {1, -1})
      for (double t : {-1.0, 0.3, 1.0}) {
        const auto x = sigma_s(n + 1, t);
        const auto odd = build_double_rep(x, x, BetaSpec::odd(n + 1, sign));
        const auto ro = verify_glued_relations(odd);
        EXPECT_TRUE(ro.all_passed()) << ro.to_text();
      }
  }
}

TEST(DoubleRep, RejectsMismatches) {
  EXPECT_THROW(build_double_rep(sigma(2, 0.5, 5), sigma(2, 0.5, 6), BetaSpec::even(2, false)), Error);
  EXPECT_THROW(build_double_rep(sigma(2, 0.5), sigma(2, 0.4), BetaSpec::even(2, false)), Error);
  EXPECT_THROW(build_double_rep(sigma(2), sigma(2), BetaSpec::even(3, false)), Error);
  EXPECT_THROW(build_double_rep(sigma(2), sigma(2), BetaSpec::odd(2, 1)), Error);
  EXPECT_THROW(build_double_rep(sigma(2), sigma(2), BetaSpec::even(2, false, {2.0, 1.0})), Error);
  EXPECT_THROW(build_double_rep(sigma_s(2, 0.0), sigma_s(2, 0.0), BetaSpec::odd(2, 0)), Error);
}

namespace {

// Fredholm defects counted with floating point ranks on the same path space.
IndexClass numeric_index(int n, bool conjugate, int max_length) {
  const auto fam = graphs::path_ck_family(graphs::build_graph(graphs::GraphFamily::M, n), max_length);
  int loop = -1;
  for (std::size_t e = 0; e < fam.graph.edges().size(); ++e)
    if (fam.graph.edges()[e].source == n - 1 && fam.graph.edges()[e].range == n - 1) loop = static_cast<int>(e);
  const Eigen::MatrixXd s = oracle::to_dense(fam.edge_isometries[static_cast<std::size_t>(loop)]);
  const Eigen::MatrixXd p = oracle::to_dense(fam.vertex_projections[static_cast<std::size_t>(n - 1)]);
  const long dim = s.rows();
  Eigen::MatrixXd keep = Eigen::MatrixXd::Zero(dim, dim);
  for (auto i : fam.paths_up_to(max_length - 1)) keep(static_cast<long>(i), static_cast<long>(i)) = 1;
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(dim, dim);
  auto defect = [&](const Eigen::MatrixXd& u) {
    const Eigen::MatrixXd a = keep * (id - u.transpose() * u) * keep;
    const Eigen::MatrixXd b = keep * (id - u * u.transpose()) * keep;
    return oracle::numeric_rank(a) - oracle::numeric_rank(b);
  };
  const Eigen::MatrixXd u1 = s + id - p;
  const Eigen::MatrixXd u2 = (conjugate ? Eigen::MatrixXd(s.transpose()) : s) + id - p;
  return {defect(u1), defect(u2)};
}

}  // namespace

TEST(Index, AgreesWithFloatingPointRanks) {
  for (int n = 1; n <= 3; ++n)
    for (bool conj : {false, true}) {
      const auto exact = index_class(n, BetaSpec::even(n, conj), 5);
      EXPECT_EQ(exact, numeric_index(n, conj, 5)) << "n=" << n << " conj=" << conj;
    }
  EXPECT_EQ(index_class(2, BetaSpec::even(2, false)), (IndexClass{-1, -1}));
  EXPECT_EQ(index_class(2, BetaSpec::even(2, true)), (IndexClass{-1, 1}));
}

TEST(Index, StableInTruncationAndPhase) {
  const Complex lambda = std::polar(1.0, std::numbers::pi / 3);
  for (int len = 3; len <= 7; ++len) {
    EXPECT_EQ(index_class(2, BetaSpec::even(2, true), len), (IndexClass{-1, 1}));
    EXPECT_EQ(index_class(2, BetaSpec::even(2, true, {lambda, 1.0}), len), (IndexClass{-1, 1}));
    EXPECT_EQ(index_class(2, BetaSpec::even(2, false, {lambda, lambda}), len), (IndexClass{-1, -1}));
  }
}

TEST(Index, SixTermSequence) {
  const auto same = ktheory_double({-1, -1});
  EXPECT_EQ(same.k0.to_string(), "Z^2");
  EXPECT_TRUE(same.k1.is_zero());
  EXPECT_EQ(same.relation, "p1=-p2");
  const auto mirror = ktheory_double({-1, 1});
  EXPECT_EQ(mirror.k0, same.k0);
  EXPECT_EQ(mirror.relation, "p1=p2");
  const auto none = ktheory_double({0, 0});
  EXPECT_EQ(none.k0.to_string(), "Z^3");
  EXPECT_EQ(none.k1.to_string(), "Z");
  EXPECT_EQ(none.relation, "independent");
  const auto torsion = ktheory_double({2, 4});
  EXPECT_EQ(torsion.k0.to_string(), "Z^2 + Z/2");
  EXPECT_TRUE(torsion.k1.is_zero());
}

TEST(Mirror, DistinguishedByTheGeneratorRelation) {
  for (int n = 1; n <= 3; ++n) {
    const auto m = distinguish_mirror(n);
    EXPECT_EQ(m.identity.k0, m.mirror.k0);
    EXPECT_EQ(m.identity.k1, m.mirror.k1);
    EXPECT_EQ(m.identity.relation, "p1=-p2");
    EXPECT_EQ(m.mirror.relation, "p1=p2");
    EXPECT_EQ(m.verdict, "distinguishable");
  }
}

TEST(Mirror, ClosedFormsMatchTheComponents) {
  for (int n = 1; n <= 3; ++n)
    for (double q : {0.3, 0.8}) {
      const auto r = mirror_rep_consistency(n, q, 5, reps::theta_grid(4));
      EXPECT_TRUE(r.all_passed()) << r.to_text();
    }
  const auto plus = mirror_closed_form(MirrorKind::sigma_plus, 2, 0.5, 4);
  ASSERT_EQ(plus.size(), 3u);
  EXPECT_LE(diff(plus[1], sigma(2, 0.5, 4).generator(1).adjoint()), 1e-15);
  EXPECT_THROW(mirror_closed_form(MirrorKind::varrho, 2, 0.5, 4, 3), Error);
}
