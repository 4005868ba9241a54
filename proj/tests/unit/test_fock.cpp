#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ncball/error.hpp"
#include "ncball/fock/evaluate.hpp"
#include "ncball/fock/numeric.hpp"

using namespace ncball;
using namespace ncball::fock;

TEST(Space, IndexRoundTripAndBlocks) {
  const TruncatedSpace h(3, 4);
  EXPECT_EQ(h.dimension(), 64u);
  for (std::size_t i = 0; i < h.dimension(); ++i) EXPECT_EQ(h.index(h.multi_index(i)), i);
  EXPECT_EQ(h.index({1, 2, 3}), 1u * 16 + 2 * 4 + 3);
  EXPECT_EQ(TruncatedSpace(0, 5).dimension(), 1u);
  const auto b = TruncatedSpace::blocks(2).tensor(h);
  EXPECT_EQ(b.dimension(), 128u);
  const InteriorProjector p(b, 1);
  EXPECT_EQ(p.indices().size(), 2u * 27);  // block axis untouched
}

TEST(Operators, WeightedShiftEntries) {
  const double q = 0.3;
  const TruncatedSpace h(2, 5);
  const auto s1 = weighted_shift(1, h, QValue(q));
  const auto s2 = weighted_shift(2, h, QValue(q));
  for (int k1 = 0; k1 < 5; ++k1)
    for (int k2 = 0; k2 < 5; ++k2) {
      const std::size_t col = h.index({k1, k2});
      if (k1 + 1 < 5)
        EXPECT_NEAR(s1.entry(h.index({k1 + 1, k2}), col).real(),
                    std::sqrt((1 - std::pow(q, k1 + 1)) * std::pow(q, k2)), 1e-15);
      if (k2 + 1 < 5)
        EXPECT_NEAR(s2.entry(h.index({k1, k2 + 1}), col).real(), std::sqrt(1 - std::pow(q, k2 + 1)), 1e-15);
    }
  EXPECT_EQ(s1.matrix().nonZeros(), 20);
  const auto d = q_diagonal(h, QValue(q), {2});
  EXPECT_NEAR(d.entry(h.index({3, 2}), h.index({3, 2})).real(), q, 1e-15);
  EXPECT_NEAR(q_diagonal_all(h, QValue(q)).entry(h.index({1, 1}), h.index({1, 1})).real(), q, 1e-15);
  EXPECT_THROW(QValue(1.0), Error);
  EXPECT_THROW(QValue(0.0), Error);
}

TEST(Operators, BlockDiagonalAndTensor) {
  const TruncatedSpace h(1, 3);
  const auto s = weighted_shift(1, h, QValue(0.5));
  const auto id = OperatorMatrix::identity(h);
  const auto bd = block_diagonal({s, id});
  EXPECT_EQ(bd.dimension(), 6u);
  EXPECT_EQ(diagonal_block(bd, 0).matrix().nonZeros(), s.matrix().nonZeros());
  EXPECT_NEAR(operator_norm(diagonal_block(bd, 1) - id), 0.0, 0.0);
  EXPECT_EQ(s.tensor(id).dimension(), 9u);
  EXPECT_THROW(s + OperatorMatrix::identity(TruncatedSpace(2, 3)), Error);
}

TEST(Numeric, NormAgreesWithSvd) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> nd;
  for (int n : {1, 3, 17, 60}) {
    DenseMatrix m(n, n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) m(i, j) = Complex(nd(rng), nd(rng));
    Eigen::JacobiSVD<DenseMatrix> svd(m);
    EXPECT_NEAR(operator_norm(m), svd.singularValues()(0), 1e-9 * svd.singularValues()(0));
  }
  // Weighted partial permutation.
  DenseMatrix p = DenseMatrix::Zero(4, 4);
  p(1, 0) = 0.5;
  p(3, 2) = Complex(0.0, -2.0);
  EXPECT_DOUBLE_EQ(operator_norm(p), 2.0);
}

TEST(Numeric, PowerIterationAboveDenseLimit) {
  const int n = static_cast<int>(dense_limit) + 200;
  const TruncatedSpace h(1, n);
  std::vector<Complex> ramp;
  for (int k = 0; k < n; ++k) ramp.push_back(Complex(static_cast<double>(k) / n));
  const auto s = weighted_shift(1, h, QValue(1e-300));  // unit weights below the top level
  const auto a = OperatorMatrix::diagonal(h, ramp) + Complex(0.3) * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(a.dense(), Eigen::EigenvaluesOnly);
  const double expected = std::max(es.eigenvalues().maxCoeff(), -es.eigenvalues().minCoeff());
  EXPECT_NEAR(operator_norm(a), expected, 1e-8);
}

TEST(Numeric, PsdSqrt) {
  const TruncatedSpace h(1, 6);
  const auto s = weighted_shift(1, h, QValue(0.4));
  const auto a = s * s.adjoint() + Complex(0.5) * (s + s.adjoint()) + Complex(2.0) * OperatorMatrix::identity(h);
  const auto r = psd_sqrt(a);
  EXPECT_LT(operator_norm(r * r - a), 1e-12);
  EXPECT_LT(operator_norm(r - r.adjoint()), 1e-12);
  try {
    psd_sqrt(Complex(-1.0) * OperatorMatrix::identity(h));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_positive);
  }
  EXPECT_THROW(psd_sqrt(s), Error);
  // Rounding noise just below zero is clamped.
  const auto tiny = psd_sqrt(Complex(-1e-13) * OperatorMatrix::identity(h));
  EXPECT_EQ(operator_norm(tiny), 0.0);
}

TEST(Numeric, PolarIsometryOnDomain) {
  const TruncatedSpace h(2, 5);
  const auto s = weighted_shift(2, h, QValue(0.5));
  std::vector<int> margins{0, 1};
  const InteriorProjector dom(h, margins);
  const auto t = polar_isometry(s, 1e-8, dom);
  const auto tt = t.adjoint() * t;
  for (std::size_t i = 0; i < h.dimension(); ++i)
    EXPECT_NEAR(tt.entry(i, i).real(), dom.contains(i) ? 1.0 : 0.0, 1e-12);
  try {
    polar_isometry(s, 1e-8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_invertible);
  }
}

TEST(Evaluate, ResidualOfSimpleRelations) {
  const double q = 0.5;
  const TruncatedSpace h(1, 10);
  Assignment a(h, q);
  a.set('z', 1, weighted_shift(1, h, QValue(q)));
  using ncalg::Polynomial;
  const Polynomial z = Polynomial::generator('z', 1), zs = Polynomial::generator('z', 1, true);
  // z' z - q z z' = 1 - q holds below the top level.
  const Polynomial rel = zs * z - Polynomial(Laurent::q()) * (z * zs) - Polynomial(Laurent(1L) - Laurent::q());
  EXPECT_LT(residual(rel, a, 1), 1e-15);
  EXPECT_GT(residual(rel, a, 0), 0.1);
  EXPECT_EQ(residual(Polynomial(), a, 0), 0.0);
  EXPECT_THROW(evaluate(Polynomial::generator('z', 2), a), Error);
}
