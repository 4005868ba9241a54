#include <gtest/gtest.h>

#include <random>

#include "../support/oracles.hpp"
#include "ncball/graphs/smith.hpp"

using namespace ncball::graphs;

namespace {

bool is_diagonal_chain(const IntMatrix& d) {
  mpz_class prev = 1;
  bool zero_seen = false;
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) {
      const mpz_class& x = d(r, c);
      if (r != c) {
        if (x != 0) return false;
        continue;
      }
      if (x < 0) return false;
      if (x == 0) {
        zero_seen = true;
        continue;
      }
      if (zero_seen || x % prev != 0) return false;
      prev = x;
    }
  return true;
}

void expect_valid(const IntMatrix& m) {
  const auto snf = smith_normal_form(m);
  EXPECT_EQ(snf.u * m * snf.v, snf.d) << m.to_string();
  EXPECT_TRUE(is_diagonal_chain(snf.d)) << snf.d.to_string();
  EXPECT_EQ(abs(oracle::determinant(snf.u)), 1);
  EXPECT_EQ(abs(oracle::determinant(snf.v)), 1);
  EXPECT_EQ(snf.diagonal(), oracle::invariant_factors(m)) << m.to_string();
  EXPECT_EQ(snf.rank(), oracle::rational_rank(m));
}

}  // namespace

TEST(Smith, SmallExamples) {
  const auto zero = smith_normal_form(IntMatrix{{0}});
  EXPECT_TRUE(zero.diagonal().empty());
  EXPECT_EQ(cokernel(zero).to_string(), "Z");
  EXPECT_EQ(kernel(zero).to_string(), "Z");

  const auto column = smith_normal_form(IntMatrix{{-1}, {1}});
  EXPECT_EQ(column.diagonal(), std::vector<mpz_class>{1});
  EXPECT_EQ(cokernel(column).to_string(), "Z");
  EXPECT_TRUE(kernel(column).is_zero());

  const auto diag = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(diag.diagonal(), (std::vector<mpz_class>{1, 6}));
  EXPECT_EQ(cokernel(diag).to_string(), "Z/6");

  const auto torsion = smith_normal_form(IntMatrix{{2, 4}, {6, 8}, {0, 0}});
  EXPECT_EQ(cokernel(torsion).to_string(), "Z + Z/2 + Z/4");
  for (const auto& m : {IntMatrix{{0}}, IntMatrix{{-1}, {1}}, IntMatrix{{2, 0}, {0, 3}},
                        IntMatrix{{2, 4}, {6, 8}, {0, 0}}, IntMatrix(0, 3), IntMatrix(2, 0)})
    expect_valid(m);
}

TEST(Smith, RandomMatricesAgainstDeterminantalDivisors) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    IntMatrix m(rows, cols);
    const long range = trial % 3 == 0 ? 3 : 40;
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(rng() % (2 * range + 1)) - range;
    expect_valid(m);
  }
}

TEST(Smith, GroupText) {
  EXPECT_EQ(AbelianGroup{}.to_string(), "0");
  EXPECT_EQ((AbelianGroup{2, {}}).to_string(), "Z^2");
  EXPECT_EQ((AbelianGroup{1, {2}}).to_string(), "Z + Z/2");
}
