#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <complex>
#include <vector>

#include "ncball/fock/space.hpp"

namespace ncball::fock {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::ColMajor, long>;
using DenseMatrix = Eigen::MatrixXcd;

/// Square complex matrix acting on a TruncatedSpace. Stored sparse; the
/// matrices of the representation catalog have at most one nonzero per
/// column.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(TruncatedSpace space, SparseMatrix matrix);
  OperatorMatrix(TruncatedSpace space, const DenseMatrix& matrix);

  static OperatorMatrix zero(const TruncatedSpace& space);
  static OperatorMatrix identity(const TruncatedSpace& space);
  /// Diagonal matrix with the given entries (size must match the space).
  static OperatorMatrix diagonal(const TruncatedSpace& space, const std::vector<Complex>& entries);

  const TruncatedSpace& space() const noexcept { return space_; }
  const SparseMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return space_.dimension(); }
  DenseMatrix dense() const { return DenseMatrix(matrix_); }
  Complex entry(std::size_t row, std::size_t col) const;
  bool is_diagonal() const;

  OperatorMatrix adjoint() const;

  OperatorMatrix& operator+=(const OperatorMatrix& other);
  OperatorMatrix& operator-=(const OperatorMatrix& other);
  OperatorMatrix& operator*=(Complex c);
  friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) { return a += b; }
  friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) { return a -= b; }
  friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
  friend OperatorMatrix operator*(Complex c, OperatorMatrix a) { return a *= c; }
  friend OperatorMatrix operator-(OperatorMatrix a) { return a *= Complex(-1.0); }

  /// Kronecker product on space().tensor(other.space()).
  OperatorMatrix tensor(const OperatorMatrix& other) const;

  /// Submatrix on the projector's indices (rows and columns).
  DenseMatrix compress(const InteriorProjector& p) const;

 private:
  void require_same_space(const OperatorMatrix& other, const char* op) const;

  TruncatedSpace space_;
  SparseMatrix matrix_;
};

/// Block-diagonal operator diag(blocks[0], blocks[1], ...) on
/// TruncatedSpace::blocks(k).tensor(H); all blocks must act on H.
OperatorMatrix block_diagonal(const std::vector<OperatorMatrix>& blocks);
/// Block b of an operator on blocks(k).tensor(H).
OperatorMatrix diagonal_block(const OperatorMatrix& op, int block);

/// Deformation parameter, validated to lie strictly inside (0, 1).
class QValue {
 public:
  explicit QValue(double q);
  double value() const noexcept { return q_; }
  double sqrt() const;
  operator double() const noexcept { return q_; }  // NOLINT(google-explicit-constructor)

 private:
  double q_;
};

/// S_r on the space (1-based r over all axes; r must name a truncated axis):
/// raises k_r by one with weight sqrt((1 - q^{1+k_r}) q^{k_{r+1}+...+k_m}),
/// the sum running over the truncated axes after r. The top level maps to 0.
OperatorMatrix weighted_shift(int r, const TruncatedSpace& space, QValue q);

/// Diagonal q^{(sum_{i in which} k_i)/2}; which holds 1-based axis numbers.
OperatorMatrix q_diagonal(const TruncatedSpace& space, QValue q, const std::vector<int>& which);
/// q_diagonal over every truncated axis.
OperatorMatrix q_diagonal_all(const TruncatedSpace& space, QValue q);

}  // namespace ncball::fock
