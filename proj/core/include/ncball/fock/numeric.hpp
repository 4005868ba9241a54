#pragma once

#include <optional>
#include <vector>

#include "ncball/fock/operator.hpp"

namespace ncball::fock {

/// Dense problems up to this size use an eigensolver; larger ones use power
/// iteration.
inline constexpr long dense_limit = 1024;

/// Largest singular value. Matrices with at most one nonzero per row and
/// column take an exact shortcut.
double operator_norm(const DenseMatrix& m);
double operator_norm(const OperatorMatrix& m);
/// ||P m P|| for the interior projector P.
double compressed_norm(const OperatorMatrix& m, const InteriorProjector& p);

/// Eigenvalues of a self-adjoint matrix in increasing order.
std::vector<double> hermitian_eigenvalues(const DenseMatrix& m);
double min_eigenvalue(const DenseMatrix& hermitian);
/// Eigenvalues of an arbitrary square matrix.
std::vector<Complex> eigenvalues(const DenseMatrix& m);

/// T = A P (P A^* A P)^{-1/2}, the isometric part of A restricted to the
/// range of the diagonal projector `domain` (the whole space when absent).
/// Throws Error(not_invertible) when a singular value of A P on that range
/// falls below tol.
OperatorMatrix polar_isometry(const OperatorMatrix& a, double tol,
                              const std::optional<InteriorProjector>& domain = std::nullopt);

/// Positive square root of a self-adjoint operator. Eigenvalues down to
/// -1e-10 are clamped to zero; anything more negative throws
/// Error(not_positive). Eigenvalues within psd_snap * max(1, ||a||) of zero
/// are treated as zero.
OperatorMatrix psd_sqrt(const OperatorMatrix& a);

inline constexpr double psd_clamp = 1e-10;
inline constexpr double psd_snap = 1e-14;

}  // namespace ncball::fock
