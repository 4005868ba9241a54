#include "ncball/fock/numeric.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ncball/error.hpp"

namespace ncball::fock {

namespace {

// Power iteration on M^* M, stopping at 1e-12 relative change.
template <class Matrix>
double power_norm(const Matrix& m) {
  const long n = m.cols();
  Eigen::VectorXcd v(n);
  for (long i = 0; i < n; ++i) v(i) = Complex(1.0 + 0.37 * std::sin(1.0 + i), 0.21 * std::cos(3.0 * i));
  v.normalize();
  double prev = 0.0;
  for (int it = 0; it < 20000; ++it) {
    Eigen::VectorXcd w = m.adjoint() * (m * v);
    const double lambda = w.norm();
    if (lambda == 0.0) return 0.0;
    v = w / lambda;
    if (std::abs(lambda - prev) <= 1e-12 * lambda) return std::sqrt(lambda);
    prev = lambda;
  }
  return std::sqrt(prev);
}

bool dense_is_diagonal(const DenseMatrix& m) {
  for (long c = 0; c < m.cols(); ++c)
    for (long r = 0; r < m.rows(); ++r)
      if (r != c && m(r, c) != Complex(0.0)) return false;
  return true;
}

// At most one nonzero per row and per column: the norm is the largest
// modulus. Covers diagonals and the shift-type residuals of homogeneous
// relations.
std::optional<double> partial_permutation_norm(const DenseMatrix& m) {
  std::vector<char> row_used(static_cast<std::size_t>(m.rows()), 0);
  double best = 0.0;
  for (long c = 0; c < m.cols(); ++c) {
    bool col_used = false;
    for (long r = 0; r < m.rows(); ++r) {
      if (m(r, c) == Complex(0.0)) continue;
      if (col_used || row_used[static_cast<std::size_t>(r)]) return std::nullopt;
      col_used = true;
      row_used[static_cast<std::size_t>(r)] = 1;
      best = std::max(best, std::abs(m(r, c)));
    }
  }
  return best;
}

std::optional<double> partial_permutation_norm(const SparseMatrix& s) {
  std::vector<char> row_used(static_cast<std::size_t>(s.rows()), 0);
  double best = 0.0;
  for (long k = 0; k < s.outerSize(); ++k) {
    bool col_used = false;
    for (SparseMatrix::InnerIterator it(s, k); it; ++it) {
      if (it.value() == Complex(0.0)) continue;
      if (col_used || row_used[static_cast<std::size_t>(it.row())]) return std::nullopt;
      col_used = true;
      row_used[static_cast<std::size_t>(it.row())] = 1;
      best = std::max(best, std::abs(it.value()));
    }
  }
  return best;
}

}  // namespace

double operator_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0.0;
  if (auto fast = partial_permutation_norm(m)) return *fast;
  if (m.cols() <= dense_limit) {
    DenseMatrix g = m.adjoint() * m;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(g, Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
  }
  return power_norm(m);
}

double operator_norm(const OperatorMatrix& m) {
  const SparseMatrix& s = m.matrix();
  if (s.nonZeros() == 0) return 0.0;
  if (auto fast = partial_permutation_norm(s)) return *fast;
  if (static_cast<long>(m.dimension()) <= dense_limit) return operator_norm(m.dense());
  return power_norm(s);
}

double compressed_norm(const OperatorMatrix& m, const InteriorProjector& p) {
  return operator_norm(m.compress(p));
}

std::vector<double> hermitian_eigenvalues(const DenseMatrix& m) {
  if (m.size() == 0) return {};
  std::vector<double> out;
  if (dense_is_diagonal(m)) {
    for (long i = 0; i < m.rows(); ++i) out.push_back(m(i, i).real());
  } else {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(m, Eigen::EigenvaluesOnly);
    for (long i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  }
  std::sort(out.begin(), out.end());
  return out;
}

double min_eigenvalue(const DenseMatrix& hermitian) {
  const auto ev = hermitian_eigenvalues(hermitian);
  return ev.empty() ? 0.0 : ev.front();
}

std::vector<Complex> eigenvalues(const DenseMatrix& m) {
  std::vector<Complex> out;
  if (m.size() == 0) return out;
  if (dense_is_diagonal(m)) {
    for (long i = 0; i < m.rows(); ++i) out.push_back(m(i, i));
    return out;
  }
  Eigen::ComplexEigenSolver<DenseMatrix> es(m, false);
  for (long i = 0; i < es.eigenvalues().size(); ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

OperatorMatrix polar_isometry(const OperatorMatrix& a, double tol,
                              const std::optional<InteriorProjector>& domain) {
  const TruncatedSpace& space = a.space();
  const InteriorProjector full(space, 0);
  const InteriorProjector& p = domain ? *domain : full;
  if (!(p.space() == space)) throw_invalid("polar domain acts on a different space");
  const auto& idx = p.indices();
  const auto k = static_cast<long>(idx.size());

  // Columns of A on the domain, then the Gram matrix on the domain.
  SparseMatrix select(static_cast<long>(space.dimension()), k);
  {
    std::vector<Eigen::Triplet<Complex, long>> t;
    for (long i = 0; i < k; ++i) t.emplace_back(static_cast<long>(idx[static_cast<std::size_t>(i)]), i, Complex(1.0));
    select.setFromTriplets(t.begin(), t.end());
  }
  SparseMatrix ap = a.matrix() * select;
  SparseMatrix gram_sparse = SparseMatrix(ap.adjoint()) * ap;
  DenseMatrix gram(gram_sparse);

  DenseMatrix inv_sqrt(k, k);
  double smallest = std::numeric_limits<double>::infinity();
  if (dense_is_diagonal(gram)) {
    inv_sqrt.setZero();
    for (long i = 0; i < k; ++i) {
      const double g = gram(i, i).real();
      smallest = std::min(smallest, g);
      if (g > 0.0) inv_sqrt(i, i) = 1.0 / std::sqrt(g);
    }
  } else {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(gram);
    smallest = es.eigenvalues().minCoeff();
    Eigen::VectorXd d = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cwiseInverse();
    inv_sqrt = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
  }
  if (k > 0 && !(std::sqrt(std::max(0.0, smallest)) >= tol))
    throw Error(ErrorKind::not_invertible,
                "smallest singular value " + std::to_string(std::sqrt(std::max(0.0, smallest))) +
                    " is below " + std::to_string(tol) + "; raise the cutoff or restrict the domain");

  DenseMatrix t_cols = dense_is_diagonal(inv_sqrt)
                           ? DenseMatrix(ap * SparseMatrix(inv_sqrt.sparseView()))
                           : DenseMatrix(DenseMatrix(ap) * inv_sqrt);
  std::vector<Eigen::Triplet<Complex, long>> t;
  for (long c = 0; c < k; ++c)
    for (long r = 0; r < t_cols.rows(); ++r)
      if (t_cols(r, c) != Complex(0.0))
        t.emplace_back(r, static_cast<long>(idx[static_cast<std::size_t>(c)]), t_cols(r, c));
  SparseMatrix out(static_cast<long>(space.dimension()), static_cast<long>(space.dimension()));
  out.setFromTriplets(t.begin(), t.end());
  return {space, std::move(out)};
}

OperatorMatrix psd_sqrt(const OperatorMatrix& a) {
  const DenseMatrix hermitian_part = a.dense();
  const double skew = operator_norm(DenseMatrix(hermitian_part - hermitian_part.adjoint()));
  if (skew > 1e-10 * std::max(1.0, operator_norm(a)))
    throw_invalid("psd_sqrt needs a self-adjoint operator (skew part " + std::to_string(skew) + ")");

  auto check = [](double ev) {
    if (ev < -psd_clamp)
      throw Error(ErrorKind::not_positive, "eigenvalue " + std::to_string(ev) + " below -1e-10");
  };
  // Exact zeros computed as 1 - (sum of terms) come out as +-1e-16, whose
  // square roots would be 1e-8.
  const double snap = psd_snap * std::max(1.0, operator_norm(a));
  auto root_of = [&](double v) { return v <= snap ? 0.0 : std::sqrt(v); };
  if (a.is_diagonal()) {
    std::vector<Complex> root(a.dimension());
    for (std::size_t i = 0; i < root.size(); ++i) {
      const double v = a.entry(i, i).real();
      check(v);
      root[i] = root_of(v);
    }
    return OperatorMatrix::diagonal(a.space(), root);
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(hermitian_part);
  check(es.eigenvalues().minCoeff());
  Eigen::VectorXd d = es.eigenvalues().unaryExpr(root_of);
  DenseMatrix root = es.eigenvectors() * d.asDiagonal() * es.eigenvectors().adjoint();
  return {a.space(), root};
}

}  // namespace ncball::fock
