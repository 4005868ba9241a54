#include "ncball/fock/operator.hpp"

#include <cmath>
#include <string>

#include "ncball/error.hpp"

namespace ncball::fock {

namespace {

SparseMatrix from_triplets(std::size_t dim, const std::vector<Eigen::Triplet<Complex, long>>& t) {
  SparseMatrix m(static_cast<long>(dim), static_cast<long>(dim));
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

}  // namespace

OperatorMatrix::OperatorMatrix(TruncatedSpace space, SparseMatrix matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const auto d = static_cast<long>(space_.dimension());
  if (matrix_.rows() != d || matrix_.cols() != d)
    throw_invalid("matrix size " + std::to_string(matrix_.rows()) + "x" +
                  std::to_string(matrix_.cols()) + " does not match space dimension " +
                  std::to_string(d));
  matrix_.makeCompressed();
}

OperatorMatrix::OperatorMatrix(TruncatedSpace space, const DenseMatrix& matrix)
    : OperatorMatrix(std::move(space), SparseMatrix(matrix.sparseView(Complex(0.0), 0.0))) {}

OperatorMatrix OperatorMatrix::zero(const TruncatedSpace& space) {
  return {space, from_triplets(space.dimension(), {})};
}

OperatorMatrix OperatorMatrix::identity(const TruncatedSpace& space) {
  return diagonal(space, std::vector<Complex>(space.dimension(), Complex(1.0)));
}

OperatorMatrix OperatorMatrix::diagonal(const TruncatedSpace& space,
                                        const std::vector<Complex>& entries) {
  if (entries.size() != space.dimension()) throw_invalid("diagonal has the wrong length");
  std::vector<Eigen::Triplet<Complex, long>> t;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] != Complex(0.0))
      t.emplace_back(static_cast<long>(i), static_cast<long>(i), entries[i]);
  return {space, from_triplets(space.dimension(), t)};
}

Complex OperatorMatrix::entry(std::size_t row, std::size_t col) const {
  return matrix_.coeff(static_cast<long>(row), static_cast<long>(col));
}

bool OperatorMatrix::is_diagonal() const {
  for (long k = 0; k < matrix_.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(matrix_, k); it; ++it)
      if (it.row() != it.col() && it.value() != Complex(0.0)) return false;
  return true;
}

OperatorMatrix OperatorMatrix::adjoint() const {
  return {space_, SparseMatrix(matrix_.adjoint())};
}

void OperatorMatrix::require_same_space(const OperatorMatrix& other, const char* op) const {
  if (!(space_ == other.space_))
    throw_invalid(std::string("operator ") + op + " on different spaces: " + space_.to_string() +
                  " vs " + other.space_.to_string());
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& other) {
  require_same_space(other, "+");
  matrix_ += other.matrix_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& other) {
  require_same_space(other, "-");
  matrix_ -= other.matrix_;
  return *this;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex c) {
  matrix_ *= c;
  return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  a.require_same_space(b, "*");
  SparseMatrix product = a.matrix_ * b.matrix_;
  return {a.space_, std::move(product)};
}

OperatorMatrix OperatorMatrix::tensor(const OperatorMatrix& other) const {
  const auto db = static_cast<long>(other.dimension());
  std::vector<Eigen::Triplet<Complex, long>> t;
  t.reserve(static_cast<std::size_t>(matrix_.nonZeros() * other.matrix_.nonZeros()));
  for (long ka = 0; ka < matrix_.outerSize(); ++ka)
    for (SparseMatrix::InnerIterator ia(matrix_, ka); ia; ++ia)
      for (long kb = 0; kb < other.matrix_.outerSize(); ++kb)
        for (SparseMatrix::InnerIterator ib(other.matrix_, kb); ib; ++ib)
          t.emplace_back(ia.row() * db + ib.row(), ia.col() * db + ib.col(),
                         ia.value() * ib.value());
  TruncatedSpace space = space_.tensor(other.space_);
  return {space, from_triplets(space.dimension(), t)};
}

DenseMatrix OperatorMatrix::compress(const InteriorProjector& p) const {
  if (!(p.space() == space_)) throw_invalid("projector acts on a different space");
  const auto& idx = p.indices();
  std::vector<long> position(space_.dimension(), -1);
  for (std::size_t i = 0; i < idx.size(); ++i) position[idx[i]] = static_cast<long>(i);
  const auto k = static_cast<long>(idx.size());
  DenseMatrix out = DenseMatrix::Zero(k, k);
  for (long c = 0; c < matrix_.outerSize(); ++c) {
    const long pc = position[static_cast<std::size_t>(c)];
    if (pc < 0) continue;
    for (SparseMatrix::InnerIterator it(matrix_, c); it; ++it) {
      const long pr = position[static_cast<std::size_t>(it.row())];
      if (pr >= 0) out(pr, pc) = it.value();
    }
  }
  return out;
}

OperatorMatrix block_diagonal(const std::vector<OperatorMatrix>& blocks) {
  if (blocks.empty()) throw_invalid("block_diagonal needs at least one block");
  const TruncatedSpace& inner = blocks.front().space();
  const auto d = static_cast<long>(inner.dimension());
  std::vector<Eigen::Triplet<Complex, long>> t;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (!(blocks[b].space() == inner)) throw_invalid("block_diagonal blocks act on different spaces");
    const auto& m = blocks[b].matrix();
    const long off = static_cast<long>(b) * d;
    for (long k = 0; k < m.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(m, k); it; ++it)
        t.emplace_back(off + it.row(), off + it.col(), it.value());
  }
  TruncatedSpace space = TruncatedSpace::blocks(static_cast<int>(blocks.size())).tensor(inner);
  return {space, from_triplets(space.dimension(), t)};
}

OperatorMatrix diagonal_block(const OperatorMatrix& op, int block) {
  const auto& axes = op.space().axes();
  if (axes.empty() || axes.front().truncated || block < 0 || block >= axes.front().extent)
    throw_invalid("diagonal_block needs a block axis first and a valid block number");
  TruncatedSpace inner(std::vector<Axis>(axes.begin() + 1, axes.end()));
  const auto d = static_cast<long>(inner.dimension());
  const long lo = block * d;
  SparseMatrix sub = op.matrix().block(lo, lo, d, d);
  return {inner, std::move(sub)};
}

QValue::QValue(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0)) throw_invalid("q must lie strictly between 0 and 1, got " + std::to_string(q));
}

double QValue::sqrt() const { return std::sqrt(q_); }

OperatorMatrix weighted_shift(int r, const TruncatedSpace& space, QValue q) {
  if (r < 1 || r > space.m())
    throw_invalid("shift index " + std::to_string(r) + " outside 1.." + std::to_string(space.m()));
  const auto axis = static_cast<std::size_t>(r - 1);
  if (!space.axes()[axis].truncated) throw_invalid("cannot shift along a block axis");
  const int top = space.axes()[axis].extent - 1;
  std::vector<Eigen::Triplet<Complex, long>> t;
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    auto multi = space.multi_index(i);
    const int k = multi[axis];
    if (k >= top) continue;
    int tail = 0;
    for (std::size_t a = axis + 1; a < multi.size(); ++a)
      if (space.axes()[a].truncated) tail += multi[a];
    const double w = std::sqrt((1.0 - std::pow(q.value(), 1 + k)) * std::pow(q.value(), tail));
    multi[axis] = k + 1;
    t.emplace_back(static_cast<long>(space.index(multi)), static_cast<long>(i), Complex(w));
  }
  return {space, from_triplets(space.dimension(), t)};
}

OperatorMatrix q_diagonal(const TruncatedSpace& space, QValue q, const std::vector<int>& which) {
  for (int w : which)
    if (w < 1 || w > space.m()) throw_invalid("q_diagonal index out of range");
  std::vector<Complex> entries(space.dimension());
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    const auto multi = space.multi_index(i);
    int sum = 0;
    for (int w : which) sum += multi[static_cast<std::size_t>(w - 1)];
    entries[i] = std::pow(q.value(), 0.5 * sum);
  }
  return OperatorMatrix::diagonal(space, entries);
}

OperatorMatrix q_diagonal_all(const TruncatedSpace& space, QValue q) {
  std::vector<int> which;
  for (int a = 0; a < space.m(); ++a)
    if (space.axes()[static_cast<std::size_t>(a)].truncated) which.push_back(a + 1);
  return q_diagonal(space, q, which);
}

}  // namespace ncball::fock
