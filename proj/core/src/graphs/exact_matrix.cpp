#include "ncball/graphs/exact_matrix.hpp"

#include "ncball/error.hpp"

namespace ncball::graphs {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i][i] = Laurent(1L);
  return m;
}

ExactMatrix ExactMatrix::selector(std::size_t n, const std::vector<std::size_t>& indices) {
  ExactMatrix m(n, n);
  for (std::size_t i : indices) m.set(i, i, Laurent(1L));
  return m;
}

Laurent ExactMatrix::at(std::size_t r, std::size_t c) const {
  const Row& row = rows_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Laurent() : it->second;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const Laurent& value) {
  if (r >= rows_.size() || c >= cols_) throw_invalid("matrix index out of range");
  if (value.is_zero())
    rows_[r].erase(c);
  else
    rows_[r][c] = value;
}

void ExactMatrix::add(std::size_t r, std::size_t c, const Laurent& value) {
  if (r >= rows_.size() || c >= cols_) throw_invalid("matrix index out of range");
  Laurent& slot = rows_[r][c];
  slot += value;
  if (slot.is_zero()) rows_[r].erase(c);
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix out(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : rows_[r]) out.rows_[c][r] = v.invert_symbol();
  return out;
}

Laurent ExactMatrix::trace() const {
  Laurent t;
  for (std::size_t i = 0; i < rows_.size() && i < cols_; ++i) t += at(i, i);
  return t;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& other) {
  if (rows() != other.rows() || cols_ != other.cols_) throw_invalid("matrix sizes differ");
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : other.rows_[r]) add(r, c, v);
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& other) {
  if (rows() != other.rows() || cols_ != other.cols_) throw_invalid("matrix sizes differ");
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (const auto& [c, v] : other.rows_[r]) add(r, c, -v);
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows()) throw_invalid("matrix sizes do not chain");
  ExactMatrix out(a.rows(), b.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, av] : a.rows_[r])
      for (const auto& [c, bv] : b.rows_[k]) out.add(r, c, av * bv);
  return out;
}

ExactMatrix operator*(const Laurent& c, const ExactMatrix& a) {
  ExactMatrix out(a.rows(), a.cols_);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (const auto& [k, v] : a.rows_[r]) out.set(r, k, c * v);
  return out;
}

}  // namespace ncball::graphs
