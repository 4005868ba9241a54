#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ncball/laurent.hpp"

namespace ncball::graphs {

/// Sparse square-or-rectangular matrix over Z[lambda, lambda^{-1}] (with
/// rational coefficients). lambda stands for a unimodular phase, so the
/// adjoint transposes and maps lambda to lambda^{-1}.
class ExactMatrix {
 public:
  using Row = std::map<std::size_t, Laurent>;

  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);

  static ExactMatrix identity(std::size_t n);
  /// Diagonal 0/1 matrix selecting `indices`.
  static ExactMatrix selector(std::size_t n, const std::vector<std::size_t>& indices);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }
  const Row& row(std::size_t r) const { return rows_.at(r); }
  Laurent at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Laurent& value);
  void add(std::size_t r, std::size_t c, const Laurent& value);
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  ExactMatrix adjoint() const;
  Laurent trace() const;

  ExactMatrix& operator+=(const ExactMatrix& other);
  ExactMatrix& operator-=(const ExactMatrix& other);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Laurent& c, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<Row> rows_;
  std::size_t cols_ = 0;
};

}  // namespace ncball::graphs
