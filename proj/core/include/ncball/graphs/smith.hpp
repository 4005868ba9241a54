#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace ncball::graphs {

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal with nonnegative
/// entries d_1 | d_2 | ... | d_r followed by zeros.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;
  /// Nonzero diagonal entries in order.
  std::vector<mpz_class> diagonal() const;
  std::size_t rank() const { return diagonal().size(); }
};

/// Pivoting picks the smallest nonzero absolute value, ties broken by the
/// lowest row and then the lowest column.
SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^rank + sum Z/t_i with t_i > 1 and
/// t_i | t_{i+1}.
struct AbelianGroup {
  long rank = 0;
  std::vector<mpz_class> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2", "Z + Z/2".
  std::string to_string() const;
  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.rank == b.rank && a.torsion == b.torsion;
  }
};

/// Cokernel and kernel of M viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const SmithForm& snf);
AbelianGroup kernel(const SmithForm& snf);

}  // namespace ncball::graphs
