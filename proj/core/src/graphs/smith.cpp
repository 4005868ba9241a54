#include "ncball/graphs/smith.hpp"

#include <utility>

namespace ncball::graphs {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, mpz_class(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged integer matrix");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix sizes do not chain");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + (*this)(r, c).get_str();
    out += "]";
  }
  return out + "]";
}

std::vector<mpz_class> SmithForm::diagonal() const {
  std::vector<mpz_class> out;
  for (std::size_t i = 0; i < d.rows() && i < d.cols(); ++i)
    if (d(i, i) != 0) out.push_back(d(i, i));
  return out;
}

namespace {

struct Reducer {
  IntMatrix a, u, v;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t c = 0; c < u.cols(); ++c) std::swap(u(i, c), u(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < v.rows(); ++r) std::swap(v(r, i), v(r, j));
  }
  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& k) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += k * a(j, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) += k * u(j, c);
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& k) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += k * a(r, j);
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, i) += k * v(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    for (std::size_t c = 0; c < u.cols(); ++c) u(i, c) = -u(i, c);
  }

  // Smallest |entry| in the trailing block from t, lowest row then column.
  bool find_pivot(std::size_t t, std::size_t& pr, std::size_t& pc) const {
    bool found = false;
    mpz_class best;
    for (std::size_t r = t; r < a.rows(); ++r)
      for (std::size_t c = t; c < a.cols(); ++c) {
        if (a(r, c) == 0) continue;
        mpz_class m = abs(a(r, c));
        if (!found || m < best) {
          found = true;
          best = m;
          pr = r;
          pc = c;
        }
      }
    return found;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer red{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& a = red.a;
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!red.find_pivot(t, pr, pc)) break;
    for (;;) {
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < a.rows(); ++r) {
        if (a(r, t) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        red.add_row(r, t, -q);
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < a.cols(); ++c) {
        if (a(t, c) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        red.add_col(c, t, -q);
        if (a(t, c) != 0) clean = false;
      }
      if (clean) {
        // Divisibility: fold a non-divisible row into the pivot row.
        bool divides = true;
        for (std::size_t r = t + 1; r < a.rows() && divides; ++r)
          for (std::size_t c = t + 1; c < a.cols(); ++c)
            if (a(r, c) % a(t, t) != 0) {
              red.add_row(t, r, 1);
              divides = false;
              break;
            }
        if (divides) break;
      }
      red.find_pivot(t, pr, pc);
    }
    if (a(t, t) < 0) red.negate_row(t);
  }
  return {std::move(red.a), std::move(red.u), std::move(red.v)};
}

AbelianGroup cokernel(const SmithForm& snf) {
  AbelianGroup g;
  const auto diag = snf.diagonal();
  g.rank = static_cast<long>(snf.d.rows()) - static_cast<long>(diag.size());
  for (const auto& d : diag)
    if (d > 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup kernel(const SmithForm& snf) {
  AbelianGroup g;
  g.rank = static_cast<long>(snf.d.cols()) - static_cast<long>(snf.diagonal().size());
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (rank > 0) out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + t.get_str());
  return out;
}

}  // namespace ncball::graphs
