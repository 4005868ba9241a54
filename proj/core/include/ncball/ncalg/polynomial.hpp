#pragma once

#include <map>
#include <string>

#include "ncball/laurent.hpp"
#include "ncball/ncalg/word.hpp"

namespace ncball::ncalg {

/// Coefficients of the free *-algebra: Laurent polynomials in s = q^{1/2}.
/// The involution fixes every scalar (s is a real parameter in (0,1)).
using Scalar = Laurent;

/// Finite linear combination of words. Zero coefficients are never stored;
/// the empty word is the unit.
class Polynomial {
 public:
  using Terms = std::map<Word, Scalar, WordOrder>;

  Polynomial() = default;
  Polynomial(Scalar constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Scalar(constant)) {}  // NOLINT
  explicit Polynomial(Generator g);
  Polynomial(Word word, Scalar coefficient);

  static Polynomial generator(char letter, int index, bool starred = false) {
    return Polynomial(Generator{letter, index, starred});
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  std::size_t degree() const;
  Scalar coefficient(const Word& word) const;

  void add_term(const Word& word, const Scalar& coefficient);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Scalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& c, Polynomial p) { return p *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  Polynomial pow(int exponent) const;
  Polynomial adjoint() const;

  /// Canonical serialization: "q z2 z2' + (1 - q)", "0" for zero.
  std::string to_string() const;

 private:
  Terms terms_;
};

inline Polynomial adjoint(const Polynomial& p) { return p.adjoint(); }

}  // namespace ncball::ncalg
