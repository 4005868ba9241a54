#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>

namespace ncball {

/// Finite Laurent polynomial in one symbol with rational coefficients.
///
/// The symbolic layer uses the symbol s = q^{1/2}, so q is the monomial s^2.
/// The same ring doubles as Z[lambda, lambda^{-1}] for formal unimodular
/// phases in the graph picture, where conjugation is invert_symbol().
/// Zero coefficients are never stored, so equality is structural.
class Laurent {
 public:
  using Terms = std::map<int, mpq_class>;

  Laurent() = default;
  Laurent(long value);  // NOLINT(google-explicit-constructor)
  explicit Laurent(mpq_class value);

  static Laurent monomial(int exponent, mpq_class coefficient = 1);
  static Laurent symbol() { return monomial(1); }
  /// q = s^2
  static Laurent q() { return monomial(2); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  std::optional<mpq_class> constant_value() const;
  mpq_class coefficient(int exponent) const;

  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator-(const Laurent& a);
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  Laurent pow(int exponent) const;
  /// symbol -> symbol^{-1}
  Laurent invert_symbol() const;
  double evaluate(double symbol) const;

  /// "1 - q", "s^-1", "1/2 q^2".
  std::string to_string() const;
  /// Like to_string() but parenthesised when more than one term is present.
  std::string to_coefficient_string() const;

 private:
  void add_term(int exponent, const mpq_class& coefficient);
  static mpq_class pow_rational(const mpq_class& base, int exponent);

  Terms terms_;
};

}  // namespace ncball
