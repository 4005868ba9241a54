#include "ncball/laurent.hpp"

#include <cmath>

#include <fmt/format.h>

#include "ncball/error.hpp"

namespace ncball {

Laurent::Laurent(long value) {
  if (value != 0) terms_.emplace(0, mpq_class(value));
}

Laurent::Laurent(mpq_class value) {
  if (value != 0) terms_.emplace(0, std::move(value));
}

Laurent Laurent::monomial(int exponent, mpq_class coefficient) {
  Laurent out;
  if (coefficient != 0) out.terms_.emplace(exponent, std::move(coefficient));
  return out;
}

mpq_class Laurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<mpq_class> Laurent::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return coefficient(0);
}

void Laurent::add_term(int exponent, const mpq_class& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& other) {
  *this = *this * other;
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

Laurent operator-(const Laurent& a) {
  Laurent out;
  for (const auto& [e, c] : a.terms_) out.terms_.emplace(e, -c);
  return out;
}

Laurent Laurent::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1) throw_invalid("negative power of a non-monomial Laurent polynomial");
    const auto& [e, c] = *terms_.begin();
    return monomial(e * exponent, mpq_class(1) / pow_rational(c, -exponent));
  }
  Laurent result(1L);
  Laurent base = *this;
  int n = exponent;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

mpq_class Laurent::pow_rational(const mpq_class& base, int exponent) {
  mpq_class out(1);
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

Laurent Laurent::invert_symbol() const {
  Laurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

double Laurent::evaluate(double symbol) const {
  double value = 0.0;
  for (const auto& [e, c] : terms_) value += c.get_d() * std::pow(symbol, e);
  return value;
}

namespace {

std::string symbol_power(int exponent) {
  if (exponent % 2 == 0) {
    int qe = exponent / 2;
    return qe == 1 ? std::string("q") : fmt::format("q^{}", qe);
  }
  return exponent == 1 ? std::string("s") : fmt::format("s^{}", exponent);
}

std::string rational_string(const mpq_class& value) { return value.get_str(); }

}  // namespace

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class magnitude = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += rational_string(magnitude);
    } else if (magnitude == 1) {
      out += symbol_power(e);
    } else {
      out += rational_string(magnitude) + " " + symbol_power(e);
    }
  }
  return out;
}

std::string Laurent::to_coefficient_string() const {
  if (terms_.size() > 1) return "(" + to_string() + ")";
  return to_string();
}

}  // namespace ncball
