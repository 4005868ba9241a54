#include "ncball/ncalg/polynomial.hpp"

#include <algorithm>

#include "ncball/error.hpp"

namespace ncball::ncalg {

Polynomial::Polynomial(Scalar constant) {
  if (!constant.is_zero()) terms_.emplace(Word{}, std::move(constant));
}

Polynomial::Polynomial(Generator g) { terms_.emplace(Word{g}, Scalar(1L)); }

Polynomial::Polynomial(Word word, Scalar coefficient) {
  if (!coefficient.is_zero()) terms_.emplace(std::move(word), std::move(coefficient));
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

Scalar Polynomial::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Scalar() : it->second;
}

void Polynomial::add_term(const Word& word, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(word, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out;
  for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, -c);
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) out.add_term(concat(wa, wb), ca * cb);
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() == 1 && terms_.begin()->first.empty())
      return Polynomial(terms_.begin()->second.pow(exponent));
    throw_invalid("negative power of a non-scalar polynomial");
  }
  Polynomial out(1L);
  for (int i = 0; i < exponent; ++i) out = out * *this;
  return out;
}

Polynomial Polynomial::adjoint() const {
  Polynomial out;
  for (const auto& [w, c] : terms_) out.add_term(ncalg::adjoint(w), c);
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [word, c] : terms_) {
    const std::string body = ncalg::to_string(word);
    std::string coeff;
    bool negative = false;
    if (c.terms().size() == 1) {
      const auto& [e, value] = *c.terms().begin();
      negative = value < 0;
      Scalar magnitude = Scalar::monomial(e, abs(value));
      if (!(magnitude == Scalar(1L)) || body.empty()) coeff = magnitude.to_string();
    } else {
      coeff = c.to_coefficient_string();
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += coeff;
    if (!coeff.empty() && !body.empty()) out += " ";
    out += body;
  }
  return out;
}

}  // namespace ncball::ncalg
