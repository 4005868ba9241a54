#include "ncball/ncalg/parser.hpp"

#include <cctype>
#include <string>

#include "ncball/error.hpp"

namespace ncball::ncalg {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Presentation& pres) : text_(text), pres_(pres) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  std::string digits() {
    skip_space();
    if (!at_digit()) fail("expected an integer");
    std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial result;
    bool negate = accept('-');
    result = term();
    if (negate) result = -result;
    for (;;) {
      if (accept('+')) {
        result += term();
      } else if (accept('-')) {
        result -= term();
      } else {
        return result;
      }
    }
  }

  Polynomial term() {
    Polynomial result = factor();
    while (accept('*')) result = result * factor();
    return result;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('\'')) base = base.adjoint();
    if (accept('^')) {
      skip_space();
      std::size_t at = pos_;
      bool negative = accept('-');
      long exponent = std::stol(digits());
      if (exponent > 64) {
        pos_ = at;
        fail("exponent too large");
      }
      if (negative) {
        if (base.size() != 1 || !base.terms().begin()->first.empty() ||
            base.terms().begin()->second.terms().size() != 1) {
          pos_ = at;
          fail("negative exponent on something other than a scalar monomial");
        }
        return base.pow(-static_cast<int>(exponent));
      }
      return base.pow(static_cast<int>(exponent));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpq_class value(digits());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t at = pos_;
        mpz_class denominator(digits());
        if (denominator == 0) {
          pos_ = at;
          fail("zero denominator");
        }
        value /= denominator;
      }
      return Polynomial(Scalar(value));
    }
    if (c == 's' || c == 'q') {
      ++pos_;
      return Polynomial(c == 's' ? Scalar::symbol() : Scalar::q());
    }
    if (c == 'z' || c == 'w' || c == 'x' || c == 't' || c == 'e' || c == 'f') {
      std::size_t at = pos_;
      ++pos_;
      if (!at_digit()) fail("expected a generator index after '" + std::string(1, c) + "'");
      std::size_t start = pos_;
      while (at_digit()) ++pos_;
      std::string index_text(text_.substr(start, pos_ - start));
      if (index_text.size() > 6) fail("generator index too large");
      Generator g{c, std::stoi(index_text), false};
      if (!pres_.contains(g))
        throw Error(ErrorKind::unknown_generator,
                    g.to_string() + " (at position " + std::to_string(at) +
                        ") is not a generator of " + pres_.name());
      return Polynomial(g);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Presentation& pres_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const Presentation& pres) {
  return Parser(text, pres).parse();
}

}  // namespace ncball::ncalg
