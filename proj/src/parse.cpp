#include <cctype>
#include <string>

#include "knotloc/error.hpp"
#include "knotloc/laurent.hpp"

namespace knotloc {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::map<char, Rational>& bindings) : s_(text), bindings_(bindings) {}

  LaurentPoly run() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("empty expression", pos_);
    LaurentPoly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  LaurentPoly expr() {
    LaurentPoly acc = signed_term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += signed_term();
      } else if (c == '-') {
        ++pos_;
        acc -= signed_term();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly signed_term() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -signed_term();
    }
    if (c == '+') {
      ++pos_;
      return signed_term();
    }
    return term();
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        if (peek() == '-') {
          ++pos_;
          acc *= -power();
        } else {
          acc *= power();
        }
      } else if (c != '\0' && starts_factor(c) && !std::isdigit(static_cast<unsigned char>(c))) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  LaurentPoly power() {
    const std::size_t start = pos_;
    LaurentPoly base = primary();
    if (peek() != '^') return base;
    ++pos_;
    long e = exponent();
    if (e >= 0) return knotloc::power(base, static_cast<unsigned>(e));
    if (!base.is_unit()) throw ParseError("negative exponent applied to a non-monomial", start);
    auto [k, c] = *base.terms().begin();
    Rational inv = 1 / c;
    Rational coeff = 1;
    for (long i = 0; i < -e; ++i) coeff *= inv;
    return LaurentPoly::monomial(coeff, k * e);
  }

  long exponent() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      long e = exponent();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return e;
    }
    bool neg = false;
    if (c == '-' || c == '+') {
      neg = c == '-';
      ++pos_;
      skip();
    }
    const std::size_t start = pos_;
    Integer v = digits();
    if (!v.fits_slong_p() || abs(v) > 100000) throw ParseError("exponent out of range", start);
    long e = v.get_si();
    return neg ? -e : e;
  }

  Integer digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Integer(std::string(s_.substr(start, pos_ - start)), 10);
  }

  LaurentPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      if (peek() == '/') {
        ++pos_;
        const std::size_t at = pos_;
        Integer den = digits();
        if (den == 0) throw ParseError("zero denominator", at);
        return LaurentPoly(make_rational(num, den));
      }
      return LaurentPoly(Rational(num));
    }
    if (c == 't') {
      ++pos_;
      return LaurentPoly::variable();
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto it = bindings_.find(c);
      if (it == bindings_.end()) throw ParseError(std::string("unbound symbol '") + c + "'", pos_);
      ++pos_;
      return LaurentPoly(it->second);
    }
    if (c == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const std::map<char, Rational>& bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, const std::map<char, Rational>& bindings) {
  return Parser(text, bindings).run();
}

}  // namespace knotloc
