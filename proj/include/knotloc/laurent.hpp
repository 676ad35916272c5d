#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "knotloc/rational.hpp"

namespace knotloc {

/// Exact element of Q[t, t^-1], stored sparsely as exponent -> nonzero coefficient.
///
/// The zero polynomial has an empty term map. Values are immutable in practice:
/// every operation returns a new polynomial.
class LaurentPoly {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& constant);
  explicit LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}

  static LaurentPoly monomial(const Rational& coefficient, long exponent);
  static LaurentPoly variable() { return monomial(Rational(1), 1); }
  static LaurentPoly from_terms(Terms terms);
  /// Builds sum_i coefficients[i] * t^(i + shift).
  static LaurentPoly from_coefficients(const std::vector<Integer>& ascending, long shift = 0);
  static LaurentPoly from_coefficients(const std::vector<Rational>& ascending, long shift = 0);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Units of Q[t,t^-1] are the nonzero monomials a*t^j.
  bool is_unit() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept;

  long low_degree() const;
  long high_degree() const;
  /// high_degree - low_degree; the degree of the canonical representative.
  long span() const { return is_zero() ? -1 : high_degree() - low_degree(); }

  Rational coefficient(long exponent) const;
  Rational leading_coefficient() const;
  Rational trailing_coefficient() const;

  Rational evaluate(const Rational& x) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& scalar);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Rational& s) { return a *= s; }
  friend LaurentPoly operator*(const Rational& s, LaurentPoly a) { return a *= s; }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  /// Descending exponents, e.g. "2*t^2 - 5*t + 2", "t^-2 + 2*t", "0".
  std::string to_string() const;

  /// Ascending coefficient vector of t^(-low) * p; empty for zero.
  std::vector<Rational> dense() const;

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

/// Parses the polynomial grammar: sums and products of rational constants, `t`,
/// integer powers (`t^-2`), parentheses, and optional `*`. Single letters other
/// than `t` are looked up in `bindings`.
LaurentPoly parse_poly(std::string_view text, const std::map<char, Rational>& bindings = {});

/// Canonical representative up to units +-(a/b) t^j: lowest exponent 0,
/// primitive integer coefficients, positive leading coefficient.
LaurentPoly normalize(const LaurentPoly& p);
bool is_normalized(const LaurentPoly& p);

/// p and q differ by a unit (the relation written p ≐ q).
bool unit_equal(const LaurentPoly& p, const LaurentPoly& q);

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q);
bool coprime(const LaurentPoly& p, const LaurentPoly& q);
bool divides(const LaurentPoly& d, const LaurentPoly& p);
/// p / d, requiring d | p in Q[t,t^-1].
LaurentPoly exact_quotient(const LaurentPoly& p, const LaurentPoly& d);

/// Resultant of the integer-cleared ordinary polynomial representatives
/// (shifted to lowest exponent 0, denominators cleared by their lcm).
Rational resultant(const LaurentPoly& p, const LaurentPoly& q);

/// normalize(p(t^-1)).
LaurentPoly reciprocal(const LaurentPoly& p);
/// p(t^n) exactly; n may be negative.
LaurentPoly substitute_power(const LaurentPoly& p, long n);
/// p(1).
Rational augmentation(const LaurentPoly& p);

/// p^e for e >= 0.
LaurentPoly power(const LaurentPoly& p, unsigned e);

}  // namespace knotloc
