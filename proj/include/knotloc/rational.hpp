#pragma once

#include <gmpxx.h>

#include <string>

namespace knotloc {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical (lowest terms, denominator > 0)

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace knotloc
