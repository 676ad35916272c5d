#pragma once

// Multiprecision reals for the few places that leave exact arithmetic:
// arc lengths, rho0 sums and integer-relation search.

#include <mpfr.h>

#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "knotloc/rational.hpp"

namespace knotloc::detail {

using Real = boost::multiprecision::mpfr_float;

/// Sets the working precision (decimal digits) of newly created Reals on this
/// thread and restores the previous value on exit.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Rational to_rational(const Real& r) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), r.backend().data());
  return q;
}

inline Real pi_real() { return boost::math::constants::pi<Real>(); }

/// Fixed-point decimal with `digits` digits after the point; "-0.000" is printed as "0.000".
std::string fixed_string(const Real& x, unsigned digits);

}  // namespace knotloc::detail
