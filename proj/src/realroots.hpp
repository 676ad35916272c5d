#pragma once

// Exact real-root isolation over Q with Sturm sequences, and the
// x = t + 1/t transform for self-reciprocal polynomials.

#include <utility>
#include <vector>

#include "zpoly.hpp"

namespace knotloc::detail {

struct Interval {
  Rational lo, hi;  // open interval (lo, hi) containing exactly one root, or lo == hi for an exact root
};

int sign_at(const ZPoly& f, const Rational& x);

class SturmChain {
 public:
  explicit SturmChain(const ZPoly& f);  // f square-free
  // Number of distinct real roots in (a, b], a < b.
  int count(const Rational& a, const Rational& b) const;

 private:
  int variations(const Rational& x) const;
  std::vector<ZPoly> chain_;
};

/// Isolating intervals for the roots of square-free f inside (a, b), sorted increasingly.
std::vector<Interval> isolate_roots(const ZPoly& f, const Rational& a, const Rational& b);

/// Shrinks an isolating interval to width <= w (exact roots stay degenerate).
void refine(const ZPoly& f, Interval& iv, const Rational& w);

/// For f(t) with f(t) = t^m P(t + 1/t) (palindromic, degree 2m), returns P.
ZPoly palindromic_to_x(const ZPoly& f);

bool is_palindromic(const ZPoly& f);

/// True when every complex root of square-free f lies on the unit circle.
bool roots_on_unit_circle(const ZPoly& f);

}  // namespace knotloc::detail
