#pragma once

// Dense univariate polynomials over Z (ascending coefficients). Internal to
// the library; LaurentPoly converts to and from this representation.

#include <utility>
#include <vector>

#include "knotloc/laurent.hpp"
#include "knotloc/rational.hpp"

namespace knotloc::detail {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
inline int degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }
inline const Integer& lead(const ZPoly& f) { return f.back(); }

Integer content(const ZPoly& f);
/// f / content(f) with positive leading coefficient; zero stays zero.
ZPoly primitive_part(const ZPoly& f);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& f);
ZPoly reversed(const ZPoly& f);  // t^deg f(1/t)
ZPoly inflate(const ZPoly& f, unsigned n);  // f(t^n)
Integer evaluate(const ZPoly& f, const Integer& x);

/// Exact division over Z: returns true and sets q when b divides a with integral quotient.
bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q);
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

/// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
ZPoly gcd(const ZPoly& a, const ZPoly& b);

/// Primitive part of a/b over Q, for b dividing a in Q[t].
ZPoly primitive_quotient(const ZPoly& a, const ZPoly& b);

/// Square-free decomposition of a primitive polynomial: pairs (g_i, i) with
/// f = prod g_i^i, every g_i primitive, square-free, pairwise coprime.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);

/// Sylvester-matrix determinant by fraction-free elimination.
Integer resultant(const ZPoly& a, const ZPoly& b);

/// Integer-cleared representative of a Laurent polynomial: p = (1/scale) t^shift f(t).
ZPoly clear_laurent(const LaurentPoly& p, long* shift = nullptr, Integer* scale = nullptr);
LaurentPoly to_laurent(const ZPoly& f, long shift = 0);

}  // namespace knotloc::detail
