#pragma once

// Small dense matrices over Z and Q.

#include <vector>

#include "knotloc/laurent.hpp"
#include "knotloc/rational.hpp"

namespace knotloc::detail {

using ZMatrix = std::vector<std::vector<Integer>>;
using QMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free (Bareiss) determinant; the empty matrix has determinant 1.
Integer determinant(ZMatrix m);
Rational determinant(QMatrix m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int signature() const { return positive - negative; }
};

/// Inertia of a symmetric rational matrix by congruence elimination.
Inertia inertia(QMatrix a);

/// Solves a x = b for square nonsingular a; returns false when singular.
bool solve(QMatrix a, std::vector<Rational> b, std::vector<Rational>& x);

/// det(X - tY) as an exact polynomial in t, by evaluation and interpolation.
LaurentPoly pencil_det(const ZMatrix& X, const ZMatrix& Y);

}  // namespace knotloc::detail
