#pragma once

#include <utility>
#include <vector>

#include "knotloc/laurent.hpp"

namespace knotloc {

struct Factorization {
  Rational unit;      // input = unit * t^shift * prod factor^multiplicity
  long shift = 0;
  std::vector<std::pair<LaurentPoly, int>> factors;

  LaurentPoly expand() const;
};

/// Complete factorization over Q. Factors are canonical (see normalize) and
/// sorted by degree, then by coefficient sequence.
Factorization factor(const LaurentPoly& p);

bool is_irreducible(const LaurentPoly& p);
bool is_squarefree(const LaurentPoly& p);

/// The n-th cyclotomic polynomial.
LaurentPoly cyclotomic(unsigned n);
/// n when normalize(p) equals the n-th cyclotomic polynomial, otherwise 0.
unsigned cyclotomic_index(const LaurentPoly& p);
unsigned long euler_phi(unsigned long n);

}  // namespace knotloc
