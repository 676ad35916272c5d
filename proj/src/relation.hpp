#pragma once

#include <vector>

#include "knotloc/rational.hpp"

namespace knotloc::detail {

/// LLL-reduces the rows of `basis` in place (delta = 3/4, exact arithmetic).
void lll_reduce(std::vector<std::vector<Integer>>& basis);

/// Integer vectors c != 0 with max |c_i| <= max_coeff and |sum c_i x_i| <= tol * sum |c_i|,
/// read off an LLL-reduced basis of the lattice spanned by (e_i, round(scale * x_i)).
/// Each relation is primitive with its first nonzero entry positive; shortest first.
std::vector<std::vector<Integer>> small_relations(const std::vector<Rational>& x, const Integer& scale,
                                                  const Rational& tol, const Integer& max_coeff);

}  // namespace knotloc::detail
