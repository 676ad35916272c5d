#include "linalg.hpp"

#include <utility>

namespace knotloc::detail {

Integer determinant(ZMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[r], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Rational determinant(QMatrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && m[r][k] == 0) ++r;
    if (r == n) return 0;
    if (r != k) {
      std::swap(m[r], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

Inertia inertia(QMatrix a) {
  const std::size_t n = a.size();
  Inertia out;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    for (auto& row : a) std::swap(row[i], row[j]);
  };
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][piv] == 0) ++piv;
    if (piv == n) {
      // no nonzero diagonal entry left: fold an off-diagonal one onto the diagonal
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) a[pi][c] += a[pj][c];
      for (std::size_t r = 0; r < n; ++r) a[r][pi] += a[r][pj];
      piv = pi;
    }
    swap_index(k, piv);
    const Rational d = a[k][k];
    if (d > 0)
      ++out.positive;
    else
      ++out.negative;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      Rational f = a[r][k] / d;
      for (std::size_t c = k + 1; c < n; ++c) a[r][c] -= f * a[k][c];
      a[r][k] = 0;
    }
    for (std::size_t c = k + 1; c < n; ++c) a[k][c] = 0;
  }
  out.zero = static_cast<int>(n - k);
  return out;
}

bool solve(QMatrix a, std::vector<Rational> b, std::vector<Rational>& x) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t r = k;
    while (r < n && a[r][k] == 0) ++r;
    if (r == n) return false;
    std::swap(a[r], a[k]);
    std::swap(b[r], b[k]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

LaurentPoly pencil_det(const ZMatrix& X, const ZMatrix& Y) {
  const std::size_t n = X.size();
  if (n == 0) return LaurentPoly(1);
  std::vector<Rational> xs, ys;
  for (std::size_t s = 0; s <= n; ++s) {
    const Integer t = static_cast<long>(s);
    ZMatrix m(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = X[i][j] - t * Y[i][j];
    xs.emplace_back(t);
    ys.emplace_back(determinant(m));
  }
  // Newton divided differences, then expand into the monomial basis
  std::vector<Rational> c = ys;
  for (std::size_t j = 1; j < c.size(); ++j)
    for (std::size_t i = c.size() - 1; i >= j; --i) c[i] = (c[i] - c[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Rational> poly{c.back()};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= poly[k] * xs[i];
    }
    next[0] += c[i];
    poly = std::move(next);
  }
  return LaurentPoly::from_coefficients(poly);
}

}  // namespace knotloc::detail
