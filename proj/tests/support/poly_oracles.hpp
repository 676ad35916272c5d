#pragma once

// Dense polynomial oracles for the acceptance checks. Polynomials are
// ascending coefficient vectors; none of this calls into the library's
// decision procedures.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace poly_oracle {

using ZPoly = std::vector<mpz_class>;
using QPoly = std::vector<mpq_class>;

template <class P>
void trim(P& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Drops leading zero coefficients at the bottom (divides by t^j).
template <class P>
P strip_t(P p) {
  trim(p);
  auto it = std::find_if(p.begin(), p.end(), [](const auto& c) { return c != 0; });
  p.erase(p.begin(), it);
  return p;
}

/// p(t^n) as an ordinary polynomial, up to a power of t; n may be negative.
template <class P>
P substitute(const P& p0, long n) {
  P p = strip_t(p0);
  if (p.empty()) return p;
  if (n < 0) {
    std::reverse(p.begin(), p.end());
    n = -n;
  }
  P out((p.size() - 1) * static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) out[i * static_cast<std::size_t>(n)] = p[i];
  return out;
}

inline QPoly to_q(const ZPoly& p) { return QPoly(p.begin(), p.end()); }

/// Monic gcd over Q by the Euclidean algorithm.
inline QPoly gcd_q(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = a;
    const mpq_class lead = b.back();
    while (r.size() >= b.size()) {
      const mpq_class c = r.back() / lead;
      const std::size_t shift = r.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
      r.pop_back();
      trim(r);
    }
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

/// gcd(p, q) in Q[t, t^-1] is a unit.
inline bool coprime_q(const ZPoly& p, const ZPoly& q) { return gcd_q(to_q(strip_t(p)), to_q(strip_t(q))).size() <= 1; }

inline bool divides_z(const ZPoly& d0, const ZPoly& p0) {
  ZPoly d = strip_t(d0), p = strip_t(p0);
  if (d.empty()) return false;
  QPoly r = to_q(p);
  while (r.size() >= d.size()) {
    const mpq_class c = r.back() / mpq_class(d.back());
    const std::size_t shift = r.size() - d.size();
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= c * d[i];
    r.pop_back();
    trim(r);
  }
  return r.empty();
}

/// Exact quotient of monic-integral division; requires d | p.
inline ZPoly divide_z(ZPoly p, const ZPoly& d) {
  trim(p);
  ZPoly q(p.size() - d.size() + 1, 0);
  while (p.size() >= d.size()) {
    const mpz_class c = p.back() / d.back();
    const std::size_t shift = p.size() - d.size();
    q[shift] = c;
    for (std::size_t i = 0; i < d.size(); ++i) p[shift + i] -= c * d[i];
    trim(p);
    if (p.size() < d.size()) break;
  }
  return q;
}

/// Phi_n by dividing t^n - 1 by Phi_d for every proper divisor d.
inline ZPoly cyclotomic(unsigned n) {
  static std::map<unsigned, ZPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  ZPoly p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = divide_z(p, cyclotomic(d));
  return cache[n] = p;
}

// ---- arithmetic modulo a 31-bit prime

inline std::int64_t mod(const mpz_class& x, std::int64_t m) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(m));
  return r.get_si();
}

inline std::int64_t inverse(std::int64_t a, std::int64_t m) {
  std::int64_t r = 1, e = m - 2;
  a %= m;
  while (e) {
    if (e & 1) r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

/// Degree of gcd(a, b) over F_m; both arguments must have nonzero leading and constant terms mod m.
inline long gcd_degree_mod(std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::int64_t m) {
  auto tr = [](std::vector<std::int64_t>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  tr(a);
  tr(b);
  while (!b.empty()) {
    const std::int64_t inv = inverse(b.back(), m);
    while (a.size() >= b.size()) {
      const std::int64_t c = a.back() * inv % m;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - c * b[i]) % m + m) % m;
      a.pop_back();
      tr(a);
    }
    std::swap(a, b);
  }
  return static_cast<long>(a.size()) - 1;
}

/// Decides res(p, q) != 0 for integer polynomials with nonzero constant terms:
/// a prime keeping both degrees with trivial gcd mod it certifies nonzero;
/// when four primes disagree the exact gcd over Q decides.
inline bool resultant_nonzero(const ZPoly& p0, const ZPoly& q0) {
  const ZPoly p = strip_t(p0), q = strip_t(q0);
  for (std::int64_t m : {2147483647LL, 2147483629LL, 2147483587LL, 2147483579LL}) {
    if (mod(p.back(), m) == 0 || mod(q.back(), m) == 0) continue;
    std::vector<std::int64_t> a, b;
    for (const auto& c : p) a.push_back(mod(c, m));
    for (const auto& c : q) b.push_back(mod(c, m));
    if (gcd_degree_mod(a, b, m) == 0) return true;
  }
  return coprime_q(p, q);
}

/// Determinant of an integer matrix by fraction-free elimination.
inline mpz_class det_bareiss(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace poly_oracle
