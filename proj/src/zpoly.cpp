#include "zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotloc::detail {

void trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.empty()) return {};
  Integer c = content(f);
  if (lead(f) < 0) c = -c;
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_divexact(out[i].get_mpz_t(), f[i].get_mpz_t(), c.get_mpz_t());
  return out;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(out);
  return out;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  if (c == 0) return {};
  ZPoly out(a);
  for (auto& x : out) x *= c;
  return out;
}

ZPoly derivative(const ZPoly& f) {
  if (f.size() <= 1) return {};
  ZPoly out(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * static_cast<unsigned long>(i);
  trim(out);
  return out;
}

ZPoly reversed(const ZPoly& f) {
  ZPoly out(f.rbegin(), f.rend());
  trim(out);
  return out;
}

ZPoly inflate(const ZPoly& f, unsigned n) {
  if (f.empty()) return {};
  ZPoly out((f.size() - 1) * n + 1);
  for (std::size_t i = 0; i < f.size(); ++i) out[i * n] = f[i];
  return out;
}

Integer evaluate(const ZPoly& f, const Integer& x) {
  Integer acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  q.clear();
  if (b.empty()) return false;
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r(a);
  q.assign(a.size() - b.size() + 1, Integer(0));
  const Integer& lb = lead(b);
  for (int i = degree(r); i >= degree(b); --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
    q[i - degree(b)] = c;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[i - degree(b) + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  trim(r);
  trim(q);
  return r.empty();
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a);
  trim(r);
  const int db = degree(b);
  const Integer& lb = lead(b);
  while (degree(r) >= db && !r.empty()) {
    const Integer c = lead(r);
    const int shift = degree(r) - db;
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) mpz_submul(r[shift + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
    trim(r);
  }
  return r;
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0) {
  ZPoly a = primitive_part(a0);
  ZPoly b = primitive_part(b0);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    ZPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

ZPoly primitive_quotient(const ZPoly& a, const ZPoly& b) {
  if (a.empty()) return {};
  ZPoly pa = primitive_part(a);
  Integer l;
  mpz_pow_ui(l.get_mpz_t(), lead(b).get_mpz_t(), static_cast<unsigned long>(degree(pa) - degree(b) + 1));
  ZPoly q;
  if (!divide_exact(scale(pa, l), b, q)) throw std::logic_error("primitive_quotient: not a divisor");
  return primitive_part(q);
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f0) {
  std::vector<std::pair<ZPoly, int>> out;
  ZPoly f = primitive_part(f0);
  if (degree(f) <= 0) return out;
  ZPoly g = gcd(f, derivative(f));
  ZPoly w = primitive_quotient(f, g);
  int i = 1;
  while (degree(w) > 0) {
    ZPoly y = gcd(w, g);
    ZPoly factor = primitive_quotient(w, y);
    if (degree(factor) > 0) out.emplace_back(factor, i);
    w = y;
    g = primitive_quotient(g, y);
    ++i;
  }
  return out;
}

Integer resultant(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return 0;
  const int m = degree(a);
  const int n = degree(b);
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const int N = m + n;
  std::vector<std::vector<Integer>> s(N, std::vector<Integer>(N, Integer(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  // Bareiss fraction-free elimination
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < N - 1; ++k) {
    if (s[k][k] == 0) {
      int piv = -1;
      for (int r = k + 1; r < N; ++r)
        if (s[r][k] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < N; ++i) {
      for (int j = k + 1; j < N; ++j) {
        Integer v = s[i][j] * s[k][k] - s[i][k] * s[k][j];
        mpz_divexact(s[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  Integer det = s[N - 1][N - 1];
  return sign > 0 ? det : Integer(-det);
}

ZPoly clear_laurent(const LaurentPoly& p, long* shift, Integer* scale_out) {
  if (p.is_zero()) {
    if (shift) *shift = 0;
    if (scale_out) *scale_out = 1;
    return {};
  }
  Integer l = 1;
  for (const auto& [e, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  const long low = p.low_degree();
  ZPoly f(static_cast<std::size_t>(p.high_degree() - low + 1), Integer(0));
  for (const auto& [e, c] : p.terms()) {
    Integer v = c.get_num() * (l / c.get_den());
    f[static_cast<std::size_t>(e - low)] = v;
  }
  if (shift) *shift = low;
  if (scale_out) *scale_out = l;
  return f;
}

LaurentPoly to_laurent(const ZPoly& f, long shift) { return LaurentPoly::from_coefficients(f, shift); }

}  // namespace knotloc::detail
