#include "realroots.hpp"

#include <stdexcept>

namespace knotloc::detail {

int sign_at(const ZPoly& f, const Rational& x) {
  if (f.empty()) return 0;
  // sign of sum c_i u^i v^(d-i), x = u/v with v > 0
  const Integer& u = x.get_num();
  const Integer& v = x.get_den();
  // homogeneous Horner: acc_i = acc_{i+1} * u + c_i * v^(d-i)
  Integer acc = 0;
  const std::size_t d = f.size() - 1;
  std::vector<Integer> vpow(d + 1);
  vpow[0] = 1;
  for (std::size_t i = 1; i <= d; ++i) vpow[i] = vpow[i - 1] * v;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * u + f[i] * vpow[d - i];
  return sgn(acc);
}

SturmChain::SturmChain(const ZPoly& f0) {
  ZPoly f = f0;
  trim(f);
  if (f.empty()) return;
  chain_.push_back(f);
  ZPoly g = derivative(f);
  if (g.empty()) return;
  chain_.push_back(g);
  for (;;) {
    const ZPoly& a = chain_[chain_.size() - 2];
    const ZPoly& b = chain_.back();
    if (degree(b) == 0) break;
    // prem(a,b) = lc(b)^(da-db+1) * rem(a,b); keep the sign of -rem.
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty()) break;
    const int delta = degree(a) - degree(b) + 1;
    const bool flip = sgn(lead(b)) < 0 && (delta % 2 == 1);
    Integer c = content(r);
    ZPoly next(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      mpz_divexact(next[i].get_mpz_t(), r[i].get_mpz_t(), c.get_mpz_t());
      if (!flip) next[i] = -next[i];
    }
    chain_.push_back(next);
  }
}

int SturmChain::variations(const Rational& x) const {
  int count = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::count(const Rational& a, const Rational& b) const {
  if (chain_.empty()) return 0;
  return variations(a) - variations(b);
}

namespace {

void isolate(const ZPoly& f, const SturmChain& sc, const Rational& a, const Rational& b, int n,
             std::vector<Interval>& out) {
  // n = number of roots in (a, b]; sign_at(f, b) != 0 is maintained by the caller.
  if (n == 0) return;
  if (n == 1) {
    out.push_back({a, b});
    return;
  }
  Rational m = (a + b) / 2;
  if (sign_at(f, m) == 0) {
    // nudge to a nearby non-root point
    Rational step = (b - a) / 7;
    m = a + 3 * step;
    while (sign_at(f, m) == 0) {
      step /= 3;
      m = a + 3 * step;
    }
  }
  const int left = sc.count(a, m);
  isolate(f, sc, a, m, left, out);
  isolate(f, sc, m, b, n - left, out);
}

}  // namespace

std::vector<Interval> isolate_roots(const ZPoly& f, const Rational& a, const Rational& b) {
  std::vector<Interval> out;
  if (degree(f) < 1) return out;
  SturmChain sc(f);
  // Roots sitting exactly at the endpoints are excluded.
  Rational hi = b;
  const int n = sc.count(a, b) - (sign_at(f, b) == 0 ? 1 : 0);
  if (sign_at(f, b) == 0) {
    // shrink the upper endpoint below the root at b but above every other root
    Rational step = (b - a) / 2;
    for (;;) {
      Rational c = b - step;
      if (sign_at(f, c) != 0 && sc.count(c, b) == 1) {
        hi = c;
        break;
      }
      step /= 2;
    }
  }
  isolate(f, sc, a, hi, n, out);
  for (auto& iv : out) {
    if (sign_at(f, iv.hi) == 0) iv.lo = iv.hi;
  }
  return out;
}

void refine(const ZPoly& f, Interval& iv, const Rational& w) {
  if (iv.lo == iv.hi) return;
  int shi = sign_at(f, iv.hi);
  while (iv.hi - iv.lo > w) {
    Rational m = (iv.lo + iv.hi) / 2;
    int s = sign_at(f, m);
    if (s == 0) {
      iv.lo = iv.hi = m;
      return;
    }
    if (s == shi)
      iv.hi = m;
    else
      iv.lo = m;
  }
}

bool is_palindromic(const ZPoly& f) {
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != f[f.size() - 1 - i]) return false;
  return !f.empty();
}

ZPoly palindromic_to_x(const ZPoly& f) {
  if (degree(f) % 2 != 0 || !is_palindromic(f)) throw std::logic_error("palindromic_to_x: not palindromic of even degree");
  const int m = degree(f) / 2;
  // t^j + t^-j = T_j(x) with T_0 = 2, T_1 = x, T_{j+1} = x T_j - T_{j-1}
  std::vector<ZPoly> T(static_cast<std::size_t>(m) + 1);
  T[0] = {Integer(2)};
  if (m >= 1) T[1] = {Integer(0), Integer(1)};
  for (int j = 1; j < m; ++j) T[j + 1] = sub(mul({Integer(0), Integer(1)}, T[j]), T[j - 1]);
  ZPoly P{f[static_cast<std::size_t>(m)]};
  for (int j = 1; j <= m; ++j) P = add(P, scale(T[j], f[static_cast<std::size_t>(m + j)]));
  trim(P);
  return P;
}

bool roots_on_unit_circle(const ZPoly& f) {
  if (degree(f) < 1) return true;
  ZPoly g = f;
  // strip roots at t = +-1, which are on the circle
  for (const ZPoly& lin : {ZPoly{Integer(-1), Integer(1)}, ZPoly{Integer(1), Integer(1)}}) {
    ZPoly q;
    while (degree(g) >= 1 && divide_exact(g, lin, q)) g = q;
  }
  if (degree(g) < 1) return true;
  ZPoly pg = primitive_part(g);
  if (degree(pg) % 2 != 0 || !is_palindromic(pg)) return false;
  ZPoly P = palindromic_to_x(pg);
  SturmChain sc(P);
  // roots strictly inside (-2, 2): +-2 correspond to t = +-1, already removed
  return sc.count(Rational(-2), Rational(2)) == degree(P);
}

}  // namespace knotloc::detail
