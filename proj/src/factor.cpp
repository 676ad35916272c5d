#include "knotloc/factor.hpp"

#include <algorithm>
#include <functional>

#include "knotloc/error.hpp"
#include "modp.hpp"
#include "zpoly.hpp"

namespace knotloc {
namespace detail {
namespace {

// ---- arithmetic modulo an arbitrary integer m (coefficients kept in [0, m)) ----

ZPoly zmod(const ZPoly& f, const Integer& m) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) mpz_fdiv_r(out[i].get_mpz_t(), f[i].get_mpz_t(), m.get_mpz_t());
  trim(out);
  return out;
}

ZPoly symmetric(const ZPoly& f, const Integer& m) {
  ZPoly out = zmod(f, m);
  Integer half = m / 2;
  for (auto& c : out)
    if (c > half) c -= m;
  trim(out);
  return out;
}

// Division by a monic polynomial modulo m.
void divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = zmod(a, m);
  q.clear();
  if (r.size() < b.size()) return;
  const std::size_t db = b.size() - 1;
  q.assign(r.size() - db, Integer(0));
  for (std::size_t i = r.size(); i-- > db;) {
    mpz_fdiv_r(r[i].get_mpz_t(), r[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] == 0) continue;
    Integer c = r[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  r = zmod(r, m);
  q = zmod(q, m);
}

ZPoly mulmod(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(mul(a, b), m); }

ZPoly to_z(const PPoly& f) {
  ZPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<unsigned long>(f[i]);
  return out;
}

// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
// On return the same relations hold modulo m2 (m | m2 | m^2).
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& m2) {
  ZPoly e = zmod(sub(f, mul(g, h)), m2);
  ZPoly q, r;
  divmod_monic(mul(s, e), h, m2, q, r);
  ZPoly g2 = zmod(add(add(g, mul(t, e)), mul(q, g)), m2);
  ZPoly h2 = zmod(add(h, r), m2);
  ZPoly b = zmod(sub(add(mul(s, g2), mul(t, h2)), ZPoly{Integer(1)}), m2);
  ZPoly c, d;
  divmod_monic(mul(s, b), h2, m2, c, d);
  s = zmod(sub(s, d), m2);
  t = zmod(sub(sub(t, mul(t, b)), mul(c, g2)), m2);
  g = std::move(g2);
  h = std::move(h2);
}

// Lifts f = lc(f) * prod(factors) mod p to monic factors modulo P = p^k.
void lift_tree(const ZPoly& f, const std::vector<PPoly>& factors, const ModP& F, const Integer& P,
               std::vector<ZPoly>& out) {
  if (factors.size() == 1) {
    Integer inv;
    Integer lc = lead(f);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), P.get_mpz_t());
    out.push_back(zmod(scale(f, inv), P));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::vector<PPoly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<PPoly> right(factors.begin() + static_cast<long>(half), factors.end());
  PPoly g0{F.reduce(lead(f))};
  for (const auto& u : left) g0 = F.mul(g0, u);
  PPoly h0{1};
  for (const auto& u : right) h0 = F.mul(h0, u);
  PPoly s0, t0;
  F.xgcd(g0, h0, s0, t0);
  ZPoly g = to_z(g0), h = to_z(h0), s = to_z(s0), t = to_z(t0);
  Integer m = static_cast<unsigned long>(F.p);
  while (m < P) {
    Integer m2 = m * m;
    if (m2 > P) m2 = P;
    hensel_step(zmod(f, m2), g, h, s, t, m2);
    m = m2;
  }
  lift_tree(g, left, F, P, out);
  lift_tree(h, right, F, P, out);
}

std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  // Pick the prime giving the fewest modular factors among a handful of candidates.
  std::vector<PPoly> best;
  u64 best_p = 0;
  int good = 0;
  for (u64 p = 3; good < 5 && p < 5000; p += 2) {
    if (!is_prime(p)) continue;
    ModP F{p};
    if (F.reduce(lead(f)) == 0) continue;
    PPoly fp = F.from(f);
    if (pdegree(F.gcd(fp, F.derivative(fp))) != 0) continue;
    ++good;
    auto facs = berlekamp(F, F.monic(fp));
    if (best_p == 0 || facs.size() < best.size()) {
      best = std::move(facs);
      best_p = p;
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw Error("factor: no suitable prime found");
  if (best.size() == 1) return {f};

  ModP F{best_p};
  // Coefficient bound for factors of lc*f: |lc| * 2^n * ||f||_2.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  Integer bound = 2 * abs(lead(f)) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(degree(f)));
  Integer P = static_cast<unsigned long>(best_p);
  while (P <= bound) P *= static_cast<unsigned long>(best_p);

  std::sort(best.begin(), best.end());
  std::vector<ZPoly> lifted;
  lift_tree(f, best, F, P, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t size = 1;
  while (2 * size <= alive.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      ZPoly g{lead(rest)};
      for (std::size_t i : pick) g = mulmod(g, lifted[alive[i]], P);
      g = primitive_part(symmetric(g, P));
      ZPoly q;
      if (degree(g) > 0 && divide_exact(rest, g, q)) {
        result.push_back(g);
        rest = q;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < alive.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(alive[i]);
        alive = std::move(keep);
        found = true;
        break;
      }
      // next combination
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == alive.size() - size + (k - 1)) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (degree(rest) > 0) result.push_back(primitive_part(rest));
  return result;
}

ZPoly from_cyclotomic(unsigned n) {
  if (n == 1) return {Integer(-1), Integer(1)};
  const unsigned long deg = euler_phi(n);
  // Phi_n(x) = prod_{d | n} (1 - x^d)^{mu(n/d)} for n > 1, as a truncated power series.
  auto mobius = [](unsigned m) {
    int r = 1;
    for (unsigned q = 2; q * q <= m; ++q) {
      if (m % q) continue;
      m /= q;
      if (m % q == 0) return 0;
      r = -r;
    }
    if (m > 1) r = -r;
    return r;
  };
  ZPoly c(deg + 1, Integer(0));
  c[0] = 1;
  std::vector<unsigned> up, down;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    int mu = mobius(n / d);
    if (mu == 1) up.push_back(d);
    if (mu == -1) down.push_back(d);
  }
  for (unsigned d : up)
    for (std::size_t i = c.size(); i-- > d;) c[i] -= c[i - d];
  for (unsigned d : down)
    for (std::size_t i = d; i < c.size(); ++i) c[i] += c[i - d];
  return c;
}

std::vector<ZPoly> factor_squarefree(ZPoly g) {
  std::vector<ZPoly> out;
  if (degree(g) <= 1) {
    if (degree(g) == 1) out.push_back(primitive_part(g));
    return out;
  }
  // Peel off cyclotomic factors first; they split into many pieces modulo small primes.
  {
    const unsigned long d = static_cast<unsigned long>(degree(g));
    const unsigned long nmax = std::max<unsigned long>(6, 2 * d * d + 2);
    for (unsigned n = 1; n <= nmax && degree(g) > 0; ++n) {
      if (euler_phi(n) > static_cast<unsigned long>(degree(g))) continue;
      ZPoly phi = from_cyclotomic(n);
      ZPoly q;
      if (divide_exact(g, phi, q)) {
        out.push_back(phi);
        g = q;
      }
    }
  }
  g = primitive_part(g);
  if (degree(g) == 1) out.push_back(g);
  if (degree(g) >= 2) {
    auto rest = zassenhaus(g);
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

bool descending_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace
}  // namespace detail

LaurentPoly Factorization::expand() const {
  LaurentPoly acc = LaurentPoly::monomial(unit, shift);
  for (const auto& [f, m] : factors) acc *= power(f, static_cast<unsigned>(m));
  return acc;
}

Factorization factor(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("factor: zero polynomial");
  using namespace detail;
  Factorization out;
  out.shift = p.low_degree();
  ZPoly f = primitive_part(clear_laurent(p));
  std::vector<std::pair<ZPoly, int>> pieces;
  for (const auto& [g, mult] : squarefree_decomposition(f))
    for (auto& h : factor_squarefree(g)) pieces.emplace_back(primitive_part(h), mult);
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return descending_less(a.first, b.first); });
  Rational lc_product = 1;
  for (const auto& [g, mult] : pieces) {
    for (int i = 0; i < mult; ++i) lc_product *= Rational(lead(g));
    out.factors.emplace_back(to_laurent(g), mult);
  }
  out.unit = p.leading_coefficient() / lc_product;
  return out;
}

bool is_irreducible(const LaurentPoly& p) {
  if (p.is_zero() || p.span() == 0) return false;
  auto f = factor(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

bool is_squarefree(const LaurentPoly& p) {
  if (p.is_zero()) return false;
  auto f = detail::clear_laurent(p);
  return detail::degree(detail::gcd(f, detail::derivative(f))) <= 0;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long r = n;
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

LaurentPoly cyclotomic(unsigned n) {
  if (n == 0) throw DomainError("cyclotomic: index must be positive");
  return detail::to_laurent(detail::from_cyclotomic(n));
}

unsigned cyclotomic_index(const LaurentPoly& p) {
  if (p.is_zero()) return 0;
  LaurentPoly q = normalize(p);
  const long d = q.span();
  if (d < 1 || q.leading_coefficient() != 1 || abs(q.trailing_coefficient()) != 1) return 0;
  const unsigned long nmax = std::max<unsigned long>(6, 2 * static_cast<unsigned long>(d * d) + 2);
  for (unsigned n = 1; n <= nmax; ++n) {
    if (euler_phi(n) != static_cast<unsigned long>(d)) continue;
    if (detail::to_laurent(detail::from_cyclotomic(n)) == q) return n;
  }
  return 0;
}

}  // namespace knotloc
