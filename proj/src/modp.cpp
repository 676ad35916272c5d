#include "modp.hpp"

#include <algorithm>
#include <utility>

namespace knotloc::detail {

u64 ModP::pow(u64 a, u64 e) const {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 ModP::reduce(const Integer& z) const {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

PPoly ModP::from(const ZPoly& f) const {
  PPoly out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = reduce(f[i]);
  trim(out);
  return out;
}

void ModP::trim(PPoly& f) const {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly ModP::add(const PPoly& a, const PPoly& b) const {
  PPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i]);
  trim(out);
  return out;
}

PPoly ModP::sub(const PPoly& a, const PPoly& b) const {
  PPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i]);
  trim(out);
  return out;
}

PPoly ModP::mul(const PPoly& a, const PPoly& b) const {
  if (a.empty() || b.empty()) return {};
  PPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = add(out[i + j], mul(a[i], b[j]));
  }
  trim(out);
  return out;
}

PPoly ModP::scale(const PPoly& a, u64 c) const {
  PPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul(a[i], c);
  trim(out);
  return out;
}

PPoly ModP::monic(const PPoly& a) const {
  if (a.empty()) return a;
  return scale(a, inv(a.back()));
}

void ModP::divmod(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r) const {
  r = a;
  trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  const std::size_t db = b.size() - 1;
  q.assign(r.size() - db, 0);
  const u64 il = inv(b.back());
  for (std::size_t i = r.size(); i-- > db;) {
    if (!r[i]) continue;
    const u64 c = mul(r[i], il);
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = sub(r[i - db + j], mul(c, b[j]));
  }
  trim(r);
  trim(q);
}

PPoly ModP::rem(const PPoly& a, const PPoly& b) const {
  PPoly q, r;
  divmod(a, b, q, r);
  return r;
}

PPoly ModP::gcd(PPoly a, PPoly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

PPoly ModP::xgcd(const PPoly& a, const PPoly& b, PPoly& s, PPoly& t) const {
  PPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    PPoly q, r;
    divmod(r0, r1, q, r);
    PPoly s2 = sub(s0, mul(q, s1));
    PPoly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear();
    t.clear();
    return r0;
  }
  const u64 il = inv(r0.back());
  s = scale(s0, il);
  t = scale(t0, il);
  return scale(r0, il);
}

PPoly ModP::derivative(const PPoly& a) const {
  if (a.size() <= 1) return {};
  PPoly out(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mul(a[i], i % p);
  trim(out);
  return out;
}

PPoly ModP::powmod(const PPoly& base, u64 e, const PPoly& m) const {
  PPoly r{1 % p};
  trim(r);
  PPoly b = rem(base, m);
  while (e) {
    if (e & 1) r = rem(mul(r, b), m);
    e >>= 1;
    if (e) b = rem(mul(b, b), m);
  }
  return r;
}

u64 ModP::resultant(PPoly a, PPoly b) const {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  u64 res = 1;
  for (;;) {
    const int da = pdegree(a), db = pdegree(b);
    if (db == 0) return mul(res, pow(b[0], static_cast<u64>(da)));
    if (da == 0) return mul(res, pow(a[0], static_cast<u64>(db)));
    if (da < db) {
      // res(a,b) = (-1)^{da*db} res(b,a)
      if ((da & 1) && (db & 1)) res = sub(0, res);
      std::swap(a, b);
      continue;
    }
    // res(a,b) = (-1)^{da*db} lc(b)^{da - deg r} res(b, r) with r = a mod b
    PPoly r = rem(a, b);
    if (r.empty()) return 0;
    const int dr = pdegree(r);
    res = mul(res, pow(b.back(), static_cast<u64>(da - dr)));
    if ((da & 1) && (db & 1)) res = sub(0, res);
    a = std::move(b);
    b = std::move(r);
  }
}

std::vector<PPoly> berlekamp(const ModP& F, const PPoly& f) {
  const int n = pdegree(f);
  if (n <= 1) return {f};
  // Rows of Q: x^(p*i) mod f.
  std::vector<std::vector<u64>> M(n, std::vector<u64>(n, 0));
  PPoly xp = F.powmod(PPoly{0, 1}, F.p, f);
  PPoly cur{1};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      u64 q = j < static_cast<int>(cur.size()) ? cur[j] : 0;
      if (i == j) q = F.sub(q, 1);
      M[j][i] = q;  // transpose: we want v with (Q - I)^T v = 0
    }
    cur = F.rem(F.mul(cur, xp), f);
  }
  // Nullspace of M by reduced row echelon form.
  std::vector<int> where(n, -1);
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int r = row; r < n; ++r)
      if (M[r][col]) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    std::swap(M[sel], M[row]);
    const u64 il = F.inv(M[row][col]);
    for (int j = 0; j < n; ++j) M[row][j] = F.mul(M[row][j], il);
    for (int r = 0; r < n; ++r) {
      if (r == row || !M[r][col]) continue;
      const u64 c = M[r][col];
      for (int j = 0; j < n; ++j) M[r][j] = F.sub(M[r][j], F.mul(c, M[row][j]));
    }
    where[col] = row;
    ++row;
  }
  std::vector<PPoly> basis;
  for (int free = 0; free < n; ++free) {
    if (where[free] >= 0) continue;
    PPoly v(n, 0);
    v[free] = 1;
    for (int col = 0; col < n; ++col)
      if (where[col] >= 0) v[col] = F.sub(0, M[where[col]][free]);
    F.trim(v);
    basis.push_back(v);
  }
  const std::size_t r = basis.size();
  std::vector<PPoly> factors{F.monic(f)};
  if (r == 1) return factors;
  for (const auto& v : basis) {
    if (pdegree(v) <= 0) continue;
    std::vector<PPoly> next;
    for (const auto& u0 : factors) {
      if (pdegree(u0) <= 1 || factors.size() >= r) {
        next.push_back(u0);
        continue;
      }
      // u = prod_s gcd(u, v - s); the pieces are pairwise coprime.
      PPoly u = u0;
      for (u64 s = 0; s < F.p && pdegree(u) > 0; ++s) {
        PPoly vs = v;
        vs[0] = F.sub(vs[0], s);
        F.trim(vs);
        PPoly g = F.gcd(u, vs);
        if (pdegree(g) <= 0) continue;
        next.push_back(g);
        PPoly q, rr;
        F.divmod(u, g, q, rr);
        u = F.monic(q);
      }
    }
    factors = std::move(next);
    if (factors.size() >= r) break;
  }
  return factors;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  u64 d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  ModP F{n};
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = F.pow(a, d);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s; ++i) {
      x = F.mul(x, x);
      if (x == n - 1) {
        comp = false;
        break;
      }
    }
    if (comp) return false;
  }
  return true;
}

}  // namespace knotloc::detail
