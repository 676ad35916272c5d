#include "knotloc/isogeny.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"
#include "modp.hpp"
#include "realroots.hpp"
#include "zpoly.hpp"

namespace knotloc {
namespace {

using detail::ZPoly;

// ---- exponent vectors over a coprime base ----

std::vector<Integer> coprime_base(std::vector<Integer> xs) {
  std::vector<Integer> base;
  for (auto& x : xs)
    if (x > 1) base.push_back(x);
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(base.begin(), base.end());
    base.erase(std::unique(base.begin(), base.end()), base.end());
    for (std::size_t i = 0; i < base.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < base.size() && !changed; ++j) {
        Integer g = gcd(base[i], base[j]);
        if (g == 1) continue;
        Integer a = base[i] / g, b = base[j] / g;
        base.erase(base.begin() + static_cast<long>(j));
        base.erase(base.begin() + static_cast<long>(i));
        for (const Integer& y : {a, b, g})
          if (y > 1) base.push_back(y);
        changed = true;
      }
    }
  }
  return base;
}

std::vector<long> valuation_vector(Integer x, const std::vector<Integer>& base) {
  std::vector<long> v(base.size(), 0);
  for (std::size_t i = 0; i < base.size(); ++i) {
    while (mpz_divisible_p(x.get_mpz_t(), base[i].get_mpz_t())) {
      mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), base[i].get_mpz_t());
      ++v[i];
    }
  }
  if (x != 1) throw Error("coprime base does not cover input");
  return v;
}

// Exponent vectors of |r| for each r, over a common coprime base.
std::vector<std::vector<long>> exponent_vectors(const std::vector<Rational>& rs) {
  std::vector<Integer> all;
  for (const auto& r : rs) {
    all.push_back(abs(r.get_num()));
    all.push_back(r.get_den());
  }
  auto base = coprime_base(all);
  std::vector<std::vector<long>> out;
  for (const auto& r : rs) {
    auto a = valuation_vector(abs(r.get_num()), base);
    auto b = valuation_vector(r.get_den(), base);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    out.push_back(a);
  }
  return out;
}

// If e_r = m1 w and e_s = m2 w for a common w, returns (m1, m2)/gcd with m1 > 0.
std::optional<std::pair<long, long>> proportional(const std::vector<long>& er, const std::vector<long>& es) {
  std::size_t i = 0;
  while (i < er.size() && er[i] == 0) ++i;
  if (i == er.size() || es[i] == 0) return std::nullopt;
  for (std::size_t j = 0; j < er.size(); ++j)
    if (er[j] * es[i] != es[j] * er[i]) return std::nullopt;
  long a = er[i], b = es[i];
  const long g = std::gcd(a, b);
  a /= g;
  b /= g;
  if (a < 0) {
    a = -a;
    b = -b;
  }
  return std::make_pair(a, b);
}

unsigned torsion_order(const RootClass& c) {
  if (c.kind == RootClass::Kind::RootOfUnity) return c.order;
  if (c.kind == RootClass::Kind::RationalRoot) {
    if (c.value == 1) return 1;
    if (c.value == -1) return 2;
  }
  return 0;
}

struct PairResult {
  bool decided = false;  // false: needs the sweep
  bool isogenous = false;
  Witness witness{0, 0};
};

PairResult decide_exactly(const LaurentPoly& f, const RootClass& cf, const LaurentPoly& g, const RootClass& cg) {
  PairResult out;
  const unsigned of = torsion_order(cf), og = torsion_order(cg);
  if (of && og) {
    const long L = std::lcm(static_cast<long>(of), static_cast<long>(og));
    out.decided = true;
    out.isogenous = true;
    out.witness = {L / static_cast<long>(of), L / static_cast<long>(og)};
    return out;
  }
  if (of || og) {
    out.decided = true;
    return out;
  }
  using K = RootClass::Kind;
  if (cf.kind == K::RationalRoot && cg.kind == K::RationalRoot) {
    out.decided = true;
    auto ev = exponent_vectors({cf.value, cg.value});
    auto ab = proportional(ev[0], ev[1]);
    if (!ab) return out;
    const auto [a, b] = *ab;
    const long rneg = cf.value < 0, sneg = cg.value < 0;
    if (((b * rneg) - (a * sneg)) % 2 != 0) return out;
    if (!shares_root_after_substitution(f, g, a, b)) throw Error("rational witness failed verification");
    out.isogenous = true;
    out.witness = {a, b};
    return out;
  }
  if (cf.kind == K::RationalRoot || cg.kind == K::RationalRoot) {
    const LaurentPoly& other = cf.kind == K::RationalRoot ? g : f;
    if (detail::roots_on_unit_circle(detail::clear_laurent(other))) {
      out.decided = true;
      return out;
    }
  }
  return out;
}

std::vector<double> log_abs_roots(const LaurentPoly& f) {
  ZPoly z = detail::clear_laurent(normalize(f));
  const int d = detail::degree(z);
  if (d > 16) return {};
  const double lc = detail::lead(z).get_d();
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) {
    const double c = z[static_cast<std::size_t>(i)].get_d() / lc;
    if (!std::isfinite(c)) return {};
    C(i, d - 1) = -c;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  if (es.info() != Eigen::Success) return {};
  std::vector<double> out;
  for (int i = 0; i < d; ++i) out.push_back(std::log(std::abs(es.eigenvalues()[i])));
  return out;
}

bool modular_resultant_vanishes(const ZPoly& a, const ZPoly& b) {
  const detail::ModP F{(1ull << 61) - 1};
  if (F.reduce(detail::lead(a)) == 0 || F.reduce(detail::lead(b)) == 0) return true;
  return F.resultant(F.from(a), F.from(b)) == 0;
}

std::optional<Witness> sweep(const LaurentPoly& f, const LaurentPoly& g, long bound) {
  const auto lf = log_abs_roots(f);
  const auto lg = log_abs_roots(g);
  const bool prefilter = !lf.empty() && !lg.empty();
  double scale = 1.0;
  for (double x : lf) scale = std::max(scale, std::abs(x));
  for (double x : lg) scale = std::max(scale, std::abs(x));
  const ZPoly zf = detail::clear_laurent(normalize(f));
  const ZPoly zg = detail::clear_laurent(normalize(g));
  const ZPoly zg_rev = detail::reversed(zg);
  for (long m = 1; m <= bound; ++m) {
    for (long n = 1; n <= m; ++n) {
      for (long k = -m; k <= m; ++k) {
        if (k == 0 || std::max(n, std::abs(k)) != m || std::gcd(n, k) != 1) continue;
        if (prefilter) {
          // x^n = alpha and x^k = beta force k log|alpha| = n log|beta|
          const double tol = 1e-7 * static_cast<double>(n + std::abs(k)) * scale;
          bool possible = false;
          for (double a : lf) {
            for (double b : lg)
              if (std::abs(static_cast<double>(k) * a - static_cast<double>(n) * b) <= tol) {
                possible = true;
                break;
              }
            if (possible) break;
          }
          if (!possible) continue;
        }
        const ZPoly A = detail::inflate(zf, static_cast<unsigned>(n));
        const ZPoly B = detail::inflate(k > 0 ? zg : zg_rev, static_cast<unsigned>(std::abs(k)));
        if (!modular_resultant_vanishes(A, B)) continue;
        if (detail::degree(detail::gcd(A, B)) > 0) return Witness{n, k};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

namespace {

RootClass classify_irreducible(const LaurentPoly& f) {
  RootClass c;
  c.minimal_polynomial = f;
  if (f.span() == 1) {
    c.kind = RootClass::Kind::RationalRoot;
    c.value = -f.coefficient(0) / f.coefficient(1);
    if (c.value == 1 || c.value == -1) c.order = c.value == 1 ? 1 : 2;
    return c;
  }
  if (unsigned n = cyclotomic_index(f)) {
    c.kind = RootClass::Kind::RootOfUnity;
    c.order = n;
    return c;
  }
  c.kind = RootClass::Kind::GeneralAlgebraic;
  return c;
}

}  // namespace

RootClass classify_roots(const LaurentPoly& f0) {
  if (f0.is_zero() || f0.span() < 1) throw DomainError("classify_roots: input must be a non-unit");
  LaurentPoly f = normalize(f0);
  if (!is_irreducible(f)) throw DomainError("classify_roots: input must be irreducible");
  return classify_irreducible(f);
}

Dependence rationals_multiplicatively_dependent(const Rational& r, const Rational& s) {
  if (r == 0 || s == 0) throw DomainError("rationals_multiplicatively_dependent: zero input");
  const bool tr = abs(r) == 1, ts = abs(s) == 1;
  if (tr && ts) {
    if (r == 1) return {true, 1, s == 1 ? 1 : 2};
    return {true, s == 1 ? 2 : 1, 1};
  }
  if (tr || ts) return {false};
  auto ev = exponent_vectors({r, s});
  auto mm = proportional(ev[0], ev[1]);
  if (!mm) return {false};
  // k e_r = n e_s with e_r = m1 w, e_s = m2 w  =>  (k, n) = (m2, m1)
  long k = mm->second, n = mm->first;
  if (k < 0) {
    k = -k;
    n = -n;
  }
  const bool sign_r = r < 0 && (k % 2 != 0);
  const bool sign_s = s < 0 && (n % 2 != 0);
  if (sign_r != sign_s) {
    k *= 2;
    n *= 2;
  }
  return {true, k, n};
}

bool shares_root_after_substitution(const LaurentPoly& p, const LaurentPoly& q, long n, long k) {
  if (n == 0 || k == 0) throw DomainError("substitution exponents must be nonzero");
  return !coprime(substitute_power(p, n), substitute_power(q, k));
}

IsogenyVerdict strongly_coprime(const LaurentPoly& p, const LaurentPoly& q, long bound) {
  if (p.is_zero() || q.is_zero()) throw DomainError("strongly_coprime: zero input");
  if (bound < 1) throw DomainError("strongly_coprime: bound must be positive");
  std::vector<std::pair<LaurentPoly, RootClass>> fs, gs;
  for (auto& [f, m] : factor(p).factors) fs.emplace_back(f, classify_irreducible(f));
  for (auto& [g, m] : factor(q).factors) gs.emplace_back(g, classify_irreducible(g));

  IsogenyVerdict v{IsogenyVerdict::Status::StronglyCoprime, true, std::nullopt, std::nullopt};
  std::vector<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < gs.size(); ++j) {
      PairResult r = decide_exactly(fs[i].first, fs[i].second, gs[j].first, gs[j].second);
      if (!r.decided) {
        pending.emplace_back(i, j);
        continue;
      }
      if (r.isogenous) {
        v.status = IsogenyVerdict::Status::Isogenous;
        v.witness = r.witness;
        return v;
      }
    }
  }
  if (pending.empty()) return v;
  for (auto [i, j] : pending) {
    if (auto w = sweep(fs[i].first, gs[j].first, bound)) {
      v.status = IsogenyVerdict::Status::Isogenous;
      v.witness = *w;
      v.bound = bound;
      return v;
    }
  }
  v.exact = false;
  v.bound = bound;
  return v;
}

PolySequence parse_sequence(std::string_view text) {
  PolySequence out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    std::size_t lead = 0;
    while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
    if (item.substr(lead, 2) != "p:") throw ParseError("sequence entries must start with 'p:'", pos + lead);
    try {
      out.push_back(parse_poly(item.substr(lead + 2)));
    } catch (const ParseError& e) {
      throw ParseError(std::string("bad sequence entry"), pos + lead + 2 + e.position());
    }
    if (out.back().is_zero()) throw ParseError("sequence entries must be nonzero", pos + lead + 2);
    pos = end + 1;
  }
  return out;
}

std::string format_sequence(const PolySequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ";";
    out += "p:" + s[i].to_string();
  }
  return out;
}

TupleVerdict tuple_strongly_coprime(const PolySequence& P, const PolySequence& Q, long bound) {
  if (P.size() != Q.size() || P.empty()) throw DomainError("tuple_strongly_coprime: sequences must have equal nonzero length");
  TupleVerdict out;
  out.entries.resize(P.size(), IsogenyVerdict{IsogenyVerdict::Status::Isogenous, true, std::nullopt, std::nullopt});
  std::optional<std::size_t> first_exact, first_inexact;
  if (coprime(Q[0], P[0])) {
    out.entries[0].status = IsogenyVerdict::Status::StronglyCoprime;
    first_exact = 0;
  }
  for (std::size_t i = 1; i < P.size() && !first_exact; ++i) {
    out.entries[i] = strongly_coprime(Q[i], P[i], bound);
    if (!out.entries[i].strongly_coprime()) continue;
    if (out.entries[i].exact)
      first_exact = i;
    else if (!first_inexact)
      first_inexact = i;
  }
  std::optional<std::size_t> pick = first_exact ? first_exact : first_inexact;
  if (!pick) {
    out.strongly_coprime = false;
    out.exact = true;
    return out;
  }
  out.strongly_coprime = true;
  out.index = *pick + 1;
  out.mode = *pick == 0 ? TupleVerdict::Mode::PlainCoprime : TupleVerdict::Mode::Strong;
  out.exact = out.entries[*pick].exact;
  return out;
}

LaurentPoly standard_member(unsigned k) {
  if (k == 0) throw DomainError("standard family index starts at 1");
  const Rational K(k);
  LaurentPoly a = LaurentPoly::monomial(K, 1) - LaurentPoly(K + 1);
  LaurentPoly b = LaurentPoly::monomial(K + 1, 1) - LaurentPoly(K);
  return normalize(a * b);
}

std::vector<LaurentPoly> standard_family(unsigned kmax) {
  std::vector<LaurentPoly> out;
  for (unsigned k = 1; k <= kmax; ++k) out.push_back(standard_member(k));
  return out;
}

namespace {

std::size_t rank(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> m;
  for (auto& r : rows) {
    std::vector<Rational> q;
    for (long x : r) q.emplace_back(x);
    m.push_back(q);
  }
  std::size_t rk = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rk < m.size(); ++c) {
    std::size_t sel = rk;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[rk]);
    for (std::size_t r = rk + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rk][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace

LogHint log_independence_hint(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("log_independence_hint: zero input");
  std::vector<Rational> rp, rq;
  for (int side = 0; side < 2; ++side) {
    for (auto& [f, m] : factor(side == 0 ? p : q).factors) {
      if (f.span() != 1) return LogHint::NotApplicable;
      Rational r = -f.coefficient(0) / f.coefficient(1);
      (side == 0 ? rp : rq).push_back(r);
    }
  }
  for (auto* v : {&rp, &rq})
    for (const auto& r : *v)
      if (abs(r) == 1) return LogHint::NotSufficient;
  std::vector<Rational> all = rp;
  all.insert(all.end(), rq.begin(), rq.end());
  if (all.empty()) return LogHint::Sufficient;
  auto ev = exponent_vectors(all);
  std::vector<std::vector<long>> a(ev.begin(), ev.begin() + static_cast<long>(rp.size()));
  std::vector<std::vector<long>> b(ev.begin() + static_cast<long>(rp.size()), ev.end());
  return rank(a) + rank(b) == rank(ev) ? LogHint::Sufficient : LogHint::NotSufficient;
}

std::string to_string(LogHint h) {
  switch (h) {
    case LogHint::Sufficient:
      return "sufficient";
    case LogHint::NotSufficient:
      return "not-sufficient";
    case LogHint::NotApplicable:
      return "not-applicable";
  }
  return "";
}

}  // namespace knotloc
