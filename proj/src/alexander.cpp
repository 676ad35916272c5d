#include "knotloc/alexander.hpp"

#include <algorithm>
#include <random>

#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"
#include "linalg.hpp"

namespace knotloc {

using detail::ZMatrix;

namespace {

using Dense = std::vector<Rational>;  // ascending coefficients

void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod d over Q, d nonzero with degree >= 1
Dense rem(Dense a, const Dense& d) {
  trim(a);
  const std::size_t dd = d.size() - 1;
  while (a.size() > dd) {
    const Rational f = a.back() / d.back();
    const std::size_t shift = a.size() - 1 - dd;
    for (std::size_t i = 0; i <= dd; ++i) a[shift + i] -= f * d[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Dense times(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

LaurentPoly conj(const LaurentPoly& p) { return substitute_power(p, -1); }

LaurentPoly one_minus_t() { return LaurentPoly(1) - LaurentPoly::variable(); }

void pencil(const SeifertMatrix& V, ZMatrix& x, ZMatrix& y) {
  const std::size_t n = V.size();
  x.assign(n, std::vector<Integer>(n));
  y.assign(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x[i][j] = V.at(i, j);
      y[i][j] = V.at(j, i);
    }
}

// adjugate of X - tY
PolyMatrix adjugate(const ZMatrix& x, const ZMatrix& y) {
  const std::size_t n = x.size();
  PolyMatrix adj(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // (-1)^(i+j) det of the minor without row j and column i
      ZMatrix mx, my;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Integer> rx, ry;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          rx.push_back(x[r][c]);
          ry.push_back(y[r][c]);
        }
        mx.push_back(rx);
        my.push_back(ry);
      }
      LaurentPoly m = detail::pencil_det(mx, my);
      adj[i][j] = (i + j) % 2 ? -m : m;
    }
  return adj;
}

// gcd of the (n-1)-minors of V - tV^T
LaurentPoly minor_gcd(const SeifertMatrix& V) {
  ZMatrix x, y;
  pencil(V, x, y);
  LaurentPoly g;
  for (const auto& row : adjugate(x, y))
    for (const auto& e : row) g = gcd(g, e);
  return g;
}

void check_order(const LaurentPoly& order) {
  if (order.is_zero()) throw DomainError("module order must be nonzero");
  if (augmentation(order) == 0) throw DomainError("module order must have nonzero augmentation (order(1) != 0)");
}

}  // namespace

CyclicModule make_module(const LaurentPoly& order) {
  check_order(order);
  CyclicModule m;
  m.order = normalize(order);
  return m;
}

CyclicModule module_from_knot(const SeifertMatrix& V) {
  CyclicModule m = make_module(alexander_poly(V));
  const std::size_t n = V.size();
  const LaurentPoly t = LaurentPoly::variable();
  m.presentation.assign(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.presentation[i][j] = LaurentPoly(V.at(i, j)) - t * Rational(V.at(j, i));
  // cyclic iff the gcd of the (n-1)-minors is a unit
  if (n > 0) m.cyclic = minor_gcd(V).span() == 0;
  return m;
}

LaurentPoly module_exponent(const SeifertMatrix& V) {
  const LaurentPoly delta = alexander_poly(V);
  if (V.size() == 0) return delta;
  return normalize(exact_quotient(delta, minor_gcd(V)));
}

std::string to_string(Submodule::Label l) {
  switch (l) {
    case Submodule::Label::P0:
      return "P0";
    case Submodule::Label::Pplus:
      return "P+";
    case Submodule::Label::Pminus:
      return "P-";
    case Submodule::Label::Full:
      return "full";
    case Submodule::Label::Other:
      return "other";
  }
  return "";
}

std::vector<Submodule> proper_submodules(const CyclicModule& M) {
  check_order(M.order);
  const LaurentPoly order = normalize(M.order);
  using L = Submodule::Label;
  if (order.span() == 0) return {{LaurentPoly(1), L::P0}};
  const Factorization f = factor(order);
  const auto& fs = f.factors;
  if (fs.size() == 2 && fs[0].second == 1 && fs[1].second == 1 && unit_equal(fs[1].first, reciprocal(fs[0].first)) &&
      !unit_equal(fs[0].first, reciprocal(fs[0].first))) {
    return {{order, L::P0}, {fs[0].first, L::Pplus}, {fs[1].first, L::Pminus}};
  }
  const bool squarefree = std::all_of(fs.begin(), fs.end(), [](const auto& x) { return x.second == 1; });
  std::vector<LaurentPoly> divisors{LaurentPoly(1)};
  for (const auto& [r, e] : fs) {
    std::vector<LaurentPoly> next;
    for (const auto& d : divisors) {
      LaurentPoly acc = d;
      for (int i = 0; i <= e; ++i) {
        next.push_back(acc);
        acc = acc * r;
      }
    }
    divisors = std::move(next);
  }
  std::vector<Submodule> out;
  for (const auto& d : divisors) {
    LaurentPoly g = normalize(d);
    L label = L::Other;
    if (squarefree && g == order) label = L::P0;
    if (squarefree && g.span() == 0) label = L::Full;
    out.push_back({g, label});
  }
  std::sort(out.begin(), out.end(), [](const Submodule& a, const Submodule& b) {
    if (a.generator.span() != b.generator.span()) return a.generator.span() > b.generator.span();
    return a.generator.to_string() < b.generator.to_string();
  });
  return out;
}

std::string FractionClass::to_string() const {
  if (is_zero()) return "0";
  return "(" + numerator.to_string() + ")/(" + denominator.to_string() + ")";
}

FractionClass reduce_fraction(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw DomainError("fraction with zero denominator");
  if (numerator.is_zero()) return {};
  const LaurentPoly g = gcd(numerator, denominator);
  LaurentPoly n = exact_quotient(numerator, g);
  LaurentPoly d = exact_quotient(denominator, g);
  const LaurentPoly dn = normalize(d);
  n = exact_quotient(n, exact_quotient(d, dn));
  if (dn.span() == 0) return {};
  const Dense D = dn.dense();
  Dense r = rem(n.dense(), D);
  long shift = n.low_degree();
  // t^-1 = -(D - D(0)) / (D(0) t) modulo D
  Dense tinv(D.size() - 1);
  for (std::size_t i = 1; i < D.size(); ++i) tinv[i - 1] = -D[i] / D[0];
  const Dense t{Rational(0), Rational(1)};
  for (; shift > 0; --shift) r = rem(times(r, t), D);
  for (; shift < 0; ++shift) r = rem(times(r, tinv), D);
  if (r.empty()) return {};
  return {LaurentPoly::from_coefficients(r), dn};
}

FractionClass scale(const FractionClass& c, const LaurentPoly& m) {
  return reduce_fraction(c.numerator * m, c.denominator);
}

FractionClass conjugate(const FractionClass& c) { return reduce_fraction(conj(c.numerator), conj(c.denominator)); }

BlanchfieldPairing::BlanchfieldPairing(const SeifertMatrix& V) : v_(V) {
  order_ = alexander_poly(V);
  if (order_.span() == 0) throw DomainError("Blanchfield pairing is undefined: the Alexander module is trivial");
  const std::size_t n = V.size();
  ZMatrix x, y;
  pencil(V, x, y);
  det_ = detail::pencil_det(x, y);
  adjugate_ = adjugate(x, y);
  // look for a cyclic generator among small integer vectors
  auto try_vector = [&](const std::vector<LaurentPoly>& v) {
    if (vector_order(v) == order_) {
      generator_ = v;
      return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<LaurentPoly> v(n, LaurentPoly());
    v[i] = LaurentPoly(1);
    if (try_vector(v)) return;
  }
  for (long c : {1L, -1L, 2L})
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<LaurentPoly> v(n, LaurentPoly());
        v[i] = LaurentPoly(1);
        v[j] = LaurentPoly(c);
        if (try_vector(v)) return;
      }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<LaurentPoly> v(n);
    for (auto& e : v) e = LaurentPoly(coef(rng));
    if (try_vector(v)) return;
  }
}

LaurentPoly BlanchfieldPairing::vector_order(const std::vector<LaurentPoly>& x) const {
  const std::size_t n = v_.size();
  if (x.size() != n) throw DomainError("vector length does not match the presentation");
  LaurentPoly g = det_;
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly w;
    for (std::size_t j = 0; j < n; ++j) w += adjugate_[i][j] * x[j];
    g = gcd(g, w);
  }
  return normalize(exact_quotient(det_, g));
}

FractionClass BlanchfieldPairing::pair(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) const {
  const std::size_t n = v_.size();
  if (x.size() != n || y.size() != n) throw DomainError("vector length does not match the presentation");
  LaurentPoly num;
  for (std::size_t i = 0; i < n; ++i) {
    LaurentPoly w;
    for (std::size_t j = 0; j < n; ++j) w += adjugate_[i][j] * y[j];
    num += conj(x[i]) * w;
  }
  return reduce_fraction(one_minus_t() * num, det_);
}

FractionClass BlanchfieldPairing::pair(const LaurentPoly& f, const LaurentPoly& h) const {
  if (!generator_) throw DomainError("the Alexander module is not cyclic");
  std::vector<LaurentPoly> a = *generator_, b = *generator_;
  for (auto& e : a) e = e * f;
  for (auto& e : b) e = e * h;
  return pair(a, b);
}

BlanchfieldPairing blanchfield(const SeifertMatrix& V) { return BlanchfieldPairing(V); }

bool isotropic(const Submodule& P, const BlanchfieldPairing& B) {
  if (P.generator.is_zero() || !divides(P.generator, B.order()))
    throw DomainError("submodule generator does not divide the module order");
  if (unit_equal(P.generator, B.order())) return true;
  return B.pair(P.generator, P.generator).is_zero();
}

std::optional<bool> isotropic_by_pattern(const Submodule& P, const CyclicModule& M) {
  switch (P.label) {
    case Submodule::Label::P0:
    case Submodule::Label::Pplus:
    case Submodule::Label::Pminus:
      return true;
    case Submodule::Label::Full:
      return normalize(M.order).span() == 0;
    case Submodule::Label::Other:
      return std::nullopt;
  }
  return std::nullopt;
}

LaurentPoly element_order(const CyclicModule& M, const LaurentPoly& x) {
  check_order(M.order);
  return normalize(exact_quotient(M.order, gcd(M.order, x)));
}

std::string to_string(LocalizationVerdict::Status s) {
  switch (s) {
    case LocalizationVerdict::Status::Torsion:
      return "torsion";
    case LocalizationVerdict::Status::TorsionFree:
      return "torsion_free";
    case LocalizationVerdict::Status::Mixed:
      return "mixed";
  }
  return "";
}

std::string to_string(LocalizationVerdict::Mode m) {
  return m == LocalizationVerdict::Mode::ClassicalCoprime ? "classical-coprime" : "strong-coprime";
}

LocalizationVerdict localize(const CyclicModule& M, const LaurentPoly& p, LocalizationVerdict::Mode mode, long bound) {
  check_order(M.order);
  if (p.is_zero()) throw DomainError("cannot localize at the zero polynomial");
  LocalizationVerdict v;
  v.mode = mode;
  const LaurentPoly order = normalize(M.order);
  LaurentPoly survivor(1);
  if (order.span() > 0) {
    for (const auto& [r, e] : factor(order).factors) {
      bool dies = false;
      if (augmentation(r) != 0) {
        if (mode == LocalizationVerdict::Mode::ClassicalCoprime) {
          dies = coprime(r, p) || coprime(reciprocal(r), p);
        } else {
          IsogenyVerdict iv = strongly_coprime(r, p, bound);
          dies = iv.strongly_coprime();
          if (dies && !iv.exact) v.exact = false;
        }
      }
      LaurentPoly part = power(r, static_cast<unsigned>(e));
      if (dies)
        v.killed.push_back(normalize(part));
      else
        survivor = survivor * part;
    }
  }
  v.survivor = normalize(survivor);
  if (v.survivor.span() == 0)
    v.status = LocalizationVerdict::Status::Torsion;
  else if (v.survivor == order)
    v.status = LocalizationVerdict::Status::TorsionFree;
  else
    v.status = LocalizationVerdict::Status::Mixed;
  return v;
}

bool localized_injects(const CyclicModule& M, const LaurentPoly& p, long bound) {
  return localize(M, p, LocalizationVerdict::Mode::StrongCoprime, bound).killed.empty();
}

}  // namespace knotloc
