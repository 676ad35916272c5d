#include "knotloc/seifert.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "knotloc/error.hpp"
#include "knotloc/factor.hpp"
#include "linalg.hpp"
#include "real.hpp"
#include "realroots.hpp"
#include "zpoly.hpp"

namespace knotloc {

using detail::Interval;
using detail::QMatrix;
using detail::Real;
using detail::ZMatrix;
using detail::ZPoly;

SeifertMatrix::SeifertMatrix(IntMatrix entries, std::string name) : v_(std::move(entries)), name_(std::move(name)) {
  const std::size_t n = v_.size();
  for (const auto& row : v_)
    if (row.size() != n) throw DomainError("Seifert matrix must be square");
  if (n % 2 != 0) throw DomainError("Seifert matrix must have even size");
  ZMatrix a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = v_[i][j] - v_[j][i];
  Integer d = detail::determinant(a);
  if (d != 1 && d != -1) throw DomainError("V - V^T is not unimodular (determinant " + d.get_str() + ")");
}

namespace knots {

SeifertMatrix unknot() { return SeifertMatrix({}, "unknot"); }
SeifertMatrix right_trefoil() { return SeifertMatrix({{-1, 1}, {0, -1}}, "trefoil"); }
SeifertMatrix figure_eight() { return SeifertMatrix({{1, 1}, {0, -1}}, "figure8"); }

SeifertMatrix cinquefoil() {
  IntMatrix v(4, std::vector<long>(4, 0));
  for (std::size_t i = 0; i < 4; ++i) {
    v[i][i] = -1;
    if (i + 1 < 4) v[i][i + 1] = 1;
  }
  return SeifertMatrix(v, "cinquefoil");
}

SeifertMatrix ribbon(unsigned k) {
  if (k == 0) throw DomainError("ribbon pattern needs k >= 1");
  const long kk = static_cast<long>(k);
  return SeifertMatrix({{0, kk + 1}, {kk, 0}}, "R" + std::to_string(k));
}

SeifertMatrix twisted_base() { return SeifertMatrix({{-1, 1}, {0, -2}}, "J"); }

}  // namespace knots

LaurentPoly alexander_poly(const SeifertMatrix& V) {
  const std::size_t n = V.size();
  ZMatrix x(n, std::vector<Integer>(n)), y(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x[i][j] = V.at(i, j);
      y[i][j] = V.at(j, i);
    }
  return normalize(detail::pencil_det(x, y));
}

int signature_at_trace(const SeifertMatrix& V, const Rational& x) {
  if (x <= -2 || x >= 2) throw DomainError("signature_at_trace needs -2 < x < 2");
  const std::size_t n = V.size();
  if (n == 0) return 0;
  // H = (1-c)(V+V^T) + i s K with c = x/2, s = sin(theta), K = V^T - V. The real
  // form [[S, -sK], [sK, S]] is congruent to [[S, -K], [K, S/s^2]], which is rational.
  const Rational c = x / 2;
  const Rational s2 = 1 - c * c;
  QMatrix m(2 * n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational S = (1 - c) * Rational(V.at(i, j) + V.at(j, i));
      Rational K = Rational(V.at(j, i) - V.at(i, j));
      m[i][j] = S;
      m[i][n + j] = -K;
      m[n + i][j] = K;
      m[n + i][n + j] = S / s2;
    }
  return detail::inertia(std::move(m)).signature() / 2;
}

namespace {

struct Located {
  JumpPoint jump;
  ZPoly x_poly;  // irreducible-factor polynomial in x = t + 1/t
};

bool overlaps(const Rational& alo, const Rational& ahi, const Rational& blo, const Rational& bhi) {
  return !(ahi < blo || bhi < alo);
}

void shrink(Located& l) {
  if (l.jump.x_lo == l.jump.x_hi) return;
  Interval iv{l.jump.x_lo, l.jump.x_hi};
  detail::refine(l.x_poly, iv, (iv.hi - iv.lo) / 2);
  l.jump.x_lo = iv.lo;
  l.jump.x_hi = iv.hi;
}

void shrink_to(Located& l, const Rational& width) {
  while (l.jump.x_hi - l.jump.x_lo > width) shrink(l);
}

std::vector<Located> locate_jumps(const LaurentPoly& delta) {
  std::vector<Located> out;
  if (delta.span() < 1) return out;
  for (const auto& [f, mult] : factor(delta).factors) {
    ZPoly z = detail::primitive_part(detail::clear_laurent(f));
    if (detail::degree(z) % 2 != 0 || !detail::is_palindromic(z)) continue;
    ZPoly P = detail::palindromic_to_x(z);
    auto ivs = detail::isolate_roots(P, Rational(-2), Rational(2));
    const unsigned N = cyclotomic_index(f);
    std::vector<unsigned> ks;
    if (N > 2)
      for (unsigned k = 1; 2 * k < N; ++k)
        if (std::gcd(k, N) == 1) ks.push_back(k);
    // ascending x is descending theta
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      Located l{{f, ivs[i].lo, ivs[i].hi, std::nullopt}, P};
      if (N > 2 && ks.size() == ivs.size()) l.jump.theta_over_pi = make_rational(2 * ks[ivs.size() - 1 - i], N);
      out.push_back(std::move(l));
    }
  }
  // separate all enclosures from each other and from the ends x = +-2
  bool again = true;
  while (again) {
    again = false;
    for (auto& l : out) {
      while (overlaps(l.jump.x_lo, l.jump.x_hi, Rational(2), Rational(2)) ||
             overlaps(l.jump.x_lo, l.jump.x_hi, Rational(-2), Rational(-2))) {
        shrink(l);
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        while (overlaps(out[i].jump.x_lo, out[i].jump.x_hi, out[j].jump.x_lo, out[j].jump.x_hi)) {
          shrink(out[i]);
          shrink(out[j]);
          again = true;
        }
  }
  std::sort(out.begin(), out.end(), [](const Located& a, const Located& b) { return a.jump.x_lo > b.jump.x_lo; });
  return out;
}

SignatureProfile build_profile(const SeifertMatrix& V, const std::vector<Located>& located) {
  SignatureProfile p;
  for (const auto& l : located) p.jumps.push_back(l.jump);
  const std::size_t n = p.jumps.size();
  for (std::size_t i = 0; i <= n; ++i) {
    Rational upper = i == 0 ? Rational(2) : p.jumps[i - 1].x_lo;
    Rational lower = i == n ? Rational(-2) : p.jumps[i].x_hi;
    Rational x = (upper + lower) / 2;
    p.arcs.push_back({signature_at_trace(V, x), x});
  }
  return p;
}

unsigned bits_for(unsigned digits) { return digits * 4 + 32; }

// theta/pi of the root in a jump, at about `digits` decimal digits.
Real theta_over_pi_real(const JumpPoint& j, unsigned digits) {
  detail::PrecisionScope scope(digits + 10);
  if (j.theta_over_pi) return detail::to_real(*j.theta_over_pi);
  Rational x = j.x_lo;
  if (j.x_lo != j.x_hi) {
    // acos loses half the bits near x = +-2, so refine to twice the precision
    ZPoly P = detail::palindromic_to_x(detail::primitive_part(detail::clear_laurent(j.factor)));
    Interval iv{j.x_lo, j.x_hi};
    mpz_class two_pow = 1;
    two_pow <<= 2 * bits_for(digits);
    detail::refine(P, iv, Rational(1) / Rational(two_pow));
    x = (iv.lo + iv.hi) / 2;
  }
  Real half = detail::to_real(x) / 2;
  return boost::multiprecision::acos(half) / detail::pi_real();
}

}  // namespace

SignatureProfile signature_profile(const SeifertMatrix& V) { return build_profile(V, locate_jumps(alexander_poly(V))); }

int signature_at(const SeifertMatrix& V, const Rational& theta_over_pi) {
  if (theta_over_pi <= 0 || theta_over_pi >= 1) throw DomainError("signature_at needs 0 < theta/pi < 1");
  const LaurentPoly delta = alexander_poly(V);
  // e^(i pi a/b) is a primitive root of unity of order 2b/gcd(a, 2)
  const Integer a = theta_over_pi.get_num();
  const Integer b = theta_over_pi.get_den();
  const Integer order = (2 * b) / (a % 2 == 0 ? 2 : 1);
  if (order.fits_ulong_p() && order.get_ui() < 100000 &&
      divides(cyclotomic(static_cast<unsigned>(order.get_ui())), delta))
    throw DomainError("theta is a jump point of the signature function; use signature_profile");
  auto located = locate_jumps(delta);
  SignatureProfile profile = build_profile(V, located);
  for (unsigned bits = 64;; bits *= 2) {
    detail::PrecisionScope scope(bits / 3 + 10);
    Real x = 2 * boost::multiprecision::cos(detail::to_real(theta_over_pi) * detail::pi_real());
    Rational mid = detail::to_rational(x);
    mpz_class two_pow = 1;
    two_pow <<= bits - 8;
    const Rational eps = Rational(1) / Rational(two_pow);
    const Rational lo = mid - eps, hi = mid + eps;
    bool separated = true;
    std::size_t above = 0;
    for (auto& l : located) {
      shrink_to(l, eps);
      if (overlaps(lo, hi, l.jump.x_lo, l.jump.x_hi)) {
        separated = false;
        break;
      }
      if (l.jump.x_lo > hi) ++above;
    }
    if (separated) return profile.arcs[above].signature;
    if (bits > (1u << 16)) throw Error("signature_at: could not separate theta from the jump points");
  }
}

std::string jump_theta_over_pi(const JumpPoint& j, unsigned digits) {
  detail::PrecisionScope scope(digits + 10);
  return detail::fixed_string(theta_over_pi_real(j, digits), digits);
}

double Rho0Value::approx() const { return std::stod(numeric); }

Rho0Value rho0(const SeifertMatrix& V, unsigned precision) {
  if (precision == 0 || precision > 10000) throw DomainError("precision must be between 1 and 10000 digits");
  Rho0Value out;
  out.profile = signature_profile(V);
  out.precision = precision;
  const auto& p = out.profile;
  bool all_exact = std::all_of(p.jumps.begin(), p.jumps.end(), [](const JumpPoint& j) { return j.theta_over_pi.has_value(); });
  detail::PrecisionScope scope(precision + 10);
  if (all_exact) {
    Rational sum = 0, prev = 0;
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
      Rational next = i < p.jumps.size() ? *p.jumps[i].theta_over_pi : Rational(1);
      sum += p.arcs[i].signature * (next - prev);
      prev = next;
    }
    out.exact = sum;
    out.numeric = detail::fixed_string(detail::to_real(sum), precision);
    return out;
  }
  Real sum = 0, prev = 0;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    Real next = i < p.jumps.size() ? theta_over_pi_real(p.jumps[i], precision + 5) : Real(1);
    sum += p.arcs[i].signature * (next - prev);
    prev = next;
  }
  out.numeric = detail::fixed_string(sum, precision);
  return out;
}

int arf(const SeifertMatrix& V) {
  Rational d = alexander_poly(V).evaluate(Rational(-1));
  Integer r = abs(d.get_num()) % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const std::size_t n = a.size(), m = b.size();
  IntMatrix v(n + m, std::vector<long>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i][j] = a.at(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) v[n + i][n + j] = b.at(i, j);
  return SeifertMatrix(std::move(v), a.name() + "#" + b.name());
}

SeifertMatrix mirror(const SeifertMatrix& V) {
  const std::size_t n = V.size();
  IntMatrix v(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) v[i][j] = -V.at(j, i);
  return SeifertMatrix(std::move(v), "mirror(" + V.name() + ")");
}

std::string profile_csv(const SignatureProfile& p, unsigned digits) {
  detail::PrecisionScope scope(digits + 10);
  std::ostringstream os;
  os << "theta_start,theta_end,signature\n";
  const Real pi = detail::pi_real();
  Real prev = 0;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    Real next = i < p.jumps.size() ? theta_over_pi_real(p.jumps[i], digits) * pi : pi;
    os << detail::fixed_string(prev, digits) << ',' << detail::fixed_string(next, digits) << ','
       << p.arcs[i].signature << '\n';
    prev = next;
  }
  return os.str();
}

std::string profile_svg(const SignatureProfile& p, const std::string& title) {
  const double w = 640, h = 320, margin = 40;
  int smax = 2;
  for (const auto& a : p.arcs) smax = std::max(smax, std::abs(a.signature));
  auto px = [&](double tau) { return margin + tau * (w - 2 * margin); };
  auto py = [&](int s) { return h / 2 - s * (h / 2 - margin) / smax; };
  char buf[160];
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"320\" viewBox=\"0 0 640 320\">\n";
  os << "<rect width=\"640\" height=\"320\" fill=\"white\"/>\n";
  std::snprintf(buf, sizeof buf, "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"#999\"/>\n", px(0), py(0), px(1),
                py(0));
  os << buf;
  std::string esc;
  for (char c : title) {
    if (c == '<')
      esc += "&lt;";
    else if (c == '>')
      esc += "&gt;";
    else if (c == '&')
      esc += "&amp;";
    else
      esc += c;
  }
  os << "<text x=\"40\" y=\"24\" font-family=\"monospace\" font-size=\"14\">" << esc << "</text>\n";
  os << "<text x=\"36\" y=\"300\" font-family=\"monospace\" font-size=\"12\">0</text>\n";
  os << "<text x=\"592\" y=\"300\" font-family=\"monospace\" font-size=\"12\">pi</text>\n";
  os << "<polyline fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"2\" points=\"";
  double prev = 0;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    double next = i < p.jumps.size() ? std::stod(jump_theta_over_pi(p.jumps[i], 12)) : 1.0;
    std::snprintf(buf, sizeof buf, "%.2f,%.2f %.2f,%.2f ", px(prev), py(p.arcs[i].signature), px(next),
                  py(p.arcs[i].signature));
    os << buf;
    prev = next;
  }
  os << "\"/>\n";
  std::snprintf(buf, sizeof buf, "<text x=\"4\" y=\"%.2f\" font-family=\"monospace\" font-size=\"12\">%d</text>\n", py(smax) + 4,
                smax);
  os << buf;
  std::snprintf(buf, sizeof buf, "<text x=\"4\" y=\"%.2f\" font-family=\"monospace\" font-size=\"12\">%d</text>\n", py(-smax) + 4,
                -smax);
  os << buf << "</svg>\n";
  return os.str();
}

}  // namespace knotloc
