#include "knotloc/laurent.hpp"

#include <sstream>

#include "knotloc/error.hpp"
#include "zpoly.hpp"

namespace knotloc {

namespace {
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}
}  // namespace

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(0, canonical(constant));
}

LaurentPoly LaurentPoly::monomial(const Rational& coefficient, long exponent) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace(exponent, canonical(coefficient));
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace(e, canonical(c));
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<Integer>& ascending, long shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < ascending.size(); ++i)
    if (ascending[i] != 0) p.terms_.emplace(static_cast<long>(i) + shift, Rational(ascending[i]));
  return p;
}

LaurentPoly LaurentPoly::from_coefficients(const std::vector<Rational>& ascending, long shift) {
  LaurentPoly p;
  for (std::size_t i = 0; i < ascending.size(); ++i)
    if (ascending[i] != 0) p.terms_.emplace(static_cast<long>(i) + shift, canonical(ascending[i]));
  return p;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

long LaurentPoly::low_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return terms_.begin()->first;
}

long LaurentPoly::high_degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return terms_.rbegin()->first;
}

Rational LaurentPoly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::leading_coefficient() const { return is_zero() ? Rational(0) : terms_.rbegin()->second; }
Rational LaurentPoly::trailing_coefficient() const { return is_zero() ? Rational(0) : terms_.begin()->second; }

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (is_zero()) return 0;
  if (x == 0 && low_degree() < 0) throw DomainError("evaluating a negative power at 0");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational xe = 1;
    if (e != 0) {
      Integer num, den;
      const unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
      mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), ae);
      mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), ae);
      xe = e > 0 ? make_rational(num, den) : make_rational(den, num);
    }
    acc += c * xe;
  }
  return acc;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  Terms out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : other.terms_) out[e1 + e2] += c1 * c2;
  *this = from_terms(std::move(out));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  const Rational s = canonical(scalar);
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    Rational c = it->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    if (e == 0) {
      os << knotloc::to_string(a);
      continue;
    }
    if (a != 1) {
      if (a.get_den() != 1)
        os << "(" << knotloc::to_string(a) << ")*";
      else
        os << knotloc::to_string(a) << "*";
    }
    os << "t";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

std::vector<Rational> LaurentPoly::dense() const {
  if (is_zero()) return {};
  std::vector<Rational> out(static_cast<std::size_t>(span() + 1), Rational(0));
  const long low = low_degree();
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - low)] = c;
  return out;
}

LaurentPoly normalize(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  return detail::to_laurent(detail::primitive_part(detail::clear_laurent(p)));
}

bool is_normalized(const LaurentPoly& p) { return normalize(p) == p; }

bool unit_equal(const LaurentPoly& p, const LaurentPoly& q) { return normalize(p) == normalize(q); }

LaurentPoly gcd(const LaurentPoly& p, const LaurentPoly& q) {
  return detail::to_laurent(detail::gcd(detail::clear_laurent(p), detail::clear_laurent(q)));
}

bool coprime(const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly g = gcd(p, q);
  return !g.is_zero() && g.span() == 0;
}

bool divides(const LaurentPoly& d, const LaurentPoly& p) {
  if (d.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  auto a = detail::clear_laurent(p);
  auto b = detail::primitive_part(detail::clear_laurent(d));
  if (a.size() < b.size()) return false;
  return detail::pseudo_remainder(a, b).empty();
}

LaurentPoly exact_quotient(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return p;
  std::vector<Rational> r = p.dense();
  std::vector<Rational> b = d.dense();
  if (r.size() < b.size()) throw DomainError("exact_quotient: divisor does not divide");
  std::vector<Rational> q(r.size() - b.size() + 1, Rational(0));
  const std::size_t db = b.size() - 1;
  for (std::size_t i = r.size() - 1; i + 1 > db; --i) {
    if (r[i] != 0) {
      Rational c = r[i] / b.back();
      q[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= c * b[j];
    }
    if (i == 0) break;
  }
  for (const auto& x : r)
    if (x != 0) throw DomainError("exact_quotient: divisor does not divide");
  return LaurentPoly::from_coefficients(q, p.low_degree() - d.low_degree());
}

Rational resultant(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  return Rational(detail::resultant(detail::clear_laurent(p), detail::clear_laurent(q)));
}

LaurentPoly reciprocal(const LaurentPoly& p) { return normalize(substitute_power(p, -1)); }

LaurentPoly substitute_power(const LaurentPoly& p, long n) {
  if (n == 0) return LaurentPoly(augmentation(p));
  LaurentPoly::Terms out;
  for (const auto& [e, c] : p.terms()) out.emplace(e * n, c);
  return LaurentPoly::from_terms(std::move(out));
}

Rational augmentation(const LaurentPoly& p) {
  Rational s = 0;
  for (const auto& [e, c] : p.terms()) s += c;
  return s;
}

LaurentPoly power(const LaurentPoly& p, unsigned e) {
  LaurentPoly result(1L);
  LaurentPoly base = p;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

}  // namespace knotloc
