#pragma once

// Polynomials over Z/pZ for word-sized primes p < 2^62, ascending coefficients.

#include <cstdint>
#include <vector>

#include "zpoly.hpp"

namespace knotloc::detail {

using u64 = std::uint64_t;
using PPoly = std::vector<u64>;

struct ModP {
  u64 p;

  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const Integer& z) const;

  PPoly from(const ZPoly& f) const;
  void trim(PPoly& f) const;
  PPoly add(const PPoly& a, const PPoly& b) const;
  PPoly sub(const PPoly& a, const PPoly& b) const;
  PPoly mul(const PPoly& a, const PPoly& b) const;
  PPoly scale(const PPoly& a, u64 c) const;
  PPoly monic(const PPoly& a) const;
  // a = q*b + r with deg r < deg b
  void divmod(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r) const;
  PPoly rem(const PPoly& a, const PPoly& b) const;
  PPoly gcd(PPoly a, PPoly b) const;  // monic
  // s*a + t*b = g (monic gcd)
  PPoly xgcd(const PPoly& a, const PPoly& b, PPoly& s, PPoly& t) const;
  PPoly derivative(const PPoly& a) const;
  PPoly powmod(const PPoly& base, u64 e, const PPoly& m) const;
  u64 resultant(PPoly a, PPoly b) const;
};

inline int pdegree(const PPoly& f) { return static_cast<int>(f.size()) - 1; }

/// Complete factorization of a monic square-free polynomial into monic irreducibles.
std::vector<PPoly> berlekamp(const ModP& F, const PPoly& f);

bool is_prime(u64 n);

}  // namespace knotloc::detail
