#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knotloc/laurent.hpp"

namespace knotloc {

/// Where the roots of an irreducible polynomial live. All roots of an
/// irreducible polynomial share one class, so a single value describes them.
struct RootClass {
  enum class Kind { RationalRoot, RootOfUnity, GeneralAlgebraic };
  Kind kind;
  Rational value;             // RationalRoot
  unsigned order = 0;         // RootOfUnity (t-1 has order 1, t+1 order 2)
  LaurentPoly minimal_polynomial;
};

RootClass classify_roots(const LaurentPoly& f);

struct Witness {
  long n;
  long k;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Dependence {
  bool dependent;
  long k = 0;  // r^k = s^n
  long n = 0;
};

Dependence rationals_multiplicatively_dependent(const Rational& r, const Rational& s);

struct IsogenyVerdict {
  enum class Status { StronglyCoprime, Isogenous };
  Status status;
  bool exact = true;
  std::optional<Witness> witness;  // gcd(p(t^n), q(t^k)) != 1
  std::optional<long> bound;       // set when the bounded sweep was used

  bool strongly_coprime() const { return status == Status::StronglyCoprime; }
  bool isogenous() const { return status == Status::Isogenous; }
};

inline constexpr long kDefaultIsogenyBound = 12;

IsogenyVerdict strongly_coprime(const LaurentPoly& p, const LaurentPoly& q, long bound = kDefaultIsogenyBound);

/// gcd(p(t^n), q(t^k)) != 1, computed exactly (negative exponents allowed).
bool shares_root_after_substitution(const LaurentPoly& p, const LaurentPoly& q, long n, long k);

using PolySequence = std::vector<LaurentPoly>;

/// Parses "p:<poly>;p:<poly>;..." (entries outermost-first).
PolySequence parse_sequence(std::string_view text);
std::string format_sequence(const PolySequence& s);

struct TupleVerdict {
  enum class Mode { PlainCoprime, Strong };
  bool strongly_coprime = false;
  std::size_t index = 0;  // 1-based qualifying index
  Mode mode = Mode::PlainCoprime;
  bool exact = true;
  std::vector<IsogenyVerdict> entries;  // per-index verdicts for indices > 1 (index 1 entry unused)
};

/// Positional comparison: index 1 needs plain coprimality, index k > 1 strong coprimality.
TupleVerdict tuple_strongly_coprime(const PolySequence& P, const PolySequence& Q, long bound = kDefaultIsogenyBound);

/// p_k(t) = (kt - (k+1))((k+1)t - k), canonical.
LaurentPoly standard_member(unsigned k);
std::vector<LaurentPoly> standard_family(unsigned kmax);

enum class LogHint { Sufficient, NotSufficient, NotApplicable };

/// Rational-root cross-check: Sufficient when the prime-exponent vectors of the
/// roots of p and of q span subspaces meeting only in zero.
LogHint log_independence_hint(const LaurentPoly& p, const LaurentPoly& q);

std::string to_string(LogHint h);

}  // namespace knotloc
