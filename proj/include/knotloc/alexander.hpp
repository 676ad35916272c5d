#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotloc/isogeny.hpp"
#include "knotloc/laurent.hpp"
#include "knotloc/seifert.hpp"

namespace knotloc {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Q[t,t^-1]/<order>. Modules built from a Seifert matrix keep the presentation
/// V - tV^T; `cyclic` is false when that presentation is not cyclic, in which
/// case only divisor-lattice operations on the order make sense.
struct CyclicModule {
  LaurentPoly order;
  bool cyclic = true;
  PolyMatrix presentation;
};

/// Validates and normalizes an abstract cyclic module.
CyclicModule make_module(const LaurentPoly& order);
CyclicModule module_from_knot(const SeifertMatrix& V);
/// Largest order of an element of the Alexander module of V: Delta divided by
/// the gcd of the (n-1)-minors of V - tV^T. Equals Delta iff the module is cyclic.
LaurentPoly module_exponent(const SeifertMatrix& V);

struct Submodule {
  enum class Label { P0, Pplus, Pminus, Full, Other };
  LaurentPoly generator;  // <generator> inside Q[t,t^-1]/<order>
  Label label = Label::Other;
};

std::string to_string(Submodule::Label l);

/// Order d*d' with d irreducible and d' = reciprocal(d) not a unit multiple of d:
/// {P0, <d>, <d'>}. Otherwise every divisor of the order, labelled P0/Full/Other
/// for squarefree orders and Other throughout for orders with repeated factors.
std::vector<Submodule> proper_submodules(const CyclicModule& M);

/// Class of numerator/denominator in Q(t)/Q[t,t^-1]. Canonical: the denominator
/// is normalized, the numerator is an ordinary polynomial of smaller degree, and
/// the zero class has numerator 0 and denominator 1.
struct FractionClass {
  LaurentPoly numerator;
  LaurentPoly denominator{1};
  bool is_zero() const { return numerator.is_zero(); }
  std::string to_string() const;
  friend bool operator==(const FractionClass&, const FractionClass&) = default;
};

FractionClass reduce_fraction(const LaurentPoly& numerator, const LaurentPoly& denominator);
/// m * c, reduced.
FractionClass scale(const FractionClass& c, const LaurentPoly& m);
/// Image under t -> t^-1.
FractionClass conjugate(const FractionClass& c);

/// Blanchfield form Bl(x, y) = (1-t) conj(x)^T (V - tV^T)^-1 y on the module
/// Q[t,t^-1]^2g / (V - tV^T). Conjugate-linear in x, linear in y, Hermitian.
class BlanchfieldPairing {
 public:
  explicit BlanchfieldPairing(const SeifertMatrix& V);

  const SeifertMatrix& source() const { return v_; }
  /// Normalized Alexander polynomial.
  const LaurentPoly& order() const { return order_; }
  /// A vector generating the module, when it is cyclic.
  const std::optional<std::vector<LaurentPoly>>& generator() const { return generator_; }

  FractionClass pair(const std::vector<LaurentPoly>& x, const std::vector<LaurentPoly>& y) const;
  /// Pairing of f*g0 and h*g0 for the generator g0; requires a cyclic module.
  FractionClass pair(const LaurentPoly& f, const LaurentPoly& h) const;
  /// Annihilator of the class of x.
  LaurentPoly vector_order(const std::vector<LaurentPoly>& x) const;

 private:
  SeifertMatrix v_;
  PolyMatrix adjugate_;  // of V - tV^T
  LaurentPoly det_;      // det(V - tV^T), not normalized
  LaurentPoly order_;
  std::optional<std::vector<LaurentPoly>> generator_;
};

BlanchfieldPairing blanchfield(const SeifertMatrix& V);

/// True iff Bl vanishes on P x P, checked on the cyclic generator of P.
bool isotropic(const Submodule& P, const BlanchfieldPairing& B);

/// Isotropy read off the submodule label when no Seifert matrix is available:
/// in the d*d' pattern the zero module and both <d>, <d'> are isotropic.
/// Returns nullopt for labels the pattern says nothing about.
std::optional<bool> isotropic_by_pattern(const Submodule& P, const CyclicModule& M);

/// order / gcd(order, x): the annihilator of [x]; 1 when x is zero in M.
LaurentPoly element_order(const CyclicModule& M, const LaurentPoly& x);

struct LocalizationVerdict {
  enum class Status { Torsion, TorsionFree, Mixed };
  enum class Mode { ClassicalCoprime, StrongCoprime };
  Status status;
  Mode mode;
  LaurentPoly survivor;              // order of the localized module
  std::vector<LaurentPoly> killed;   // prime-power factors r^e that die
  bool exact = true;
};

std::string to_string(LocalizationVerdict::Status s);
std::string to_string(LocalizationVerdict::Mode m);

/// Localization of M at p, decided factor by factor. A prime factor r dies when
/// r(1) != 0 and (classical) gcd(r, p) = 1 or gcd(reciprocal(r), p) = 1, or
/// (strong) r is strongly coprime to p.
LocalizationVerdict localize(const CyclicModule& M, const LaurentPoly& p, LocalizationVerdict::Mode mode,
                             long bound = kDefaultIsogenyBound);

/// True iff M -> M localized at p (strong mode) is injective.
bool localized_injects(const CyclicModule& M, const LaurentPoly& p, long bound = kDefaultIsogenyBound);

}  // namespace knotloc
