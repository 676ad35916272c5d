#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotloc/laurent.hpp"

namespace knotloc {

using IntMatrix = std::vector<std::vector<long>>;

/// Integer Seifert matrix V of a knot. Validated on construction: square, even
/// size, and V - V^T unimodular. The empty matrix is the unknot.
class SeifertMatrix {
 public:
  SeifertMatrix() = default;
  explicit SeifertMatrix(IntMatrix entries, std::string name = "");

  std::size_t size() const noexcept { return v_.size(); }
  std::size_t genus() const noexcept { return v_.size() / 2; }
  long at(std::size_t i, std::size_t j) const { return v_[i][j]; }
  const IntMatrix& entries() const noexcept { return v_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) { return a.v_ == b.v_; }

 private:
  IntMatrix v_;
  std::string name_;
};

namespace knots {
SeifertMatrix unknot();
SeifertMatrix right_trefoil();
SeifertMatrix figure_eight();
/// Torus knot T(2,5): -1 on the diagonal, 1 just above it.
SeifertMatrix cinquefoil();
/// Genus-one ribbon pattern with Alexander polynomial (kt-(k+1))((k+1)t-k).
SeifertMatrix ribbon(unsigned k);
/// Arf-zero knot with Alexander polynomial 2t^2-3t+2 and unit-circle roots off the roots of unity.
SeifertMatrix twisted_base();
}  // namespace knots

/// normalize(det(V - t V^T)).
LaurentPoly alexander_poly(const SeifertMatrix& V);

/// Signature of (1-w)V + (1-conj w)V^T for the unit complex w with w + conj(w) = x,
/// -2 < x < 2, evaluated exactly over Q. Returns 0 on a jump (singular form is
/// not an error here; callers that care use the profile).
int signature_at_trace(const SeifertMatrix& V, const Rational& x);

/// One root e^(i theta) of the Alexander polynomial on the upper unit semicircle.
struct JumpPoint {
  LaurentPoly factor;                      // irreducible factor of the Alexander polynomial it is a root of
  Rational x_lo, x_hi;                     // 2cos(theta) lies in [x_lo, x_hi]; equal when exact
  std::optional<Rational> theta_over_pi;   // exact when the factor is cyclotomic
};

struct SignatureArc {
  int signature;
  Rational sample_x;  // 2cos(theta) at the point where the signature was evaluated
};

/// Step function theta -> signature on (0, pi). arcs.size() == jumps.size() + 1;
/// arc i lies between jump i-1 and jump i (jumps ordered by increasing theta).
struct SignatureProfile {
  std::vector<JumpPoint> jumps;
  std::vector<SignatureArc> arcs;
};

SignatureProfile signature_profile(const SeifertMatrix& V);

/// Levine-Tristram signature at theta = r*pi, 0 < r < 1. Throws DomainError when
/// e^(i theta) is a root of the Alexander polynomial.
int signature_at(const SeifertMatrix& V, const Rational& theta_over_pi);

/// theta/pi of a jump point as a decimal string with `digits` digits after the point.
std::string jump_theta_over_pi(const JumpPoint& j, unsigned digits);

/// Average of the signature function over the circle (total measure 1).
struct Rho0Value {
  SignatureProfile profile;
  std::string numeric;            // fixed-point decimal with `precision` digits after the point
  unsigned precision = 0;
  std::optional<Rational> exact;  // present when every jump is at a root of unity
  double approx() const;
};

inline constexpr unsigned kDefaultPrecision = 30;

Rho0Value rho0(const SeifertMatrix& V, unsigned precision = kDefaultPrecision);

int arf(const SeifertMatrix& V);

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
SeifertMatrix mirror(const SeifertMatrix& V);

/// CSV rows "theta_start,theta_end,signature" with theta in radians.
std::string profile_csv(const SignatureProfile& p, unsigned digits);

/// Self-contained SVG step plot of the signature function on [0, pi].
std::string profile_svg(const SignatureProfile& p, const std::string& title);

}  // namespace knotloc
