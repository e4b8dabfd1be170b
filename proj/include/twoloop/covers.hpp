#pragma once

#include <functional>
#include <optional>

#include "twoloop/laurent.hpp"
#include "twoloop/theta.hpp"

namespace twoloop {

/// Arithmetic of the r-fold cyclic branched cover of a knot with Alexander
/// polynomial delta.
struct CoverData {
  LaurentPoly delta;
  int r = 1;
  LaurentPoly delta_r;
  /// P with delta_r(t^r) = P(t) * delta(t).
  LaurentPoly quotient;
  /// delta_r(1) = +-1, i.e. the cover is again an integer homology sphere.
  bool integer_homology_sphere = false;
  std::optional<Rational> sigma_r;
};

/// The polynomial with the r-th powers of the roots of delta, unit-normalised.
LaurentPoly cover_alexander(const LaurentPoly& delta, int r);

/// delta_r(t^r) / delta; throws InvariantViolation if the division is not
/// exact or the quotient is not integral.
LaurentPoly cover_quotient(const LaurentPoly& delta, int r);

/// Everything above at once. delta(1) must be +-1.
CoverData make_cover(const LaurentPoly& delta, int r, std::optional<Rational> sigma_r = std::nullopt);

/// Value at t = 1 of the lift of x to the r-fold cover.
using LiftStrategy = std::function<Rational(const ThetaElement& x, int r)>;

/// Rewrites every edge over delta_r(t^r) through the quotient, keeps the
/// monomials whose class is divisible by r, divides exponents by r and
/// evaluates at t = 1.
Rational default_lift_eval(const ThetaElement& x, int r);

struct CassonResidue {
  /// (sigma - sigma') / 8 + 2 * lift_eval(x).
  Rational lambda_difference;
  bool divisible = false;
};

/// Divisibility by r of the Casson difference of the two covers. x must lie
/// in the (1/2) integer lattice.
CassonResidue casson_residue(const ThetaElement& x, int r, const Rational& sigma = 0, const Rational& sigma_prime = 0,
                             const LiftStrategy& lift = default_lift_eval);

}  // namespace twoloop
