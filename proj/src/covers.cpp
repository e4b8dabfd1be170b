#include "twoloop/covers.hpp"

#include "twoloop/errors.hpp"

namespace twoloop {

namespace {

void require_unit_at_one(const LaurentPoly& delta) {
  const Rational d1 = eval_one(delta);
  if (d1 != 1 && d1 != -1) throw DomainError("Alexander polynomial must be +-1 at t = 1");
}

}  // namespace

LaurentPoly cover_alexander(const LaurentPoly& delta, int r) {
  if (r <= 0) throw DomainError("cover degree r must be positive");
  require_unit_at_one(delta);
  return power_roots(delta, r);
}

LaurentPoly cover_quotient(const LaurentPoly& delta, int r) {
  const LaurentPoly delta_r = cover_alexander(delta, r);
  auto q = exact_div(delta_r.substitute_power(r), delta);
  if (!q) throw InvariantViolation("delta does not divide delta_r(t^r)");
  if (!q->is_integral()) throw InvariantViolation("cover quotient has non-integer coefficients");
  return *q;
}

CoverData make_cover(const LaurentPoly& delta, int r, std::optional<Rational> sigma_r) {
  CoverData c;
  c.delta = delta;
  c.r = r;
  c.delta_r = cover_alexander(delta, r);
  c.quotient = cover_quotient(delta, r);
  const Rational e = eval_one(c.delta_r);
  c.integer_homology_sphere = e == 1 || e == -1;
  c.sigma_r = sigma_r;
  return c;
}

Rational default_lift_eval(const ThetaElement& x, int r) {
  if (r <= 0) throw DomainError("cover degree r must be positive");
  const LaurentPoly& delta = x.denominator();
  LaurentPoly p(1), delta_r(1);
  if (delta != LaurentPoly(1)) {
    p = cover_quotient(delta, r);
    delta_r = cover_alexander(delta, r);
  }
  ThetaElement lifted(delta_r);
  for (const auto& [key, c] : x.terms()) {
    const RawTriple triple{LaurentPoly::t(key.m) * p, LaurentPoly::t(key.n) * p, p};
    for (const auto& [a, ca] : triple.p.terms())
      for (const auto& [b, cb] : triple.q.terms())
        for (const auto& [k, ck] : triple.r.terms()) {
          if ((a - k) % r != 0 || (b - k) % r != 0) continue;
          lifted.add_term(canonical_pair((a - k) / r, (b - k) / r, 0), c * ca * cb * ck);
        }
  }
  return eval_t_one(lifted);
}

CassonResidue casson_residue(const ThetaElement& x, int r, const Rational& sigma, const Rational& sigma_prime,
                             const LiftStrategy& lift) {
  if (r <= 0) throw DomainError("cover degree r must be positive");
  if (!in_lattice(x, 2)) throw DomainError("difference must lie in the (1/2) integer lattice");
  CassonResidue out;
  out.lambda_difference = (sigma - sigma_prime) / 8 + 2 * lift(x, r);
  out.divisible = out.lambda_difference.get_den() == 1 &&
                  mpz_divisible_ui_p(out.lambda_difference.get_num_mpz_t(), static_cast<unsigned long>(r)) != 0;
  return out;
}

}  // namespace twoloop
