#include <doctest.h>

#include <random>

#include "twoloop/covers.hpp"
#include "twoloop/errors.hpp"

using namespace twoloop;

namespace {

// Symmetric Laurent polynomial of span <= 2 * half_span with value 1 at t = 1.
LaurentPoly random_alexander(std::mt19937& rng, int half_span) {
  LaurentPoly d;
  int tail = 0;
  for (int k = 1; k <= half_span; ++k) {
    const int c = static_cast<int>(rng() % 7) - 3;
    d.add_term(k, c);
    d.add_term(-k, c);
    tail += 2 * c;
  }
  d.add_term(0, 1 - tail);
  return d;
}

}  // namespace

TEST_CASE("cover Alexander polynomial") {
  const LaurentPoly trefoil = parse_laurent("t^-1 - 1 + t");
  CHECK(cover_alexander(LaurentPoly(1), 3) == LaurentPoly(1));
  CHECK(cover_alexander(trefoil, 1) == trefoil);
  CHECK(cover_alexander(trefoil, 2) == parse_laurent("t^-1 + 1 + t"));
  CHECK(cover_alexander(trefoil, 6) == parse_laurent("t^-1 - 2 + t"));
  CHECK_THROWS_AS(cover_alexander(trefoil, 0), DomainError);
  CHECK_THROWS_AS(cover_alexander(parse_laurent("t^-1 + 1 + t"), 2), DomainError);
  CHECK(cover_alexander(parse_laurent("t^-1 - 3 + t"), 1) == parse_laurent("-t^-1 + 3 - t"));
}

TEST_CASE("cover quotient") {
  const LaurentPoly trefoil = parse_laurent("t^-1 - 1 + t");
  CHECK(cover_quotient(LaurentPoly(1), 4) == LaurentPoly(1));
  const LaurentPoly p = cover_quotient(trefoil, 2);
  CHECK(p * trefoil == parse_laurent("t^-1 + 1 + t").substitute_power(2));
  CHECK(p == parse_laurent("t^-1 + 1 + t"));

  std::mt19937 rng(2718);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const LaurentPoly d = random_alexander(rng, 1 + static_cast<int>(rng() % 3));
    const int r = 1 + static_cast<int>(rng() % 5);
    const LaurentPoly q = cover_quotient(d, r);
    CHECK(q.is_integral());
    CHECK(q * d == cover_alexander(d, r).substitute_power(r));
    ++checked;
  }
  CHECK(checked == 300);
}

TEST_CASE("cover data") {
  const LaurentPoly trefoil = parse_laurent("t^-1 - 1 + t");
  const CoverData two = make_cover(trefoil, 2, Rational(-2));
  CHECK(two.delta_r == parse_laurent("t^-1 + 1 + t"));
  CHECK_FALSE(two.integer_homology_sphere);
  REQUIRE(two.sigma_r.has_value());
  CHECK(*two.sigma_r == -2);

  const LaurentPoly fig8 = parse_laurent("-t^-1 + 3 - t");
  const CoverData five = make_cover(fig8, 5);
  CHECK(five.r == 5);
  CHECK_FALSE(five.sigma_r.has_value());
  CHECK(five.quotient * fig8 == five.delta_r.substitute_power(5));

  // Sixth roots of unity cubed are -1: the 3-fold cover of the trefoil has
  // delta_3(1) = 4, the 5-fold one is again a homology sphere.
  CHECK_FALSE(make_cover(trefoil, 3).integer_homology_sphere);
  CHECK(make_cover(trefoil, 5).integer_homology_sphere);
}

TEST_CASE("default lift") {
  CHECK(default_lift_eval(ThetaElement(), 3) == 0);
  const ThetaElement x = ThetaElement::basis(2, 0, Rational(1, 2)) + ThetaElement::basis(3, 1, Rational(1, 2)) +
                         ThetaElement::basis(4, 2, 1);
  // r = 1 keeps everything.
  CHECK(default_lift_eval(x, 1) == eval_t_one(x));
  // r = 2 keeps (2, 0) and (4, 2).
  CHECK(default_lift_eval(x, 2) == Rational(3, 2));
  // r = 3 keeps nothing.
  CHECK(default_lift_eval(x, 3) == 0);
  CHECK_THROWS_AS(default_lift_eval(x, 0), DomainError);

  const LaurentPoly trefoil = parse_laurent("t^-1 - 1 + t");
  CHECK(default_lift_eval(theta_class(trefoil), 1) == 1);
}

TEST_CASE("Casson residue") {
  for (int r = 1; r <= 5; ++r) CHECK(casson_residue(ThetaElement(), r).divisible);

  const ThetaElement x = ThetaElement::basis(2, 0, Rational(1, 2)) + ThetaElement::basis(3, 1, Rational(1, 2));
  const CassonResidue two = casson_residue(x, 2);
  CHECK(two.lambda_difference == 1);
  CHECK_FALSE(two.divisible);
  CHECK(casson_residue(x, 1).divisible);
  CHECK(casson_residue(x, 2, 8, 0).lambda_difference == 2);
  CHECK(casson_residue(x, 2, 8, 0).divisible);

  auto constant_lift = [](const ThetaElement&, int) { return Rational(3, 2); };
  const CassonResidue custom = casson_residue(x, 3, 0, 0, constant_lift);
  CHECK(custom.lambda_difference == 3);
  CHECK(custom.divisible);

  CHECK_THROWS_AS(casson_residue(ThetaElement::basis(1, 0, Rational(1, 3)), 2), DomainError);
  CHECK_THROWS_AS(casson_residue(x, 0), DomainError);
}
