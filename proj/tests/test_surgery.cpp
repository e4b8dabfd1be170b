#include <doctest.h>

#include <random>

#include "twoloop/errors.hpp"
#include "twoloop/surgery.hpp"

using namespace twoloop;

namespace {

// Hermitian 3x3 numerators with integer coefficients; diagonal entries are
// made symmetric so that they equal their own conjugates.
LaurentMatrix random_integer_pairing(std::mt19937& rng) {
  auto entry = [&] {
    LaurentPoly p;
    for (int k = 0; k < 2; ++k) p.add_term(static_cast<int>(rng() % 5) - 2, static_cast<int>(rng() % 5) - 2);
    return p;
  };
  LaurentMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i) {
    const LaurentPoly d = entry();
    m(i, i) = d + involute(d);
    for (std::size_t j = i + 1; j < 3; ++j) {
      m(i, j) = entry();
      m(j, i) = involute(m(i, j));
    }
  }
  return m;
}

ThetaElement random_half_integral(std::mt19937& rng, const LaurentPoly& d) {
  ThetaElement x(d);
  for (int k = 0; k < 4; ++k) {
    const int m = static_cast<int>(rng() % 6);
    const int n = static_cast<int>(rng() % static_cast<unsigned>(m / 2 + 1));
    x.add_term({m, n}, Rational(static_cast<int>(rng() % 7) - 3, 2));
  }
  return x;
}

}  // namespace

TEST_CASE("zero pairing") {
  const ClasperData c{PairingMatrix(LaurentMatrix(3), 1), ThetaElement()};
  CHECK(pairing_contraction(c).is_zero());
  CHECK(surgery_delta(c).is_zero());

  const ThetaElement mu = ThetaElement::basis(3, 1, Rational(1, 2)) + ThetaElement::basis(0, 0, 2);
  const ClasperData with_mu{PairingMatrix(LaurentMatrix(3), 1), mu};
  CHECK(surgery_delta(with_mu) == mu);
}

TEST_CASE("identity pairing regression") {
  const ClasperData c{PairingMatrix(LaurentMatrix::identity(3), 1), ThetaElement()};
  CHECK(pairing_contraction(c) == theta_class());
  CHECK(surgery_delta(c) == theta_class() * Rational(1, 2));
}

TEST_CASE("rejects the wrong size") {
  const ClasperData c{PairingMatrix(LaurentMatrix::identity(2), 1), ThetaElement()};
  CHECK_THROWS_AS(pairing_contraction(c), DomainError);
}

TEST_CASE("linear in mu and cubic in the pairing") {
  const LaurentPoly d = parse_laurent("t^-1 - 3 + t");
  std::mt19937 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    const LaurentMatrix m = random_integer_pairing(rng);
    const ThetaElement mu1 = random_half_integral(rng, d), mu2 = random_half_integral(rng, d);
    const ClasperData c{PairingMatrix(m, d), ThetaElement(d)};
    const ThetaElement base = surgery_delta(c);

    const ClasperData c1{PairingMatrix(m, d), mu1}, c2{PairingMatrix(m, d), mu2}, c12{PairingMatrix(m, d), mu1 + mu2};
    CHECK(surgery_delta(c12) - base == (surgery_delta(c1) - base) + (surgery_delta(c2) - base));
    CHECK(surgery_delta(c1) == base + mu1);

    const int s = 2 + static_cast<int>(rng() % 3);
    LaurentMatrix scaled = m;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) scaled(i, j) = m(i, j) * Rational(s);
    const ClasperData cs{PairingMatrix(scaled, d), ThetaElement(d)};
    CHECK(pairing_contraction(cs) == pairing_contraction(c) * Rational(s * s * s));
  }
}

TEST_CASE("integer data stays in the half lattice") {
  std::mt19937 rng(23);
  for (const char* text : {"1", "t^-1 - 1 + t", "t^-1 - 3 + t", "-t^-1 + 3 - t"}) {
    const LaurentPoly d = parse_laurent(text);
    for (int trial = 0; trial < 30; ++trial) {
      const ClasperData c{PairingMatrix(random_integer_pairing(rng), d), random_half_integral(rng, d)};
      CHECK(in_lattice(pairing_contraction(c), 1));
      CHECK(in_lattice(surgery_delta(c), 2));
    }
  }
}
