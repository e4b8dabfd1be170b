#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace twoloop {

using Rational = mpq_class;
using Integer = mpz_class;

/// Laurent polynomial in one variable t with arbitrary-precision rational
/// coefficients. Zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, int exponent);
  static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }

  const std::map<int, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coeff(int exponent) const;

  // Both require a nonzero polynomial.
  int min_exponent() const;
  int max_exponent() const;

  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept;
  bool is_integral() const;

  /// Multiply by t^k.
  LaurentPoly shifted(int k) const;
  /// P(t) -> P(t^r), r >= 1.
  LaurentPoly substitute_power(int r) const;

  void add_term(int exponent, const Rational& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Total order (by term list); only used for containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  std::map<int, Rational> terms_;
};

/// t^k -> t^-k. An algebra involution.
LaurentPoly involute(const LaurentPoly& p);

/// P(1).
Rational eval_one(const LaurentPoly& p);

/// P(x) for a rational x (x != 0 when P has negative exponents).
Rational evaluate(const LaurentPoly& p, const Rational& x);

/// gcd of the coefficients. content(0) == 0. Throws DomainError unless all
/// coefficients are integers.
Integer content(const LaurentPoly& p);

/// R with q*R == p, or nullopt when q does not divide p in Q[t, t^-1].
/// Throws DomainError when q == 0.
std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q);

/// Multiply by the unit +-t^k that makes p centred (symmetric when that is
/// possible) and positive at t = 1 (leading coefficient positive if p(1) = 0).
LaurentPoly normalize_unit(const LaurentPoly& p);

/// The polynomial whose roots are the r-th powers of the roots of delta,
/// computed as Res_s(delta(s), s^r - t) and passed through normalize_unit.
LaurentPoly power_roots(const LaurentPoly& delta, int r);

/// Laurent polynomial over Z/2, stored as its support.
class Mod2Poly {
 public:
  Mod2Poly() = default;
  explicit Mod2Poly(std::set<int> support) : support_(std::move(support)) {}

  const std::set<int>& support() const noexcept { return support_; }
  bool is_zero() const noexcept { return support_.empty(); }

  Mod2Poly& operator+=(const Mod2Poly& o);
  friend Mod2Poly operator+(Mod2Poly a, const Mod2Poly& b) { return a += b; }
  friend Mod2Poly operator*(const Mod2Poly& a, const Mod2Poly& b);
  friend bool operator==(const Mod2Poly&, const Mod2Poly&) = default;

 private:
  std::set<int> support_;
};

/// Coefficientwise reduction mod 2; rejects non-integral input.
Mod2Poly mod_two(const LaurentPoly& p);

/// Text form: signed terms such as `c*t^k`, `c`, `t^k`, `t`, `2t`; e.g.
/// `t^-1 - 1 + t` or `-1/2*t^3 + 4`. Throws ParseError (line is `line`).
LaurentPoly parse_laurent(std::string_view text, int line = 1, int column_offset = 0);
std::string to_string(const LaurentPoly& p);
std::string to_string(const Mod2Poly& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

/// Square matrix of Laurent polynomials, row-major.
class LaurentMatrix {
 public:
  LaurentMatrix() = default;
  explicit LaurentMatrix(std::size_t n) : n_(n), entries_(n * n) {}
  LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows);

  static LaurentMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  LaurentPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  bool is_hermitian() const;
  LaurentMatrix minor(std::size_t row, std::size_t col) const;
  /// Entrywise evaluation at t = 1.
  std::vector<std::vector<Rational>> at_one() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<LaurentPoly> entries_;
};

/// Fraction-free (Bareiss) determinant; exact over Q[t, t^-1].
LaurentPoly determinant(const LaurentMatrix& m);

/// Exact determinant of a rational matrix.
Rational determinant(std::vector<std::vector<Rational>> m);

}  // namespace twoloop
