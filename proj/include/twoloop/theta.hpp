#pragma once

#include <array>
#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "twoloop/laurent.hpp"

namespace twoloop {

/// Representative (m, n) of an orbit of exponent triples on the three edges
/// of the theta graph; always 0 <= 2n <= m.
struct CanonicalPair {
  int m = 0;
  int n = 0;
  friend auto operator<=>(const CanonicalPair&, const CanonicalPair&) = default;
};

using ExponentTriple = std::array<int, 3>;

/// Number of automorphisms acting on exponent triples (edge permutations
/// times global inversion).
inline constexpr int kThetaGroupOrder = 12;

/// The index-th group element applied to a triple: index / 2 selects an edge
/// permutation, index % 2 selects inversion. Index 0 is the identity.
ExponentTriple apply_theta_automorphism(int index, const ExponentTriple& e);

/// Orbit representative of (m, n, k) under edge permutations, sliding by
/// (1, 1, 1) and global inversion.
CanonicalPair canonical_pair(int m, int n, int k);

/// Element of the 2-loop space in the theta basis. Coefficients live on the
/// numerators of the edge colourings once every edge is written over the
/// common denominator `denominator()` (the cleared form).
class ThetaElement {
 public:
  explicit ThetaElement(LaurentPoly denominator = LaurentPoly(1));

  /// coefficient * theta(t^m, t^n); (m, n) must already be canonical.
  static ThetaElement basis(int m, int n, const Rational& coefficient = 1,
                            const LaurentPoly& denominator = LaurentPoly(1));

  const std::map<CanonicalPair, Rational>& terms() const noexcept { return coeffs_; }
  const LaurentPoly& denominator() const noexcept { return denominator_; }
  Rational coefficient(int m, int n) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add_term(const CanonicalPair& key, const Rational& c);

  ThetaElement& operator+=(const ThetaElement& o);
  ThetaElement& operator-=(const ThetaElement& o);
  ThetaElement& operator*=(const Rational& c);
  ThetaElement operator-() const;
  friend ThetaElement operator+(ThetaElement a, const ThetaElement& b) { return a += b; }
  friend ThetaElement operator-(ThetaElement a, const ThetaElement& b) { return a -= b; }
  friend ThetaElement operator*(ThetaElement a, const Rational& c) { return a *= c; }
  friend ThetaElement operator*(const Rational& c, ThetaElement a) { return a *= c; }
  friend bool operator==(const ThetaElement&, const ThetaElement&) = default;

 private:
  void require_same_denominator(const ThetaElement& o) const;

  std::map<CanonicalPair, Rational> coeffs_;
  LaurentPoly denominator_;
};

/// Numerator colourings (P, Q, R) of theta(P/D, Q/D, R/D), all three edges
/// oriented from the first vertex to the second.
struct RawTriple {
  LaurentPoly p;
  LaurentPoly q;
  LaurentPoly r;
};

/// Trilinear expansion into canonical monomials.
ThetaElement from_theta(const RawTriple& x, const LaurentPoly& denominator = LaurentPoly(1));

/// The uncoloured theta graph, i.e. from_theta(D, D, D) over D.
ThetaElement theta_class(const LaurentPoly& denominator = LaurentPoly(1));

/// Numerator of the conjugate colour: conj(P/D) = result/D.
LaurentPoly conjugate_numerator(const LaurentPoly& p, const LaurentPoly& denominator);

/// Dumbbell with loop colours P/D and Q/D and central colour R/D, rewritten
/// through the IHX move as (R/D)(1) * theta(P/D, (conj Q - Q)/D, 1).
ThetaElement reduce_dumbbell(const LaurentPoly& p, const LaurentPoly& r, const LaurentPoly& q,
                             const LaurentPoly& denominator = LaurentPoly(1));

/// x rewritten over `denominator`, which must be +-t^k times the current
/// one. Each numerator picks up the unit, so coefficients change by its sign.
ThetaElement with_denominator(const ThetaElement& x, const LaurentPoly& denominator);

/// Largest m among the stored keys; throws DomainError on zero.
int degree(const ThetaElement& x);

/// Power series in two commuting variables a, b, truncated at total degree.
class BivariateSeries {
 public:
  explicit BivariateSeries(int truncation) : truncation_(truncation) {}

  int truncation() const noexcept { return truncation_; }
  const std::map<std::pair<int, int>, Rational>& terms() const noexcept { return coeffs_; }
  Rational coefficient(int i, int j) const;
  void add_term(int i, int j, const Rational& c);

  BivariateSeries& operator+=(const BivariateSeries& o);
  friend BivariateSeries operator*(const BivariateSeries& x, const BivariateSeries& y);
  friend bool operator==(const BivariateSeries&, const BivariateSeries&) = default;

  /// exp(alpha*a + beta*b) truncated.
  static BivariateSeries exponential(const Rational& alpha, const Rational& beta, int truncation);
  /// 1/x; the constant term must be nonzero.
  BivariateSeries inverse() const;

 private:
  int truncation_;
  std::map<std::pair<int, int>, Rational> coeffs_;
};

/// The substitution t -> exp(h): every canonical monomial goes to the sum of
/// exp(x*a + y*b) over its twelve images (x, y, 0), times the expansion of
/// 1/(D(e^a) D(e^b) D(e^(-a-b))) when the denominator is not 1.
BivariateSeries hair(const ThetaElement& x, int truncation);

/// True when k*x has integer coefficients, i.e. x lies in (1/k) of the
/// integer lattice.
bool in_lattice(const ThetaElement& x, const Integer& k);

/// True when x - alpha*Theta lies in (1/k) of the integer lattice for some
/// rational alpha, Theta the uncoloured theta graph.
bool in_lattice_mod_theta(const ThetaElement& x, const Integer& k);

/// Value at t = 1 as a multiple of the uncoloured theta graph.
Rational eval_t_one(const ThetaElement& x);

/// Reduction of an integral element mod 2 and modulo the uncoloured theta
/// class; coefficients of the result are 0 or 1 and the form is canonical.
ThetaElement mod2_mod_theta(const ThetaElement& x);

/// Text form: optional `denominator <poly>` line, then `m n coefficient`
/// lines sorted by (m, n). Blank lines and `#` comments are ignored.
ThetaElement parse_theta(std::string_view text);
std::string to_string(const ThetaElement& x);
std::ostream& operator<<(std::ostream& os, const ThetaElement& x);

}  // namespace twoloop
