#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "twoloop/laurent.hpp"

namespace twoloop {

using Word = std::vector<int>;

/// Truncated formal power series in noncommuting generators 0..alphabet-1.
/// Coefficients are stored densely per degree; the word w1 w2 ... wd sits at
/// index w1*k^(d-1) + ... + wd for alphabet size k.
class NCSeries {
 public:
  static constexpr int kMaxAlphabet = 8;

  NCSeries(int alphabet, int truncation);

  static NCSeries constant(int alphabet, int truncation, const Rational& c);
  static NCSeries generator(int alphabet, int truncation, int letter, const Rational& c = 1);

  int alphabet() const noexcept { return alphabet_; }
  int truncation() const noexcept { return truncation_; }

  Rational coefficient(const Word& w) const;
  void set(const Word& w, const Rational& c);
  void add(const Word& w, const Rational& c);

  bool is_zero() const;
  /// Nonzero terms as (word, coefficient), by degree then lexicographically.
  std::vector<std::pair<Word, Rational>> terms() const;

  NCSeries& operator+=(const NCSeries& o);
  NCSeries& operator-=(const NCSeries& o);
  NCSeries& operator*=(const Rational& c);
  friend NCSeries operator+(NCSeries a, const NCSeries& b) { return a += b; }
  friend NCSeries operator-(NCSeries a, const NCSeries& b) { return a -= b; }
  friend NCSeries operator*(NCSeries a, const Rational& c) { return a *= c; }
  friend NCSeries operator*(const Rational& c, NCSeries a) { return a *= c; }
  NCSeries operator-() const;
  friend bool operator==(const NCSeries&, const NCSeries&) = default;

  /// Drop every term of degree > d.
  NCSeries truncated(int d) const;

 private:
  friend NCSeries nc_mul(const NCSeries& x, const NCSeries& y);
  void require_compatible(const NCSeries& o) const;
  std::size_t index(const Word& w) const;

  int alphabet_;
  int truncation_;
  std::vector<std::vector<Rational>> by_degree_;
};

NCSeries nc_mul(const NCSeries& x, const NCSeries& y);
/// exp(x); x must have zero constant term.
NCSeries nc_exp(const NCSeries& x);
/// log(x); x must have constant term 1.
NCSeries nc_log(const NCSeries& x);
/// xy - yx.
NCSeries bracket(const NCSeries& x, const NCSeries& y);

/// Image in the commutative quotient: coefficients summed over words with
/// the same letter multiset, keyed by the sorted word.
std::vector<std::pair<Word, Rational>> abelianize(const NCSeries& x);

/// log of exp(-b/2) P exp(a/2) P^-1 exp(b) P exp(-a) P^-1 exp(-b) P exp(a/2)
/// P^-1 exp(b/2), with P = exp(c [a, b]) at truncation 3.
NCSeries z_tangle_log(const Rational& associator_coefficient);

/// True iff the log above with c = 1/24 is exactly [a, b].
bool zt_identity_check();

/// The generalized Campbell-Hausdorff operator H(a_1, ..., a_p): the
/// exponential of the degree <= 3 Lie element with coefficients 1, 1/2, 1/6,
/// 1/6, 1/12, 1/12, truncated at degree d.
NCSeries bch_operator(int arity, int truncation);

/// exp(a_1) exp(a_2) ... exp(a_p).
NCSeries exp_product(int arity, int truncation);

std::string to_string(const NCSeries& x);

}  // namespace twoloop
