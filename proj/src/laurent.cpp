#include "twoloop/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

#include "twoloop/errors.hpp"

namespace twoloop {

LaurentPoly::LaurentPoly(int c) {
  if (c != 0) terms_.emplace(0, Rational(c));
}

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw DomainError("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw DomainError("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second.get_den() == 1; });
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int r) const {
  if (r < 1) throw DomainError("substitute_power needs r >= 1");
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e * r, c);
  return out;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(exponent, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  Rational factor = c;
  factor.canonicalize();
  for (auto& kv : terms_) kv.second *= factor;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& kv : r.terms_) kv.second = -kv.second;
  return r;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return x.first < y.first;
                                        return x.second < y.second;
                                      });
}

LaurentPoly involute(const LaurentPoly& p) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
  return r;
}

Rational eval_one(const LaurentPoly& p) {
  Rational s = 0;
  for (const auto& kv : p.terms()) s += kv.second;
  return s;
}

Rational evaluate(const LaurentPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  if (x == 0) {
    if (p.min_exponent() < 0) throw DomainError("evaluating a negative power at 0");
    return p.coeff(0);
  }
  // Horner on t^min * q(t).
  Rational acc = 0;
  int prev = p.max_exponent();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (int k = it->first; k < prev; ++k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  Rational scale = 1;
  Rational base = prev >= 0 ? x : Rational(1) / x;
  for (int k = 0; k < std::abs(prev); ++k) scale *= base;
  return acc * scale;
}

Integer content(const LaurentPoly& p) {
  Integer g = 0;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw DomainError("content needs integer coefficients, got " + to_string(p));
    Integer a = abs(c.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  return g;
}

namespace {

// Ascending dense coefficients of t^-min * p.
std::vector<Rational> dense(const LaurentPoly& p) {
  std::vector<Rational> v(static_cast<std::size_t>(p.max_exponent() - p.min_exponent() + 1));
  for (const auto& [e, c] : p.terms()) v[static_cast<std::size_t>(e - p.min_exponent())] = c;
  return v;
}

}  // namespace

std::optional<LaurentPoly> exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw DomainError("division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly();
  std::vector<Rational> num = dense(p);
  const std::vector<Rational> den = dense(q);
  if (num.size() < den.size()) return std::nullopt;
  // Both have nonzero constant terms, so t never divides the divisor and the
  // ordinary long division decides divisibility in the Laurent ring.
  const std::size_t dq = den.size() - 1;
  std::vector<Rational> quot(num.size() - dq);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational c = num[k + dq] / den[dq];
    quot[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dq; ++j) num[k + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) return std::nullopt;
  LaurentPoly out;
  const int shift = p.min_exponent() - q.min_exponent();
  for (std::size_t k = 0; k < quot.size(); ++k) out.add_term(static_cast<int>(k) + shift, quot[k]);
  return out;
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const int lo = p.min_exponent();
  const int hi = p.max_exponent();
  // Centre the support: lowest exponent becomes -floor(span / 2).
  LaurentPoly r = p.shifted(-lo - (hi - lo) / 2);
  const Rational at_one = eval_one(r);
  const bool flip = at_one != 0 ? at_one < 0 : r.terms().rbegin()->second < 0;
  return flip ? -r : r;
}

LaurentPoly power_roots(const LaurentPoly& delta, int r) {
  if (r <= 0) throw DomainError("power_roots needs r >= 1");
  if (delta.is_zero()) throw DomainError("power_roots of the zero polynomial");
  // delta(s) = s^lo * d(s) with d an ordinary polynomial with d(0) != 0.
  const std::vector<Rational> d = dense(delta);
  const std::size_t deg = d.size() - 1;
  if (deg == 0) {
    Rational c = 1;
    for (int i = 0; i < r; ++i) c *= d[0];
    return normalize_unit(LaurentPoly(c));
  }
  // Sylvester matrix of d(s) (degree deg) and s^r - t (degree r), with
  // coefficients in Q[t]; rows ordered from the highest power of s.
  const std::size_t size = deg + static_cast<std::size_t>(r);
  LaurentMatrix syl(size);
  for (std::size_t row = 0; row < static_cast<std::size_t>(r); ++row)
    for (std::size_t j = 0; j <= deg; ++j) syl(row, row + j) = LaurentPoly(d[deg - j]);
  for (std::size_t row = 0; row < deg; ++row) {
    syl(r + row, row) = LaurentPoly(1);
    syl(r + row, row + static_cast<std::size_t>(r)) = -LaurentPoly::t(1);
  }
  return normalize_unit(determinant(syl));
}

Mod2Poly& Mod2Poly::operator+=(const Mod2Poly& o) {
  for (int e : o.support_) {
    auto it = support_.find(e);
    if (it == support_.end())
      support_.insert(e);
    else
      support_.erase(it);
  }
  return *this;
}

Mod2Poly operator*(const Mod2Poly& a, const Mod2Poly& b) {
  Mod2Poly r;
  for (int x : a.support_)
    for (int y : b.support_) r += Mod2Poly({x + y});
  return r;
}

Mod2Poly mod_two(const LaurentPoly& p) {
  std::set<int> s;
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() != 1) throw DomainError("mod_two needs integer coefficients, got " + to_string(p));
    if (mpz_odd_p(c.get_num_mpz_t())) s.insert(e);
  }
  return Mod2Poly(std::move(s));
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int line, int column_offset)
      : text_(text), line_(line), offset_(column_offset) {}

  LaurentPoly parse() {
    LaurentPoly result;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exponent, coeff] = term();
      result.add_term(exponent, sign * coeff);
      skip_ws();
    }
    return result;
  }

 private:
  std::pair<int, Rational> term() {
    Rational c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      c = rational();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 't') fail("expected 't' after '*'");
      }
    }
    if (!at_end() && peek() == 't') {
      ++pos_;
      skip_ws();
      int e = 1;
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = integer();
      }
      return {e, c};
    }
    if (!have_coeff) fail("expected a coefficient or 't'");
    return {0, c};
  }

  Rational rational() {
    std::string digits = unsigned_digits();
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::string den = unsigned_digits();
      if (Integer(den) == 0) fail("zero denominator");
      Rational q{Integer(digits), Integer(den)};
      q.canonicalize();
      return q;
    }
    return Rational(Integer(digits));
  }

  int integer() {
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    std::string digits = unsigned_digits();
    if (digits.size() > 9) fail("exponent out of range");
    return sign * std::stoi(digits);
  }

  std::string unsigned_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, offset_ + static_cast<int>(pos_) + 1, what);
  }

  std::string_view text_;
  int line_;
  int offset_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, int line, int column_offset) {
  return PolyParser(text, line, column_offset).parse();
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational a = abs(c);
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const Mod2Poly& p) {
  LaurentPoly q;
  for (int e : p.support()) q.add_term(e, 1);
  return to_string(q);
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// Matrices

LaurentMatrix::LaurentMatrix(std::initializer_list<std::initializer_list<LaurentPoly>> rows)
    : n_(rows.size()), entries_() {
  entries_.reserve(n_ * n_);
  for (const auto& row : rows) {
    if (row.size() != n_) throw DomainError("LaurentMatrix rows must form a square matrix");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
  LaurentMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool LaurentMatrix::is_hermitian() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if ((*this)(j, i) != involute((*this)(i, j))) return false;
  return true;
}

LaurentMatrix LaurentMatrix::minor(std::size_t row, std::size_t col) const {
  LaurentMatrix m(n_ - 1);
  for (std::size_t i = 0, ii = 0; i < n_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, jj = 0; j < n_; ++j) {
      if (j == col) continue;
      m(ii, jj++) = (*this)(i, j);
    }
    ++ii;
  }
  return m;
}

std::vector<std::vector<Rational>> LaurentMatrix::at_one() const {
  std::vector<std::vector<Rational>> out(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i][j] = eval_one((*this)(i, j));
  return out;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.n_ != b.n_) throw DomainError("matrix size mismatch");
  LaurentMatrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

LaurentPoly determinant(const LaurentMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return LaurentPoly(1);
  LaurentMatrix m = input;
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return LaurentPoly();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        auto q = exact_div(v, prev);
        if (!q) throw InvariantViolation("Bareiss step was not exact");
        m(i, j) = std::move(*q);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace twoloop
