#include "twoloop/theta.hpp"

#include <algorithm>
#include <sstream>

#include "twoloop/errors.hpp"

namespace twoloop {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPermutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

}  // namespace

ExponentTriple apply_theta_automorphism(int index, const ExponentTriple& e) {
  if (index < 0 || index >= kThetaGroupOrder) throw DomainError("theta automorphism index out of range");
  const auto& perm = kPermutations[static_cast<std::size_t>(index / 2)];
  const int sign = index % 2 == 0 ? 1 : -1;
  return {sign * e[perm[0]], sign * e[perm[1]], sign * e[perm[2]]};
}

CanonicalPair canonical_pair(int m, int n, int k) {
  const ExponentTriple e{m, n, k};
  CanonicalPair found;
  bool have = false;
  for (int g = 0; g < kThetaGroupOrder; ++g) {
    const ExponentTriple v = apply_theta_automorphism(g, e);
    const int a = v[0] - v[2];
    const int b = v[1] - v[2];
    if (b < 0 || 2 * b > a) continue;
    const CanonicalPair cand{a, b};
    if (have && cand != found)
      throw InvariantViolation("two canonical representatives in one theta orbit");
    found = cand;
    have = true;
  }
  if (!have) throw InvariantViolation("theta orbit without canonical representative");
  return found;
}

// ---------------------------------------------------------------------------

ThetaElement::ThetaElement(LaurentPoly denominator) : denominator_(std::move(denominator)) {
  if (denominator_.is_zero()) throw DomainError("theta element with zero denominator");
}

ThetaElement ThetaElement::basis(int m, int n, const Rational& coefficient, const LaurentPoly& denominator) {
  if (n < 0 || 2 * n > m) throw DomainError("basis key must satisfy 0 <= 2n <= m");
  ThetaElement x(denominator);
  x.add_term({m, n}, coefficient);
  return x;
}

Rational ThetaElement::coefficient(int m, int n) const {
  auto it = coeffs_.find({m, n});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void ThetaElement::add_term(const CanonicalPair& key, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = coeffs_.try_emplace(key, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void ThetaElement::require_same_denominator(const ThetaElement& o) const {
  if (denominator_ != o.denominator_)
    throw DomainError("theta elements over different denominators: " + to_string(denominator_) + " vs " +
                      to_string(o.denominator_));
}

ThetaElement& ThetaElement::operator+=(const ThetaElement& o) {
  require_same_denominator(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

ThetaElement& ThetaElement::operator-=(const ThetaElement& o) {
  require_same_denominator(o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
  return *this;
}

ThetaElement& ThetaElement::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  Rational factor = c;
  factor.canonicalize();
  for (auto& kv : coeffs_) kv.second *= factor;
  return *this;
}

ThetaElement ThetaElement::operator-() const {
  ThetaElement r = *this;
  return r *= -1;
}

// ---------------------------------------------------------------------------

ThetaElement from_theta(const RawTriple& x, const LaurentPoly& denominator) {
  ThetaElement out(denominator);
  for (const auto& [a, ca] : x.p.terms())
    for (const auto& [b, cb] : x.q.terms())
      for (const auto& [c, cc] : x.r.terms()) out.add_term(canonical_pair(a, b, c), ca * cb * cc);
  return out;
}

ThetaElement theta_class(const LaurentPoly& denominator) {
  return from_theta({denominator, denominator, denominator}, denominator);
}

LaurentPoly conjugate_numerator(const LaurentPoly& p, const LaurentPoly& denominator) {
  const LaurentPoly dbar = involute(denominator);
  if (dbar == denominator) return involute(p);
  auto q = exact_div(involute(p) * denominator, dbar);
  if (!q) throw DomainError("denominator " + to_string(denominator) + " is not symmetric up to a unit");
  return *q;
}

ThetaElement reduce_dumbbell(const LaurentPoly& p, const LaurentPoly& r, const LaurentPoly& q,
                             const LaurentPoly& denominator) {
  const Rational d1 = eval_one(denominator);
  if (d1 == 0) throw DomainError("dumbbell reduction needs a denominator nonzero at t = 1");
  // Only the constant part of the central colour survives sliding.
  const Rational central = eval_one(r) / d1;
  ThetaElement out(denominator);
  if (central == 0) return out;
  out = from_theta({p, conjugate_numerator(q, denominator) - q, denominator}, denominator);
  return out *= central;
}

ThetaElement with_denominator(const ThetaElement& x, const LaurentPoly& denominator) {
  if (denominator == x.denominator()) return x;
  const auto unit = exact_div(denominator, x.denominator());
  if (!unit || !unit->is_monomial() || (unit->terms().begin()->second != 1 && unit->terms().begin()->second != -1))
    throw DomainError("denominators " + to_string(x.denominator()) + " and " + to_string(denominator) +
                      " do not differ by a unit");
  // Sliding absorbs t^k on all three edges; the sign appears three times.
  const Rational sign = unit->terms().begin()->second;
  ThetaElement out(denominator);
  for (const auto& [key, c] : x.terms()) out.add_term(key, c * sign);
  return out;
}

int degree(const ThetaElement& x) {
  if (x.is_zero()) throw DomainError("degree of the zero theta element is undefined");
  int m = 0;
  for (const auto& kv : x.terms()) m = std::max(m, kv.first.m);
  return m;
}

// ---------------------------------------------------------------------------
// Hair map

Rational BivariateSeries::coefficient(int i, int j) const {
  auto it = coeffs_.find({i, j});
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void BivariateSeries::add_term(int i, int j, const Rational& c) {
  if (c == 0 || i + j > truncation_) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = coeffs_.try_emplace({i, j}, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) coeffs_.erase(it);
  }
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& o) {
  for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
  return *this;
}

BivariateSeries operator*(const BivariateSeries& x, const BivariateSeries& y) {
  BivariateSeries r(std::min(x.truncation_, y.truncation_));
  for (const auto& [kx, cx] : x.coeffs_)
    for (const auto& [ky, cy] : y.coeffs_) r.add_term(kx.first + ky.first, kx.second + ky.second, cx * cy);
  return r;
}

BivariateSeries BivariateSeries::exponential(const Rational& alpha, const Rational& beta, int truncation) {
  BivariateSeries s(truncation);
  // alpha^i / i! and beta^j / j!
  std::vector<Rational> pa(static_cast<std::size_t>(truncation) + 1), pb(pa.size());
  pa[0] = pb[0] = 1;
  for (int i = 1; i <= truncation; ++i) {
    pa[static_cast<std::size_t>(i)] = pa[static_cast<std::size_t>(i - 1)] * alpha / i;
    pb[static_cast<std::size_t>(i)] = pb[static_cast<std::size_t>(i - 1)] * beta / i;
  }
  for (int i = 0; i <= truncation; ++i)
    for (int j = 0; i + j <= truncation; ++j)
      s.add_term(i, j, pa[static_cast<std::size_t>(i)] * pb[static_cast<std::size_t>(j)]);
  return s;
}

BivariateSeries BivariateSeries::inverse() const {
  const Rational c0 = coefficient(0, 0);
  if (c0 == 0) throw DomainError("series with zero constant term is not invertible");
  // 1/x = (1/c0) * sum (-u)^k with x = c0 (1 + u).
  BivariateSeries minus_u(truncation_);
  for (const auto& [k, c] : coeffs_)
    if (k != std::pair{0, 0}) minus_u.add_term(k.first, k.second, -c / c0);
  BivariateSeries sum(truncation_), power(truncation_);
  power.add_term(0, 0, 1);
  for (int k = 0; k <= truncation_; ++k) {
    sum += power;
    power = power * minus_u;
  }
  BivariateSeries r(truncation_);
  for (const auto& [k, c] : sum.coeffs_) r.add_term(k.first, k.second, c / c0);
  return r;
}

namespace {

// D(exp(alpha*a + beta*b)).
BivariateSeries substitute_exponential(const LaurentPoly& d, int alpha, int beta, int truncation) {
  BivariateSeries s(truncation);
  for (const auto& [e, c] : d.terms()) {
    BivariateSeries term = BivariateSeries::exponential(e * alpha, e * beta, truncation);
    for (const auto& [k, v] : term.terms()) s.add_term(k.first, k.second, c * v);
  }
  return s;
}

}  // namespace

BivariateSeries hair(const ThetaElement& x, int truncation) {
  if (truncation < 0) throw DomainError("hair truncation degree must be >= 0");
  BivariateSeries out(truncation);
  for (const auto& [key, c] : x.terms()) {
    for (int g = 0; g < kThetaGroupOrder; ++g) {
      const ExponentTriple v = apply_theta_automorphism(g, {key.m, key.n, 0});
      BivariateSeries e = BivariateSeries::exponential(v[0] - v[2], v[1] - v[2], truncation);
      for (const auto& [k, val] : e.terms()) out.add_term(k.first, k.second, c * val);
    }
  }
  const LaurentPoly& d = x.denominator();
  if (d == LaurentPoly(1) || out.terms().empty()) return out;
  const BivariateSeries denom = substitute_exponential(d, 1, 0, truncation) *
                                substitute_exponential(d, 0, 1, truncation) *
                                substitute_exponential(d, -1, -1, truncation);
  return out * denom.inverse();
}

// ---------------------------------------------------------------------------
// Lattices

bool in_lattice(const ThetaElement& x, const Integer& k) {
  if (k == 0) throw DomainError("in_lattice needs k != 0");
  for (const auto& kv : x.terms()) {
    const Rational scaled = kv.second * Rational(k);
    if (scaled.get_den() != 1) return false;
  }
  return true;
}

bool in_lattice_mod_theta(const ThetaElement& x, const Integer& k) {
  if (k == 0) throw DomainError("in_lattice_mod_theta needs k != 0");
  const ThetaElement theta = theta_class(x.denominator());
  for (const auto& kv : theta.terms())
    if (kv.second.get_den() != 1) throw DomainError("theta class needs an integral denominator");
  // Look for beta = k*alpha with k*x - beta*Theta integral. Only beta mod 1
  // matters, and it is pinned by any key where Theta is nonzero.
  const auto pivot = std::min_element(theta.terms().begin(), theta.terms().end(), [](const auto& a, const auto& b) {
    return abs(a.second) < abs(b.second);
  });
  const ThetaElement kx = x * Rational(k);
  if (pivot == theta.terms().end()) return in_lattice(kx, 1);
  const Integer pivot_coeff = pivot->second.get_num();
  const Rational y0 = kx.coefficient(pivot->first.m, pivot->first.n);
  const Integer span = abs(pivot_coeff);
  for (Integer step = 0; step < span; ++step) {
    const Rational beta = (y0 + Rational(step)) / Rational(pivot_coeff);
    if (in_lattice(kx - theta * beta, 1)) return true;
  }
  return false;
}

Rational eval_t_one(const ThetaElement& x) {
  Rational s = 0;
  for (const auto& kv : x.terms()) s += kv.second;
  if (x.denominator() == LaurentPoly(1)) return s;
  const Rational d1 = eval_one(x.denominator());
  if (d1 == 0) throw DomainError("denominator vanishes at t = 1");
  return s / (d1 * d1 * d1);
}

ThetaElement mod2_mod_theta(const ThetaElement& x) {
  auto reduce = [](const ThetaElement& y) {
    ThetaElement r(y.denominator());
    for (const auto& [key, c] : y.terms()) {
      if (c.get_den() != 1) throw DomainError("mod 2 reduction needs integer coefficients");
      if (mpz_odd_p(c.get_num_mpz_t())) r.add_term(key, 1);
    }
    return r;
  };
  ThetaElement r = reduce(x);
  const ThetaElement theta = reduce(theta_class(x.denominator()));
  if (theta.is_zero()) return r;
  const CanonicalPair pivot = theta.terms().begin()->first;
  if (r.coefficient(pivot.m, pivot.n) == 0) return r;
  return reduce(r + theta);
}

// ---------------------------------------------------------------------------
// Text form

ThetaElement parse_theta(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  LaurentPoly denominator(1);
  std::map<CanonicalPair, Rational> terms;
  bool seen_term = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const std::string_view body(line);
    constexpr std::string_view kDen = "denominator";
    if (body.substr(first, kDen.size()) == kDen) {
      if (seen_term) throw ParseError(lineno, static_cast<int>(first) + 1, "denominator must precede the terms");
      const std::size_t at = first + kDen.size();
      denominator = parse_laurent(body.substr(at), lineno, static_cast<int>(at));
      continue;
    }
    std::istringstream fields(line);
    long long m = 0, n = 0;
    std::string coeff;
    if (!(fields >> m >> n >> coeff))
      throw ParseError(lineno, static_cast<int>(first) + 1, "expected `m n coefficient`");
    std::string extra;
    if (fields >> extra) throw ParseError(lineno, static_cast<int>(line.find(extra)) + 1, "trailing input");
    if (n < 0 || 2 * n > m || m > 1'000'000)
      throw ParseError(lineno, static_cast<int>(first) + 1, "key must satisfy 0 <= 2n <= m");
    const int coeff_column = static_cast<int>(line.find(coeff, first));
    const LaurentPoly cp = parse_laurent(coeff, lineno, coeff_column);
    if (!cp.is_constant()) throw ParseError(lineno, coeff_column + 1, "coefficient must be p/q");
    const Rational c = cp.coeff(0);
    Rational& slot = terms[{static_cast<int>(m), static_cast<int>(n)}];
    slot += c;
    seen_term = true;
  }
  ThetaElement x(denominator);
  for (const auto& [k, c] : terms) x.add_term(k, c);
  return x;
}

std::string to_string(const ThetaElement& x) {
  std::string out;
  if (x.denominator() != LaurentPoly(1)) out += "denominator " + to_string(x.denominator()) + "\n";
  for (const auto& [k, c] : x.terms())
    out += std::to_string(k.m) + " " + std::to_string(k.n) + " " + c.get_str() + "\n";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ThetaElement& x) { return os << to_string(x); }

}  // namespace twoloop
