#include "twoloop/freealg.hpp"

#include <algorithm>
#include <map>

#include "twoloop/errors.hpp"

namespace twoloop {

NCSeries::NCSeries(int alphabet, int truncation) : alphabet_(alphabet), truncation_(truncation) {
  if (alphabet < 1 || alphabet > kMaxAlphabet) throw DomainError("alphabet size must be in 1..8");
  if (truncation < 0) throw DomainError("truncation degree must be >= 0");
  std::size_t width = 1;
  by_degree_.reserve(static_cast<std::size_t>(truncation) + 1);
  for (int d = 0; d <= truncation; ++d) {
    by_degree_.emplace_back(width);
    width *= static_cast<std::size_t>(alphabet);
  }
}

NCSeries NCSeries::constant(int alphabet, int truncation, const Rational& c) {
  NCSeries s(alphabet, truncation);
  s.by_degree_[0][0] = c;
  return s;
}

NCSeries NCSeries::generator(int alphabet, int truncation, int letter, const Rational& c) {
  NCSeries s(alphabet, truncation);
  if (truncation >= 1) s.set({letter}, c);
  return s;
}

std::size_t NCSeries::index(const Word& w) const {
  std::size_t idx = 0;
  for (int letter : w) {
    if (letter < 0 || letter >= alphabet_) throw DomainError("letter outside the alphabet");
    idx = idx * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(letter);
  }
  return idx;
}

Rational NCSeries::coefficient(const Word& w) const {
  if (static_cast<int>(w.size()) > truncation_) return 0;
  return by_degree_[w.size()][index(w)];
}

void NCSeries::set(const Word& w, const Rational& c) {
  if (static_cast<int>(w.size()) > truncation_) return;
  Rational& slot = by_degree_[w.size()][index(w)];
  slot = c;
  slot.canonicalize();
}

void NCSeries::add(const Word& w, const Rational& c) {
  if (static_cast<int>(w.size()) > truncation_) return;
  Rational term = c;
  term.canonicalize();
  by_degree_[w.size()][index(w)] += term;
}

bool NCSeries::is_zero() const {
  for (const auto& level : by_degree_)
    for (const auto& c : level)
      if (c != 0) return false;
  return true;
}

std::vector<std::pair<Word, Rational>> NCSeries::terms() const {
  std::vector<std::pair<Word, Rational>> out;
  for (std::size_t d = 0; d < by_degree_.size(); ++d) {
    for (std::size_t idx = 0; idx < by_degree_[d].size(); ++idx) {
      if (by_degree_[d][idx] == 0) continue;
      Word w(d);
      std::size_t rest = idx;
      for (std::size_t pos = d; pos-- > 0;) {
        w[pos] = static_cast<int>(rest % static_cast<std::size_t>(alphabet_));
        rest /= static_cast<std::size_t>(alphabet_);
      }
      out.emplace_back(std::move(w), by_degree_[d][idx]);
    }
  }
  return out;
}

void NCSeries::require_compatible(const NCSeries& o) const {
  if (alphabet_ != o.alphabet_) throw DomainError("series over different alphabets");
  if (truncation_ != o.truncation_) throw DomainError("series with mismatched truncation degrees");
}

NCSeries& NCSeries::operator+=(const NCSeries& o) {
  require_compatible(o);
  for (std::size_t d = 0; d < by_degree_.size(); ++d)
    for (std::size_t i = 0; i < by_degree_[d].size(); ++i) by_degree_[d][i] += o.by_degree_[d][i];
  return *this;
}

NCSeries& NCSeries::operator-=(const NCSeries& o) {
  require_compatible(o);
  for (std::size_t d = 0; d < by_degree_.size(); ++d)
    for (std::size_t i = 0; i < by_degree_[d].size(); ++i) by_degree_[d][i] -= o.by_degree_[d][i];
  return *this;
}

NCSeries& NCSeries::operator*=(const Rational& c) {
  Rational factor = c;
  factor.canonicalize();
  for (auto& level : by_degree_)
    for (auto& v : level) v *= factor;
  return *this;
}

NCSeries NCSeries::operator-() const {
  NCSeries r = *this;
  return r *= -1;
}

NCSeries NCSeries::truncated(int d) const {
  NCSeries r = *this;
  for (std::size_t k = static_cast<std::size_t>(std::max(d + 1, 0)); k < r.by_degree_.size(); ++k)
    std::fill(r.by_degree_[k].begin(), r.by_degree_[k].end(), Rational(0));
  return r;
}

NCSeries nc_mul(const NCSeries& x, const NCSeries& y) {
  x.require_compatible(y);
  NCSeries r(x.alphabet_, x.truncation_);
  std::vector<std::size_t> width(x.by_degree_.size());
  for (std::size_t d = 0; d < width.size(); ++d) width[d] = x.by_degree_[d].size();
  for (std::size_t d1 = 0; d1 < x.by_degree_.size(); ++d1) {
    for (std::size_t i1 = 0; i1 < x.by_degree_[d1].size(); ++i1) {
      const Rational& c1 = x.by_degree_[d1][i1];
      if (c1 == 0) continue;
      for (std::size_t d2 = 0; d1 + d2 < x.by_degree_.size(); ++d2) {
        auto& out = r.by_degree_[d1 + d2];
        const std::size_t base = i1 * width[d2];
        for (std::size_t i2 = 0; i2 < y.by_degree_[d2].size(); ++i2) {
          const Rational& c2 = y.by_degree_[d2][i2];
          if (c2 != 0) out[base + i2] += c1 * c2;
        }
      }
    }
  }
  return r;
}

NCSeries nc_exp(const NCSeries& x) {
  if (x.coefficient({}) != 0) throw DomainError("nc_exp needs a zero constant term");
  NCSeries sum = NCSeries::constant(x.alphabet(), x.truncation(), 1);
  NCSeries power = sum;
  for (int k = 1; k <= x.truncation(); ++k) {
    power = nc_mul(power, x) * Rational(1, k);
    sum += power;
  }
  return sum;
}

NCSeries nc_log(const NCSeries& x) {
  if (x.coefficient({}) != 1) throw DomainError("nc_log needs constant term 1");
  const NCSeries y = x - NCSeries::constant(x.alphabet(), x.truncation(), 1);
  NCSeries sum(x.alphabet(), x.truncation());
  NCSeries power = y;
  for (int k = 1; k <= x.truncation(); ++k) {
    sum += power * Rational(k % 2 == 1 ? 1 : -1, k);
    power = nc_mul(power, y);
  }
  return sum;
}

NCSeries bracket(const NCSeries& x, const NCSeries& y) { return nc_mul(x, y) - nc_mul(y, x); }

std::vector<std::pair<Word, Rational>> abelianize(const NCSeries& x) {
  std::map<Word, Rational> acc;
  for (auto& [w, c] : x.terms()) {
    Word s = w;
    std::sort(s.begin(), s.end());
    acc[s] += c;
  }
  std::vector<std::pair<Word, Rational>> out;
  for (auto& [w, c] : acc)
    if (c != 0) out.emplace_back(w, c);
  return out;
}

NCSeries z_tangle_log(const Rational& associator_coefficient) {
  constexpr int kDeg = 3;
  const NCSeries a = NCSeries::generator(2, kDeg, 0);
  const NCSeries b = NCSeries::generator(2, kDeg, 1);
  const NCSeries ab = bracket(a, b);
  const NCSeries phi = nc_exp(ab * associator_coefficient);
  const NCSeries phi_inv = nc_exp(ab * -associator_coefficient);
  const Rational half(1, 2);
  const NCSeries factors[] = {
      nc_exp(b * -half), phi, nc_exp(a * half), phi_inv, nc_exp(b),         phi,
      nc_exp(-a),        phi_inv, nc_exp(-b),   phi,     nc_exp(a * half), phi_inv,
      nc_exp(b * half),
  };
  NCSeries product = NCSeries::constant(2, kDeg, 1);
  for (const auto& f : factors) product = nc_mul(product, f);
  return nc_log(product);
}

bool zt_identity_check() {
  const NCSeries a = NCSeries::generator(2, 3, 0);
  const NCSeries b = NCSeries::generator(2, 3, 1);
  return z_tangle_log(Rational(1, 24)) == bracket(a, b);
}

NCSeries bch_operator(int arity, int truncation) {
  if (arity < 1) throw DomainError("bch_operator needs arity >= 1");
  if (truncation < 3) throw DomainError("bch_operator needs truncation >= 3");
  std::vector<NCSeries> g;
  for (int i = 0; i < arity; ++i) g.push_back(NCSeries::generator(arity, truncation, i));
  NCSeries lie(arity, truncation);
  const Rational half(1, 2), sixth(1, 6), twelfth(1, 12);
  for (int i = 0; i < arity; ++i) lie += g[i];
  for (int i = 0; i < arity; ++i)
    for (int j = i + 1; j < arity; ++j) {
      lie += bracket(g[i], g[j]) * half;
      lie += bracket(g[i], bracket(g[i], g[j])) * twelfth;
      lie += bracket(g[j], bracket(g[j], g[i])) * twelfth;
      for (int k = j + 1; k < arity; ++k) {
        lie += bracket(g[i], bracket(g[j], g[k])) * sixth;
        lie += bracket(bracket(g[i], g[j]), g[k]) * sixth;
      }
    }
  // The Lie element is only meaningful through degree 3.
  return nc_exp(lie.truncated(3));
}

NCSeries exp_product(int arity, int truncation) {
  NCSeries product = NCSeries::constant(arity, truncation, 1);
  for (int i = 0; i < arity; ++i) product = nc_mul(product, nc_exp(NCSeries::generator(arity, truncation, i)));
  return product;
}

std::string to_string(const NCSeries& x) {
  std::string out;
  for (const auto& [w, c] : x.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const Rational a = abs(c);
    if (w.empty()) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    for (int letter : w) out += static_cast<char>('a' + letter);
  }
  return out.empty() ? "0" : out;
}

}  // namespace twoloop
