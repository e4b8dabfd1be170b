// Acceptance run: one line per criterion, exit status 1 if any asserted
// criterion fails. Criterion 11 is recorded output only.
#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "twoloop/contraction.hpp"
#include "twoloop/covers.hpp"
#include "twoloop/freealg.hpp"
#include "twoloop/rozansky.hpp"
#include "twoloop/theta.hpp"

using namespace twoloop;

namespace {

struct Outcome {
  bool pass = false;
  std::string details;
};

int failures = 0;

void report(int number, const std::function<Outcome()>& check, bool asserted = true) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* verdict = !asserted ? "RECORDED" : o.pass ? "PASS" : "FAIL";
  if (asserted && !o.pass) ++failures;
  char timing[32];
  std::snprintf(timing, sizeof timing, "%.2fs", seconds);
  std::cout << "criterion " << number << ": " << verdict << " (" << timing << ") " << o.details << std::endl;
}

LaurentPoly signed_monomial(std::mt19937& rng, int span) {
  return LaurentPoly::monomial(rng() % 2 ? 1 : -1, static_cast<int>(rng() % (2 * span + 1)) - span);
}

LaurentMatrix random_monomial_matrix(std::mt19937& rng, std::size_t n) {
  for (;;) {
    LaurentMatrix w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w(i, i) = rng() % 2 ? 1 : -1;
      for (std::size_t j = i + 1; j < n; ++j) {
        const LaurentPoly e = rng() % 3 == 0 ? LaurentPoly() : signed_monomial(rng, 2);
        w(i, j) = e;
        w(j, i) = involute(e);
      }
    }
    const Rational d = determinant(w.at_one());
    if (d == 1 || d == -1) return w;
  }
}

bool equal_mod_half(const ThetaElement& a, const ThetaElement& b) {
  return in_lattice(a - with_denominator(b, a.denominator()), 2);
}

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t hair_rank(int max_m, int truncation) {
  std::vector<std::vector<Rational>> rows;
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; 2 * n <= m; ++n) {
      const BivariateSeries s = hair(ThetaElement::basis(m, n), truncation);
      std::vector<Rational> row;
      for (int i = 0; i <= truncation; ++i)
        for (int j = 0; i + j <= truncation; ++j) row.push_back(s.coefficient(i, j));
      rows.push_back(std::move(row));
    }
  return rank(std::move(rows));
}

}  // namespace

int main() {
  report(1, [] {
    const bool ok = zt_identity_check();
    return Outcome{ok, "log of the 12-factor product is [a,b] at degree 3"};
  });

  report(2, [] {
    int bad = 0;
    for (int p = 1; p <= 4; ++p)
      if (!(bch_operator(p, 3) == exp_product(p, 3))) ++bad;
    return Outcome{bad == 0, "arities 1..4, mismatches=" + std::to_string(bad)};
  });

  report(3, [] {
    std::mt19937 rng(2024);
    const int samples = 300;
    int mismatches = 0;
    for (int trial = 0; trial < samples; ++trial) {
      const PairingMatrix p = invert_hermitian(random_monomial_matrix(rng, 3));
      std::array<LaurentPoly, 3> colors;
      for (auto& c : colors) c = signed_monomial(rng, 2);
      std::array<int, 3> comp{0, 1, 2};
      std::shuffle(comp.begin(), comp.end(), rng);
      const LeggedDiagram y = make_tripod({comp[0], colors[0]}, {comp[1], colors[1]}, {comp[2], colors[2]});
      if (!(mod2_mod_theta(contract_tripods(y, y, p)) == y_square_mod2(colors, comp, p))) ++mismatches;
    }
    return Outcome{mismatches == 0,
                   "samples=" + std::to_string(samples) + " mismatches=" + std::to_string(mismatches)};
  });

  report(4, [] {
    std::size_t cases = 0, bad = 0;
    for (const MonomialMatrix& w : enumerate_matrices(3, 2)) {
      const PairingMatrix winv = invert_hermitian(w.matrix());
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const LaurentPoly& e = w(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
          if (e.is_zero()) continue;
          const LaurentPoly magnitude = LaurentPoly::t(e.min_exponent());
          const int sign = eval_one(e) > 0 ? 1 : -1;
          const ThetaElement x = contract_wheel2(make_wheel2({i, 1}, {j, magnitude}, Rational(1, 8)), winv) +
                                 contract_h(make_h_graph(i, j, magnitude, Rational(sign, 8)), winv);
          ++cases;
          if (!in_lattice_mod_theta(x, 2)) ++bad;
        }
    }
    return Outcome{bad == 0, "entries=" + std::to_string(cases) + " outside=" + std::to_string(bad)};
  });

  std::vector<ScanReport> scans;
  report(5, [&] {
    std::size_t total = 0, bad = 0;
    for (int n = 1; n <= 3; ++n) {
      scans.push_back(scan(n, 1));
      total += scans.back().entries.size();
      bad += scans.back().twelfth_failures;
    }
    return Outcome{bad == 0, "matrices=" + std::to_string(total) + " twelfth_failures=" + std::to_string(bad)};
  });

  report(6, [&] {
    std::size_t total = 0, bad = 0;
    Rational worst = 0;
    for (const ScanReport& r : scans)
      for (const ScanEntry& e : r.entries) {
        ++total;
        if (e.verdicts.casson_integral) continue;
        ++bad;
        if (abs(e.verdicts.casson) > abs(worst)) worst = e.verdicts.casson;
      }
    int identity_bad = 0;
    for (std::size_t n = 1; n <= 5; ++n)
      if (phi(MonomialMatrix(LaurentMatrix::identity(n))).casson != 0) ++identity_bad;
    std::ostringstream d;
    d << "matrices=" << total << " non_integral=" << bad << " largest=" << worst.get_str()
      << " identity_nonzero=" << identity_bad;
    return Outcome{bad == 0 && identity_bad == 0, d.str()};
  });

  report(7, [] {
    const auto family = enumerate_matrices(3, 1);
    std::mt19937 rng(77);
    const int samples = 120;
    int stab = 0, perm = 0, conj = 0;
    for (int trial = 0; trial < samples; ++trial) {
      const MonomialMatrix& w = family[rng() % family.size()];
      const ThetaElement v = phi(w).value;

      LaurentMatrix s(4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) s(i, j) = w(i, j);
      s(3, 3) = rng() % 2 ? 1 : -1;
      if (!equal_mod_half(phi(MonomialMatrix(s)).value, v)) ++stab;

      std::array<std::size_t, 3> p{0, 1, 2};
      std::shuffle(p.begin(), p.end(), rng);
      LaurentMatrix q(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) q(i, j) = w(p[i], p[j]);
      if (!equal_mod_half(phi(MonomialMatrix(q)).value, v)) ++perm;

      std::array<int, 3> a{};
      for (int& x : a) x = static_cast<int>(rng() % 5) - 2;
      LaurentMatrix c(3);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) c(i, j) = w(i, j) * LaurentPoly::t(a[i] - a[j]);
      if (!equal_mod_half(phi(MonomialMatrix(c)).value, v)) ++conj;
    }
    std::ostringstream d;
    d << "samples=" << samples << " stabilization=" << stab << " permutation=" << perm << " conjugation=" << conj;
    return Outcome{stab + perm + conj == 0, d.str()};
  });

  report(8, [] {
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> coord(-40, 40);
    int bad = 0;
    for (int trial = 0; trial < 10000; ++trial) {
      const ExponentTriple e{coord(rng), coord(rng), coord(rng)};
      const CanonicalPair c = canonical_pair(e[0], e[1], e[2]);
      if (c.n < 0 || 2 * c.n > c.m || !(canonical_pair(c.m, c.n, 0) == c)) ++bad;
      for (int g = 0; g < kThetaGroupOrder; ++g) {
        const ExponentTriple v = apply_theta_automorphism(g, e);
        if (!(canonical_pair(v[0], v[1], v[2]) == c)) ++bad;
      }
    }
    int dumbbell_bad = 0;
    for (int trial = 0; trial < 200; ++trial) {
      LaurentPoly p, q;
      for (int k = 0; k < 3; ++k) {
        p += signed_monomial(rng, 3);
        q += signed_monomial(rng, 3);
      }
      if (!reduce_dumbbell(p, signed_monomial(rng, 3), q + involute(q)).is_zero()) ++dumbbell_bad;
      if (!reduce_dumbbell(p, LaurentPoly::t(1) - LaurentPoly(1), q).is_zero()) ++dumbbell_bad;
    }
    const LaurentPoly t = LaurentPoly::t(1);
    const ThetaElement pinned = from_theta({t, involute(t), 1}) - from_theta({t, t, 1});
    const bool pinned_ok = reduce_dumbbell(t, 1, t) == pinned;
    std::ostringstream d;
    d << "triples=10000 canonical_failures=" << bad << " dumbbell_failures=" << dumbbell_bad
      << " pinned=" << (pinned_ok ? "ok" : "wrong");
    return Outcome{bad == 0 && dumbbell_bad == 0 && pinned_ok, d.str()};
  });

  report(9, [] {
    const std::size_t at12 = hair_rank(5, 12);
    const std::size_t at14 = hair_rank(5, 14);
    std::ostringstream d;
    d << "basis elements=12 rank at truncation 12=" << at12 << " (rank at truncation 14=" << at14 << ")";
    return Outcome{at12 == 12, d.str()};
  });

  report(10, [] {
    std::mt19937 rng(10);
    int bad = 0, swept = 0;
    for (int trial = 0; trial < 400; ++trial) {
      const int half_span = 1 + static_cast<int>(rng() % 3);
      LaurentPoly d;
      int tail = 0;
      for (int k = 1; k <= half_span; ++k) {
        const int c = static_cast<int>(rng() % 7) - 3;
        d.add_term(k, c);
        d.add_term(-k, c);
        tail += 2 * c;
      }
      d.add_term(0, 1 - tail);
      for (int r = 1; r <= 5; ++r) {
        ++swept;
        const LaurentPoly q = cover_quotient(d, r);
        if (!q.is_integral() || !(q * d == cover_alexander(d, r).substitute_power(r))) ++bad;
      }
    }
    const LaurentPoly two = cover_alexander(parse_laurent("t^-1 - 1 + t"), 2);
    const bool trefoil_ok = normalize_unit(two) == parse_laurent("t^-1 + 1 + t");
    std::ostringstream out;
    out << "quotients=" << swept << " non_integral=" << bad << " trefoil_double_cover=" << to_string(two);
    return Outcome{bad == 0 && trefoil_ok, out.str()};
  });

  report(
      11,
      [] {
        const ScanReport serial = scan(3, 1, 1);
        const ScanReport pooled = scan(3, 1, 4);
        const std::string text = format_report(serial);
        const bool deterministic = text == format_report(pooled);
        std::ostringstream d;
        d << "matrices=" << serial.entries.size() << " half_failures=" << serial.half_failures
          << " half_failures_mod_theta=" << serial.half_mod_theta_failures
          << " deterministic=" << (deterministic ? "yes" : "no") << " report_hash=" << std::hex
          << std::hash<std::string>{}(text);
        return Outcome{deterministic, d.str()};
      },
      false);

  std::cout << (failures == 0 ? "all asserted criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
