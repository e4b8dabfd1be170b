#include "twoloop/rozansky.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "twoloop/errors.hpp"

namespace twoloop {

namespace {

bool is_unit_monomial(const LaurentPoly& p) {
  if (!p.is_monomial()) return false;
  const Rational& c = p.terms().begin()->second;
  return c == 1 || c == -1;
}

int sign_at_one(const LaurentPoly& p) { return eval_one(p) > 0 ? 1 : -1; }

// |e t^k| = t^k for a unit monomial.
LaurentPoly magnitude(const LaurentPoly& p) { return LaurentPoly::t(p.min_exponent()); }

}  // namespace

MonomialMatrix::MonomialMatrix(LaurentMatrix w) : w_(std::move(w)) {
  const std::size_t n = w_.size();
  if (n == 0) throw DomainError("matrix must be at least 1x1");
  if (!w_.is_hermitian()) throw DomainError("matrix is not hermitian");
  for (std::size_t i = 0; i < n; ++i) {
    if (w_(i, i) != LaurentPoly(1) && w_(i, i) != LaurentPoly(-1))
      throw DomainError("diagonal entry " + std::to_string(i + 1) + " must be 1 or -1");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!w_(i, j).is_zero() && !is_unit_monomial(w_(i, j)))
        throw DomainError("entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                          ") must be 0 or +-t^k");
  }
  const Rational d = determinant(w_.at_one());
  if (d != 1 && d != -1) throw DomainError("det W(1) must be +-1, got " + d.get_str());
}

int MonomialMatrix::framing(std::size_t i) const { return sign_at_one(w_(i, i)); }

DiagramExponent elementary_link_term(int epsilon, int a, int b) {
  if (epsilon != 1 && epsilon != -1) throw DomainError("link sign must be +1 or -1");
  DiagramExponent e;
  const Rational eps(epsilon);
  e.diagrams.push_back(make_strut({a, 1}, {b, 1}, eps));
  e.diagrams.push_back(make_wheel2({a, 1}, {b, 1}, eps * eps / 8));
  e.diagrams.push_back(make_h_graph(a, b, 1, (eps + 2 * eps * eps * eps) / 24));
  return e;
}

DiagramExponent build_exponent(const MonomialMatrix& w) {
  const auto n = static_cast<int>(w.size());
  auto at = [&](int i, int j) -> const LaurentPoly& {
    return w(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  };
  DiagramExponent e;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (!at(i, j).is_zero()) e.diagrams.push_back(make_strut({i, 1}, {j, at(i, j)}));
  for (int i = 0; i < n; ++i) e.diagrams.push_back(make_wheel2({i, 1}, {i, 1}, Rational(1, 48)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (at(i, j).is_zero()) continue;
      const LaurentPoly mag = magnitude(at(i, j));
      e.diagrams.push_back(make_wheel2({i, 1}, {j, mag}, Rational(1, 8)));
      e.diagrams.push_back(make_h_graph(i, j, mag, Rational(sign_at_one(at(i, j)), 8)));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (j == i || k == i || at(i, j).is_zero() || at(i, k).is_zero()) continue;
        e.diagrams.push_back(make_tripod({i, 1}, {j, at(i, j)}, {k, at(i, k)}, Rational(1, 2)));
      }
  return e;
}

int signature(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw DomainError("signature needs a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m[i][j] != m[j][i]) throw DomainError("signature needs a symmetric matrix");
  // Faddeev-LeVerrier: coefficients c[k] of x^k in det(x I - m).
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> acc(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += m[i][l] * acc[l][j];
        if (i == j) s += c[n - k + 1];
        next[i][j] = s;
      }
    acc = std::move(next);
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) trace += m[i][l] * acc[l][i];
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  // All roots are real, so Descartes' rule counts them exactly.
  auto sign_changes = [&](bool negate) {
    int changes = 0, last = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      int s = sgn(c[k]);
      if (negate && k % 2 == 1) s = -s;
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  return sign_changes(false) - sign_changes(true);
}

DiagramExponent framing_factor(const MonomialMatrix& w) {
  const auto n = static_cast<int>(w.size());
  DiagramExponent e;
  for (int i = 0; i < n; ++i) {
    const int wi = w.framing(static_cast<std::size_t>(i));
    e.diagrams.push_back(make_strut({i, 1}, {i, 1}, Rational(wi, 2)));
    for (int j = 0; j < n; ++j) {
      const LaurentPoly& wij = w(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (j == i || wij.is_zero()) continue;
      e.diagrams.push_back(make_wheel2({i, 1}, {j, wij}, Rational(wi, 24)));
    }
    e.diagrams.push_back(make_wheel2({i, 1}, {i, 1}, Rational(wi * wi + 1) / 48));
  }
  e.theta = Rational(signature(w.matrix().at_one())) / 16;
  return e;
}

ThetaElement integrate_two_loop(const DiagramExponent& e, const PairingMatrix& winv) {
  ThetaElement total(winv.delta());
  std::vector<const LeggedDiagram*> tripods;
  for (const auto& d : e.diagrams) {
    switch (d.shape) {
      case Shape::Strut:
        break;
      case Shape::Wheel2:
      case Shape::HGraph:
        total += contract_single(d, winv);
        break;
      case Shape::Tripod:
        tripods.push_back(&d);
        break;
    }
  }
  for (std::size_t a = 0; a < tripods.size(); ++a) {
    total += contract_tripods(*tripods[a], *tripods[a], winv) * Rational(1, 2);
    for (std::size_t b = a + 1; b < tripods.size(); ++b) total += contract_tripods(*tripods[a], *tripods[b], winv);
  }
  if (e.theta != 0) total += theta_class(winv.delta()) * e.theta;
  return total;
}

Verdicts phi(const MonomialMatrix& w) {
  const PairingMatrix winv = invert_hermitian(w.matrix());
  DiagramExponent e = build_exponent(w);
  e += framing_factor(w);
  Verdicts v;
  v.value = integrate_two_loop(e, winv);
  v.in_twelfth = in_lattice(v.value, 12);
  v.in_half = in_lattice(v.value, 2);
  v.in_half_mod_theta = in_lattice_mod_theta(v.value, 2);
  v.casson = 2 * eval_t_one(v.value);
  v.casson_integral = v.casson.get_den() == 1;
  if (v.in_half && !v.in_twelfth) throw InvariantViolation("half-integral value outside the 1/12 lattice");
  return v;
}

std::vector<MonomialMatrix> enumerate_matrices(int n, int max_exp) {
  if (n < 1) throw DomainError("enumerate_matrices needs n >= 1");
  if (max_exp < 0) throw DomainError("enumerate_matrices needs max_exp >= 0");
  std::vector<LaurentPoly> off{LaurentPoly()};
  for (int k = -max_exp; k <= max_exp; ++k) {
    off.push_back(LaurentPoly::t(k));
    off.push_back(-LaurentPoly::t(k));
  }
  const std::vector<LaurentPoly> diag{LaurentPoly(1), LaurentPoly(-1)};

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
    for (std::size_t j = i; j < static_cast<std::size_t>(n); ++j) slots.emplace_back(i, j);

  std::vector<MonomialMatrix> out;
  std::vector<std::size_t> code(slots.size(), 0);
  auto radix = [&](std::size_t s) { return slots[s].first == slots[s].second ? diag.size() : off.size(); };
  while (true) {
    LaurentMatrix w(static_cast<std::size_t>(n));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      const LaurentPoly& entry = i == j ? diag[code[s]] : off[code[s]];
      w(i, j) = entry;
      w(j, i) = involute(entry);
    }
    const Rational d = determinant(w.at_one());
    if (d == 1 || d == -1) out.emplace_back(std::move(w));
    // Odometer with the first slot most significant.
    std::size_t s = slots.size();
    while (s > 0) {
      --s;
      if (++code[s] < radix(s)) break;
      code[s] = 0;
      if (s == 0) return out;
    }
  }
}

std::string matrix_digest(const LaurentMatrix& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '|';
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j) out += ';';
      out += to_string(w(i, j));
    }
  }
  return out;
}

ScanReport scan(int n, int max_exp, unsigned workers) {
  const std::vector<MonomialMatrix> matrices = enumerate_matrices(n, max_exp);
  ScanReport report;
  report.n = n;
  report.max_exp = max_exp;
  report.entries.resize(matrices.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(matrices.size(), 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t idx = next++; idx < matrices.size(); idx = next++) {
      try {
        report.entries[idx] = {idx, matrix_digest(matrices[idx].matrix()), phi(matrices[idx])};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& entry : report.entries) {
    if (!entry.verdicts.in_twelfth) ++report.twelfth_failures;
    if (!entry.verdicts.in_half) ++report.half_failures;
    if (!entry.verdicts.in_half_mod_theta) ++report.half_mod_theta_failures;
    if (!entry.verdicts.casson_integral) ++report.casson_failures;
  }
  return report;
}

std::string format_report(const ScanReport& report) {
  std::ostringstream out;
  out << "# scan n=" << report.n << " max_exp=" << report.max_exp << " matrices=" << report.entries.size() << "\n";
  out << "# columns: index digest twelfth half half_mod_theta casson casson_integral\n";
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& e : report.entries) {
    const Verdicts& v = e.verdicts;
    out << e.index << ' ' << e.digest << " twelfth=" << yes(v.in_twelfth) << " half=" << yes(v.in_half)
        << " half_mod_theta=" << yes(v.in_half_mod_theta) << " casson=" << v.casson.get_str()
        << " casson_integral=" << yes(v.casson_integral) << "\n";
    if (!v.in_half) {
      std::istringstream lines(to_string(v.value));
      for (std::string line; std::getline(lines, line);) out << "#   " << line << "\n";
    }
  }
  out << "# total=" << report.entries.size() << " twelfth_failures=" << report.twelfth_failures
      << " half_failures=" << report.half_failures << " half_mod_theta_failures=" << report.half_mod_theta_failures
      << " casson_failures=" << report.casson_failures << "\n";
  return out.str();
}

}  // namespace twoloop
