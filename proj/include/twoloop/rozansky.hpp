#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "twoloop/contraction.hpp"
#include "twoloop/laurent.hpp"
#include "twoloop/theta.hpp"

namespace twoloop {

/// Hermitian matrix whose entries are 0 or +-t^k, with diagonal +-1 and
/// det W(1) = +-1. Components are 0-based.
class MonomialMatrix {
 public:
  /// Throws DomainError when w is not in the class.
  explicit MonomialMatrix(LaurentMatrix w);

  std::size_t size() const noexcept { return w_.size(); }
  const LaurentMatrix& matrix() const noexcept { return w_; }
  const LaurentPoly& operator()(std::size_t i, std::size_t j) const { return w_(i, j); }
  /// w_i = w_ii(1).
  int framing(std::size_t i) const;

 private:
  LaurentMatrix w_;
};

/// epsilon * strut + (epsilon^2 / 8) * wheel + ((epsilon + 2 epsilon^3) / 24) * H^a_b.
DiagramExponent elementary_link_term(int epsilon, int a, int b);

/// Legged part of the exponent before framing corrections:
///   sum w_ij strut_ij + sum_i wheel_ii / 48 + sum_{i<j} (|w_ij| / 8) wheel_ij
///   + sum_{i<j} (w_ij / 8) H^i_j + sum_i sum_{j<k} Y_i(1, w_ij, w_ik) / 2,
/// with |e t^k| = t^k and zero entries skipped.
DiagramExponent build_exponent(const MonomialMatrix& w);

/// Signature of a symmetric rational matrix (exact, via the characteristic
/// polynomial and Descartes' rule of signs).
int signature(const std::vector<std::vector<Rational>>& m);

/// Framing and normalisation factor:
///   sum_i (w_i / 2) strut_ii + (w_i / 24) sum_{j != i} wheel_ij(w_ij)
///   + ((w_i^2 + 1) / 48) wheel_ii, plus (sigma / 16) Theta.
DiagramExponent framing_factor(const MonomialMatrix& w);

/// 2-loop part of the Gaussian integral of exp(e) against the pairing:
/// single Wheel2 and HGraph closures, all unordered pairs of tripods
/// (self-pairs weighted by 1/2) and the explicit Theta term. Struts are the
/// quadratic part and do not contribute.
ThetaElement integrate_two_loop(const DiagramExponent& e, const PairingMatrix& winv);

struct Verdicts {
  ThetaElement value;
  bool in_twelfth = false;
  bool in_half = false;
  /// Membership in (1/2) of the lattice after discarding a rational multiple
  /// of the uncoloured theta graph.
  bool in_half_mod_theta = false;
  Rational casson;
  bool casson_integral = false;
};

Verdicts phi(const MonomialMatrix& w);

/// Every matrix of the class with off-diagonal entries in
/// {0} u {+-t^k : |k| <= max_exp}, in a fixed lexicographic order over the
/// upper triangle (row-major), diagonal codes (1, -1), off-diagonal codes
/// (0, t^-K, -t^-K, ..., t^K, -t^K).
std::vector<MonomialMatrix> enumerate_matrices(int n, int max_exp);

/// Rows joined by `|`, entries by `;`.
std::string matrix_digest(const LaurentMatrix& w);

struct ScanEntry {
  std::size_t index = 0;
  std::string digest;
  Verdicts verdicts;
};

struct ScanReport {
  int n = 0;
  int max_exp = 0;
  std::vector<ScanEntry> entries;
  std::size_t twelfth_failures = 0;
  std::size_t half_failures = 0;
  std::size_t half_mod_theta_failures = 0;
  std::size_t casson_failures = 0;
};

/// phi over enumerate_matrices(n, max_exp) on `workers` threads (0 means
/// the hardware concurrency). Entries come back in enumeration order.
ScanReport scan(int n, int max_exp, unsigned workers = 0);

/// Line-oriented report text; identical for identical scans.
std::string format_report(const ScanReport& report);

}  // namespace twoloop
