#include "twoloop/surgery.hpp"

#include "twoloop/errors.hpp"

namespace twoloop {

ThetaElement pairing_contraction(const ClasperData& c) {
  if (c.leaf_pairing.size() != 3) throw DomainError("leaf pairing must be 3x3");
  const LeggedDiagram leaves = make_tripod({0, 1}, {1, 1}, {2, 1});
  return contract_tripods(leaves, leaves, c.leaf_pairing);
}

ThetaElement surgery_delta(const ClasperData& c) {
  ThetaElement half = pairing_contraction(c) * Rational(1, 2);
  if (c.mu.is_zero()) return half;
  if (half.is_zero()) return c.mu;
  return half + c.mu;
}

}  // namespace twoloop
