#pragma once

#include "twoloop/contraction.hpp"
#include "twoloop/theta.hpp"

namespace twoloop {

/// Data of a single clasper with three leaves: the equivariant pairing of
/// the leaves (3x3 hermitian, over a common denominator) and the Milnor-type
/// correction term. The parallel copy of every leaf pairs with the others
/// exactly like the leaf itself.
struct ClasperData {
  PairingMatrix leaf_pairing;
  ThetaElement mu;
};

/// Sum over all ways of contracting the six leaves of the clasper and its
/// parallel copy (two tripods with unit colours on components 0, 1, 2).
ThetaElement pairing_contraction(const ClasperData& c);

/// Change of the 2-loop part: pairing_contraction / 2 + mu.
ThetaElement surgery_delta(const ClasperData& c);

}  // namespace twoloop
