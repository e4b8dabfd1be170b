#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "twoloop/laurent.hpp"
#include "twoloop/theta.hpp"

namespace twoloop {

/// A univalent end of a diagram, attached to link component `component`
/// (0-based). The colour is read outward from the internal vertex.
struct Leg {
  int component = 0;
  LaurentPoly color{1};
};

enum class Shape { Strut, Wheel2, Tripod, HGraph };

/// A legged diagram with a rational coefficient.
///
/// Leg layouts:
///  - Strut: two legs, no internal vertex.
///  - Wheel2: a circle with two trivalent vertices, one leg each.
///  - Tripod: one trivalent vertex; the legs are listed in its cyclic order.
///  - HGraph: two trivalent vertices joined by an edge, legs listed as
///    [top-left, top-right, bottom-left, bottom-right]. The top vertex reads
///    (top-right, top-left, middle edge) and the bottom vertex reads
///    (middle edge, bottom-left, bottom-right), both counterclockwise.
struct LeggedDiagram {
  Shape shape = Shape::Strut;
  std::vector<Leg> legs;
  Rational coefficient = 1;
};

LeggedDiagram make_strut(Leg a, Leg b, const Rational& coefficient = 1);
LeggedDiagram make_wheel2(Leg a, Leg b, const Rational& coefficient = 1);
LeggedDiagram make_tripod(Leg a, Leg b, Leg c, const Rational& coefficient = 1);
/// H^i_j: the left legs sit on component i with colour 1, the right legs on
/// component j with colour `right_color`.
LeggedDiagram make_h_graph(int i, int j, const LaurentPoly& right_color, const Rational& coefficient = 1);

/// Linear combination of legged diagrams plus a multiple of the uncoloured
/// theta graph, read inside an exponential.
struct DiagramExponent {
  std::vector<LeggedDiagram> diagrams;
  Rational theta = 0;

  DiagramExponent& operator+=(const DiagramExponent& o);
};

/// Hermitian matrix of fractions numerators(i, j) / delta.
class PairingMatrix {
 public:
  /// Throws DomainError unless the numerators are hermitian with respect to
  /// delta and delta is nonzero.
  PairingMatrix(LaurentMatrix numerators, LaurentPoly delta);

  std::size_t size() const noexcept { return numerators_.size(); }
  const LaurentPoly& numerator(std::size_t i, std::size_t j) const { return numerators_(i, j); }
  const LaurentMatrix& numerators() const noexcept { return numerators_; }
  const LaurentPoly& delta() const noexcept { return delta_; }

 private:
  LaurentMatrix numerators_;
  LaurentPoly delta_;
};

/// W^-1 as adj(W) / det(W). Rejects non-hermitian or singular W and checks
/// W * adj(W) == det(W) * I.
PairingMatrix invert_hermitian(const LaurentMatrix& w);

struct EdgeColor {
  LaurentPoly numerator;
  LaurentPoly denominator;
};

/// Colour of the edge created by gluing x to y, oriented from x's vertex to
/// y's: -(colour x) * Winv(i, j) * conj(colour y).
EdgeColor contract_pair(const Leg& x, const Leg& y, const PairingMatrix& winv);

/// All perfect matchings of {0, ..., count-1}; (count-1)!! of them.
std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int count);

/// Gaussian contraction of a single Wheel2 (its two legs glued together).
ThetaElement contract_wheel2(const LeggedDiagram& d, const PairingMatrix& winv);

/// Sum over the three matchings of the four legs of an HGraph.
ThetaElement contract_h(const LeggedDiagram& d, const PairingMatrix& winv);

/// Sum over the fifteen matchings of the six legs of two tripods. The
/// result is multiplied by both coefficients.
ThetaElement contract_tripods(const LeggedDiagram& a, const LeggedDiagram& b, const PairingMatrix& winv);

/// Dispatch on the shape of a single diagram (Wheel2 or HGraph).
ThetaElement contract_single(const LeggedDiagram& d, const PairingMatrix& winv);

/// Closed form for the square of a tripod with colours a_i, a_j, a_k on
/// components i, j, k, reduced mod 2 and modulo the theta class:
///   e(w_ii a_i conj a_i) theta(a_j w_jk conj a_k) + (two cyclic images),
/// where w = Winv and e is evaluation at t = 1.
ThetaElement y_square_mod2(const std::array<LaurentPoly, 3>& colors, const std::array<int, 3>& components,
                           const PairingMatrix& winv);

}  // namespace twoloop
