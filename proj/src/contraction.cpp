#include "twoloop/contraction.hpp"

#include <algorithm>
#include <optional>

#include "twoloop/errors.hpp"

namespace twoloop {

LeggedDiagram make_strut(Leg a, Leg b, const Rational& coefficient) {
  return {Shape::Strut, {std::move(a), std::move(b)}, coefficient};
}

LeggedDiagram make_wheel2(Leg a, Leg b, const Rational& coefficient) {
  return {Shape::Wheel2, {std::move(a), std::move(b)}, coefficient};
}

LeggedDiagram make_tripod(Leg a, Leg b, Leg c, const Rational& coefficient) {
  return {Shape::Tripod, {std::move(a), std::move(b), std::move(c)}, coefficient};
}

LeggedDiagram make_h_graph(int i, int j, const LaurentPoly& right_color, const Rational& coefficient) {
  return {Shape::HGraph, {{i, 1}, {j, right_color}, {i, 1}, {j, right_color}}, coefficient};
}

DiagramExponent& DiagramExponent::operator+=(const DiagramExponent& o) {
  diagrams.insert(diagrams.end(), o.diagrams.begin(), o.diagrams.end());
  theta += o.theta;
  return *this;
}

// ---------------------------------------------------------------------------

PairingMatrix::PairingMatrix(LaurentMatrix numerators, LaurentPoly delta)
    : numerators_(std::move(numerators)), delta_(std::move(delta)) {
  if (delta_.is_zero()) throw DomainError("pairing matrix with zero denominator");
  const std::size_t n = numerators_.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (numerators_(j, i) != conjugate_numerator(numerators_(i, j), delta_))
        throw DomainError("pairing matrix is not hermitian at (" + std::to_string(i + 1) + ", " +
                          std::to_string(j + 1) + ")");
}

PairingMatrix invert_hermitian(const LaurentMatrix& w) {
  const std::size_t n = w.size();
  if (n == 0) throw DomainError("empty matrix");
  if (!w.is_hermitian()) throw DomainError("matrix is not hermitian");
  const LaurentPoly delta = determinant(w);
  if (delta.is_zero()) throw DomainError("matrix is singular");
  LaurentMatrix adj(n);
  if (n == 1) {
    adj(0, 0) = 1;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const LaurentPoly cof = determinant(w.minor(j, i));
        adj(i, j) = (i + j) % 2 == 0 ? cof : -cof;
      }
  }
  const LaurentMatrix check = w * adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (check(i, j) != (i == j ? delta : LaurentPoly()))
        throw InvariantViolation("adjugate check W * adj(W) = det(W) I failed");
  return PairingMatrix(std::move(adj), delta);
}

EdgeColor contract_pair(const Leg& x, const Leg& y, const PairingMatrix& winv) {
  const auto n = static_cast<int>(winv.size());
  if (x.component < 0 || x.component >= n || y.component < 0 || y.component >= n)
    throw DomainError("leg component outside the pairing matrix");
  const LaurentPoly& w = winv.numerator(static_cast<std::size_t>(x.component), static_cast<std::size_t>(y.component));
  return {-(x.color * w * involute(y.color)), winv.delta()};
}

std::vector<std::vector<std::pair<int, int>>> perfect_matchings(int count) {
  if (count < 0 || count % 2 != 0) throw DomainError("perfect matchings need an even, nonnegative count");
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> current;
  std::vector<bool> used(static_cast<std::size_t>(count), false);
  auto rec = [&](auto&& self) -> void {
    auto first = std::find(used.begin(), used.end(), false);
    if (first == used.end()) {
      out.push_back(current);
      return;
    }
    const int a = static_cast<int>(first - used.begin());
    used[static_cast<std::size_t>(a)] = true;
    for (int b = a + 1; b < count; ++b) {
      if (used[static_cast<std::size_t>(b)]) continue;
      used[static_cast<std::size_t>(b)] = true;
      current.emplace_back(a, b);
      self(self);
      current.pop_back();
      used[static_cast<std::size_t>(b)] = false;
    }
    used[static_cast<std::size_t>(a)] = false;
  };
  rec(rec);
  return out;
}

// ---------------------------------------------------------------------------
// Open graphs with trivalent vertices. Half-edges are numbered; every vertex
// lists its three half-edges counterclockwise. An edge runs from one
// half-edge to another and carries a numerator over the common denominator.

namespace {

struct Edge {
  int from;
  int to;
  LaurentPoly numerator;
};

struct OpenGraph {
  std::vector<std::array<int, 3>> vertices;
  std::vector<Edge> edges;
  std::vector<std::pair<int, Leg>> legs;  // half-edge, leg data
};

int vertex_of(const OpenGraph& g, int half_edge) {
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    for (int h : g.vertices[v])
      if (h == half_edge) return static_cast<int>(v);
  throw InvariantViolation("dangling half-edge");
}

// Rotate a vertex order so that it starts at `first`.
std::array<int, 3> rotate_to(const std::array<int, 3>& order, int first) {
  for (int s = 0; s < 3; ++s)
    if (order[static_cast<std::size_t>(s)] == first)
      return {order[static_cast<std::size_t>(s)], order[static_cast<std::size_t>((s + 1) % 3)],
              order[static_cast<std::size_t>((s + 2) % 3)]};
  throw InvariantViolation("half-edge missing from its vertex");
}

// Value of a closed graph on two trivalent vertices.
ThetaElement evaluate_closed(const OpenGraph& g, const LaurentPoly& delta) {
  if (g.vertices.size() != 2 || g.edges.size() != 3 || !g.legs.empty())
    throw InvariantViolation("closed graph is not a 2-loop trivalent graph");
  std::vector<int> edge_of_half(g.edges.size() * 2 + 16, -1);
  auto note = [&](int h, int e) {
    if (static_cast<std::size_t>(h) >= edge_of_half.size()) edge_of_half.resize(static_cast<std::size_t>(h) + 1, -1);
    edge_of_half[static_cast<std::size_t>(h)] = e;
  };
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    note(g.edges[e].from, static_cast<int>(e));
    note(g.edges[e].to, static_cast<int>(e));
  }
  std::vector<int> central;
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    if (vertex_of(g, g.edges[e].from) != vertex_of(g, g.edges[e].to)) central.push_back(static_cast<int>(e));

  if (central.size() == 3) {
    // Orient every edge from vertex 0 to vertex 1.
    std::array<LaurentPoly, 3> colors;
    for (std::size_t e = 0; e < 3; ++e) {
      const Edge& edge = g.edges[e];
      colors[e] = vertex_of(g, edge.from) == 0 ? edge.numerator : conjugate_numerator(edge.numerator, delta);
    }
    std::array<int, 3> order0{}, order1{};
    for (std::size_t s = 0; s < 3; ++s) {
      order0[s] = edge_of_half[static_cast<std::size_t>(g.vertices[0][s])];
      order1[s] = edge_of_half[static_cast<std::size_t>(g.vertices[1][s])];
    }
    // A planar theta graph reads its edges in opposite cyclic orders at the
    // two vertices; the same cyclic order costs one antisymmetry sign.
    const std::array<int, 3> r1 = rotate_to(order1, order0[0]);
    const int sign = r1[1] == order0[2] ? 1 : -1;
    ThetaElement value = from_theta({colors[0], colors[1], colors[2]}, delta);
    return sign == 1 ? value : -value;
  }
  if (central.size() != 1) throw InvariantViolation("closed graph is neither a theta nor a dumbbell");

  const Edge& bar = g.edges[static_cast<std::size_t>(central.front())];
  std::array<LaurentPoly, 2> loops;
  for (int v = 0; v < 2; ++v) {
    const int bar_half = vertex_of(g, bar.from) == v ? bar.from : bar.to;
    const std::array<int, 3> order = rotate_to(g.vertices[static_cast<std::size_t>(v)], bar_half);
    const Edge& loop = g.edges[static_cast<std::size_t>(edge_of_half[static_cast<std::size_t>(order[1])])];
    // Normal form at a vertex: (bar, loop leaving, loop returning).
    loops[static_cast<std::size_t>(v)] =
        loop.from == order[1] ? loop.numerator : conjugate_numerator(loop.numerator, delta);
  }
  return reduce_dumbbell(loops[0], bar.numerator, loops[1], delta);
}

ThetaElement contract_open(const OpenGraph& g, const PairingMatrix& winv, const Rational& coefficient) {
  ThetaElement total(winv.delta());
  if (coefficient == 0) return total;
  for (const auto& [h, leg] : g.legs)
    if (leg.color.is_zero()) return total;
  for (const auto& matching : perfect_matchings(static_cast<int>(g.legs.size()))) {
    OpenGraph closed{g.vertices, g.edges, {}};
    for (const auto& [x, y] : matching) {
      const auto& [hx, lx] = g.legs[static_cast<std::size_t>(x)];
      const auto& [hy, ly] = g.legs[static_cast<std::size_t>(y)];
      closed.edges.push_back({hx, hy, contract_pair(lx, ly, winv).numerator});
    }
    total += evaluate_closed(closed, winv.delta());
  }
  return total *= coefficient;
}

void require_shape(const LeggedDiagram& d, Shape shape, std::size_t legs, const char* name) {
  if (d.shape != shape || d.legs.size() != legs)
    throw DomainError(std::string("expected a ") + name + " with " + std::to_string(legs) + " legs");
}

}  // namespace

ThetaElement contract_wheel2(const LeggedDiagram& d, const PairingMatrix& winv) {
  require_shape(d, Shape::Wheel2, 2, "Wheel2");
  // Vertices A (0) and B (1). Half-edges: 0 leg at A, 1 leg at B, 2/3 first
  // arc A->B, 4/5 second arc B->A.
  OpenGraph g;
  g.vertices = {{2, 0, 5}, {1, 3, 4}};
  g.edges = {{2, 3, winv.delta()}, {4, 5, winv.delta()}};
  g.legs = {{0, d.legs[0]}, {1, d.legs[1]}};
  return contract_open(g, winv, d.coefficient);
}

ThetaElement contract_h(const LeggedDiagram& d, const PairingMatrix& winv) {
  require_shape(d, Shape::HGraph, 4, "HGraph");
  // Legs 0..3 = TL, TR, BL, BR; half-edges 4/5 = middle edge top->bottom.
  OpenGraph g;
  g.vertices = {{1, 0, 4}, {5, 2, 3}};
  g.edges = {{4, 5, winv.delta()}};
  for (int l = 0; l < 4; ++l) g.legs.emplace_back(l, d.legs[static_cast<std::size_t>(l)]);
  return contract_open(g, winv, d.coefficient);
}

ThetaElement contract_tripods(const LeggedDiagram& a, const LeggedDiagram& b, const PairingMatrix& winv) {
  require_shape(a, Shape::Tripod, 3, "Tripod");
  require_shape(b, Shape::Tripod, 3, "Tripod");
  OpenGraph g;
  g.vertices = {{0, 1, 2}, {3, 4, 5}};
  for (int l = 0; l < 3; ++l) g.legs.emplace_back(l, a.legs[static_cast<std::size_t>(l)]);
  for (int l = 0; l < 3; ++l) g.legs.emplace_back(l + 3, b.legs[static_cast<std::size_t>(l)]);
  return contract_open(g, winv, a.coefficient * b.coefficient);
}

ThetaElement contract_single(const LeggedDiagram& d, const PairingMatrix& winv) {
  switch (d.shape) {
    case Shape::Wheel2:
      return contract_wheel2(d, winv);
    case Shape::HGraph:
      return contract_h(d, winv);
    default:
      throw DomainError("only Wheel2 and HGraph close up on their own");
  }
}

ThetaElement y_square_mod2(const std::array<LaurentPoly, 3>& colors, const std::array<int, 3>& components,
                           const PairingMatrix& winv) {
  const LaurentPoly& delta = winv.delta();
  const Rational d1 = eval_one(delta);
  if (d1 != 1 && d1 != -1) throw DomainError("closed form needs det W = +-1 at t = 1");
  for (int c : components)
    if (c < 0 || c >= static_cast<int>(winv.size())) throw DomainError("component outside the pairing matrix");
  auto w = [&](int x, int y) -> const LaurentPoly& {
    return winv.numerator(static_cast<std::size_t>(components[static_cast<std::size_t>(x)]),
                          static_cast<std::size_t>(components[static_cast<std::size_t>(y)]));
  };
  ThetaElement total(delta);
  for (int s = 0; s < 3; ++s) {
    const int i = s, j = (s + 1) % 3, k = (s + 2) % 3;
    const LaurentPoly& ai = colors[static_cast<std::size_t>(i)];
    const Rational weight = eval_one(w(i, i) * ai * involute(ai)) / d1;
    if (weight == 0) continue;
    const LaurentPoly arg = colors[static_cast<std::size_t>(j)] * w(j, k) * involute(colors[static_cast<std::size_t>(k)]);
    total += from_theta({arg, delta, delta}, delta) * weight;
  }
  return mod2_mod_theta(total);
}

}  // namespace twoloop
