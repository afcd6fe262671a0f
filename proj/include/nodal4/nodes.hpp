#pragma once

#include "nodal4/algebraic.hpp"
#include "nodal4/realize.hpp"

#include <array>
#include <optional>
#include <vector>

namespace nodal4 {

/// Bihomogeneous form of bidegree (3,3): g[a][b] is the coefficient of
/// s^(3-a) t^a u^(3-b) v^b.
struct MinorForm {
  std::array<std::array<Rational, 4>, 4> g;

  Gaussian eval(const ProjPoint1& x, const ProjPoint1& y) const;
  /// Cubic form in (u, v) after fixing (s, t) = x.
  BinaryForm at_first(const ProjPoint1& x) const;
  bool is_symmetric() const;
  MinorForm operator+(const MinorForm& o) const;
  MinorForm scaled(const Rational& k) const;
};

/// (p_i(s,t) p_j(u,v) - p_j(s,t) p_i(u,v)) / (s v - t u) for (i,j) = (0,1),
/// (0,2), (1,2). Throws DivisionFailure if the division is not exact.
std::array<MinorForm, 3> minor_forms(const Curve& c);

/// Sextic form whose roots are the six node preimages (squarefree, first
/// nonzero coefficient 1). Throws NotGeneric unless it has degree 6.
BinaryForm preimage_form(const Curve& c);

enum class NodeKind { Crossing, Solitary };

struct Node {
  NodeKind kind = NodeKind::Crossing;
  /// Plane point scaled so its largest-magnitude coordinate is 1.
  std::array<AlgebraicReal, 3> position{AlgebraicReal::rational(0), AlgebraicReal::rational(0),
                                        AlgebraicReal::rational(0)};
  /// A s^2 + B s t + C t^2 vanishing at the preimage pair, first nonzero
  /// coefficient 1.
  std::array<AlgebraicReal, 3> quadratic{AlgebraicReal::rational(0), AlgebraicReal::rational(0),
                                         AlgebraicReal::rational(0)};
  /// Crossing nodes: both preimages in chart order ([1:0] last).
  std::vector<AlgebraicReal> real_preimages;
  /// Solitary nodes: the conjugate pair when it has Gaussian-rational coordinates.
  std::optional<PointPair> gaussian_preimages;

  std::optional<std::array<Rational, 3>> rational_position() const;
  std::optional<BinaryForm> rational_quadratic() const;
};

/// The three nodes, each certified exactly (both preimages map to the same
/// point, transversally). Throws NotGeneric or ImaginaryNodePresent.
std::vector<Node> find_nodes(const Curve& c);

/// gcd over (i,j) of p_i z_j - p_j z_i; degree 0 iff z is not on the curve.
BinaryForm preimages_of_point(const Curve& c, const std::array<Rational, 3>& z);

/// Exact when all coordinates are rational, by interval refinement otherwise.
bool positions_collinear(const std::array<std::array<AlgebraicReal, 3>, 3>& pts);

}  // namespace nodal4
