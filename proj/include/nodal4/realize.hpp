#pragma once

#include "nodal4/binary_form.hpp"
#include "nodal4/diagram.hpp"
#include "nodal4/linalg.hpp"

#include <array>
#include <utility>

namespace nodal4 {

using Mat2 = std::array<std::array<Rational, 2>, 2>;
using Mat3 = std::array<std::array<Rational, 3>, 3>;

/// Parametrized plane curve [p0 : p1 : p2] by real binary quartics.
struct Curve {
  std::array<BinaryForm, 3> p;

  /// Throws NotGeneric unless the forms are real quartics without a common
  /// root and not all proportional.
  void validate() const;
  std::array<Gaussian, 3> eval(const ProjPoint1& x) const;
  /// Plane transform: p'_i = sum_j T_ij p_j.
  Curve transformed(const Mat3& t) const;
  /// Curve composed with the Moebius substitution (s, t) -> m (s, t).
  Curve reparametrized(const Mat2& m) const;

  friend bool operator==(const Curve&, const Curve&) = default;
};

using PointPair = std::pair<ProjPoint1, ProjPoint1>;

/// Preimage pairs of the three nodes, in coordinate-point order.
struct NodeSeed {
  std::array<PointPair, 3> pairs;

  /// Throws DegenerateSeed on coincident points or a pair that is neither
  /// two real points nor a conjugate pair.
  void validate() const;
};

/// Normalized real quadratic vanishing exactly at the pair.
BinaryForm pair_quadratic(const PointPair& pair);

/// p0 = q1 q2, p1 = q0 q2, p2 = q0 q1.
Curve realize_from_seed(const NodeSeed& seed);

/// Chords first in label order, endpoints at 0..2k-1 in word order, then
/// solitary pairs at +-i, +-2i, 1+-3i.
NodeSeed default_seed(const ClassId& c);
Curve realize_class(const ClassId& c);

Mat3 identity3();
Mat3 operator*(const Mat3& a, const Mat3& b);
Rational det3(const Mat3& a);

}  // namespace nodal4
