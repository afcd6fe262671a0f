#pragma once

#include "nodal4/diagram.hpp"
#include "nodal4/nodes.hpp"

#include <optional>
#include <vector>

namespace nodal4 {

struct Classification {
  ChordDiagram diagram;  // canonical
  ClassId class_id;
  std::vector<Node> nodes;
  /// Real preimages in chart order, [1:0] last.
  std::vector<AlgebraicReal> circular_order;
  /// Index into `nodes` for each entry of circular_order.
  std::vector<int> node_of;
};

/// Reads the chord diagram straight off the certified preimage data.
Classification classify(const Curve& c);

/// Transform sending the three points to the coordinate points (up to
/// per-coordinate scaling). Throws DegenerateNodes if they are collinear.
Mat3 transform_to_coordinate_points(const std::array<std::array<Rational, 3>, 3>& pts);

struct Normalized {
  Mat3 transform;  // curve = transform o input
  Curve curve;     // equals realize_from_seed of the quadratics, coefficient for coefficient
  std::array<BinaryForm, 3> quadratics;  // node k preimage pair, first nonzero coefficient 1
};

/// Moves node order[k] of find_nodes(c) to the k-th coordinate point and
/// rescales so that p0 = q1 q2, p1 = q0 q2, p2 = q0 q1. Throws
/// IrrationalNodes when a node position is irrational.
Normalized normalize(const Curve& c, const std::optional<std::array<int, 3>>& order = std::nullopt);
Normalized normalize(const Curve& c, const std::vector<Node>& nodes, const std::array<int, 3>& order);

}  // namespace nodal4
