#include "nodal4/classify.hpp"

#include "nodal4/error.hpp"

#include <algorithm>
#include <numeric>

namespace nodal4 {

Classification classify(const Curve& c) {
  Classification out;
  out.nodes = find_nodes(c);
  std::vector<std::pair<AlgebraicReal, int>> pts;
  int solitary = 0;
  for (size_t k = 0; k < out.nodes.size(); ++k) {
    if (out.nodes[k].kind == NodeKind::Solitary) ++solitary;
    for (const auto& x : out.nodes[k].real_preimages) pts.emplace_back(x, static_cast<int>(k));
  }
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  ChordDiagram raw;
  raw.solitary_count = solitary;
  // Chord labels by first occurrence along the circle.
  std::vector<int> label(out.nodes.size(), 0);
  int next = 1;
  for (const auto& [x, k] : pts) {
    out.circular_order.push_back(x);
    out.node_of.push_back(k);
    int& l = label[static_cast<size_t>(k)];
    if (l == 0) l = next++;
    raw.word.push_back(l);
  }
  out.diagram = canonicalize(raw);
  out.class_id = class_of(out.diagram);
  return out;
}

Mat3 transform_to_coordinate_points(const std::array<std::array<Rational, 3>, 3>& pts) {
  // Columns of V are the points; V^{-1} sends point k to e_k.
  Matrix<Rational> v(3, std::vector<Rational>(3));
  for (size_t i = 0; i < 3; ++i)
    for (size_t k = 0; k < 3; ++k) v[i][k] = pts[k][i];
  auto inv = inverse(v);
  if (!inv) throw Error(ErrorKind::DegenerateNodes, "node positions are collinear");
  Mat3 t;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) t[i][j] = (*inv)[i][j];
  return t;
}

Normalized normalize(const Curve& c, const std::optional<std::array<int, 3>>& order) {
  return normalize(c, find_nodes(c), order.value_or(std::array<int, 3>{0, 1, 2}));
}

Normalized normalize(const Curve& c, const std::vector<Node>& nodes, const std::array<int, 3>& order) {
  std::array<int, 3> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (nodes.size() != 3 || sorted != std::array<int, 3>{0, 1, 2}) throw std::invalid_argument("bad node order");
  std::array<std::array<Rational, 3>, 3> pts;
  for (size_t k = 0; k < 3; ++k) {
    auto p = nodes[static_cast<size_t>(order[k])].rational_position();
    if (!p) throw Error(ErrorKind::IrrationalNodes, "node position is not rational");
    pts[k] = *p;
  }
  Normalized out;
  out.transform = transform_to_coordinate_points(pts);
  Curve moved = c.transformed(out.transform);
  for (size_t k = 0; k < 3; ++k) {
    std::array<Rational, 3> z{Rational(0), Rational(0), Rational(0)};
    z[k] = 1;
    out.quadratics[k] = preimages_of_point(moved, z);
    if (out.quadratics[k].degree() != 2) throw Error(ErrorKind::NotGeneric, "node preimage form is not quadratic");
  }
  // p_i = c_i q_j q_k; divide out the constants c_i.
  Mat3 scale{};
  for (size_t i = 0; i < 3; ++i) {
    const BinaryForm target = out.quadratics[(i + 1) % 3] * out.quadratics[(i + 2) % 3];
    auto q = form_divide(moved.p[i], target);
    if (!q || q->degree() != 0 || !q->is_real())
      throw Error(ErrorKind::NotGeneric, "normalized curve lacks the quadratic factor structure");
    const Rational ci = q->coeff(0).re;
    for (size_t j = 0; j < 3; ++j) scale[i][j] = Rational(0);
    scale[i][i] = 1 / ci;
  }
  out.transform = scale * out.transform;
  out.curve = c.transformed(out.transform);
  return out;
}

}  // namespace nodal4
