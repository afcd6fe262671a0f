#include "nodal4/realize.hpp"

#include "nodal4/error.hpp"

namespace nodal4 {

void Curve::validate() const {
  for (const auto& f : p)
    if (f.degree() != 4 || !f.is_real()) throw Error(ErrorKind::NotGeneric, "curve forms must be real quartics");
  if (form_gcd(form_gcd(p[0], p[1]), p[2]).degree() > 0)
    throw Error(ErrorKind::NotGeneric, "curve forms share a common root");
  // Rank one iff all 2x2 coefficient minors vanish.
  bool proportional = true;
  for (int i = 0; i < 3 && proportional; ++i)
    for (int j = i + 1; j < 3 && proportional; ++j)
      for (int a = 0; a <= 4 && proportional; ++a)
        for (int b = a + 1; b <= 4; ++b)
          if (!(p[i].coeff(a) * p[j].coeff(b) - p[i].coeff(b) * p[j].coeff(a)).is_zero()) {
            proportional = false;
            break;
          }
  if (proportional) throw Error(ErrorKind::NotGeneric, "curve forms are proportional");
}

std::array<Gaussian, 3> Curve::eval(const ProjPoint1& x) const { return {p[0].eval(x), p[1].eval(x), p[2].eval(x)}; }

Curve Curve::transformed(const Mat3& t) const {
  Curve out;
  for (size_t i = 0; i < 3; ++i) {
    BinaryForm acc = BinaryForm::zero(4);
    for (size_t j = 0; j < 3; ++j) acc = acc + p[j].scaled(Gaussian(t[i][j]));
    out.p[i] = acc;
  }
  return out;
}

Curve Curve::reparametrized(const Mat2& m) const {
  Curve out;
  for (size_t i = 0; i < 3; ++i) out.p[i] = p[i].substitute(m);
  return out;
}

void NodeSeed::validate() const {
  std::vector<ProjPoint1> all;
  for (const auto& [a, b] : pairs) {
    if (a.is_real() != b.is_real()) throw Error(ErrorKind::DegenerateSeed, "pair mixes a real and an imaginary point");
    if (!a.is_real() && b != a.conj())
      throw Error(ErrorKind::DegenerateSeed, "imaginary pair is not conjugate");
    all.push_back(a);
    all.push_back(b);
  }
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) throw Error(ErrorKind::DegenerateSeed, "seed points coincide");
}

BinaryForm pair_quadratic(const PointPair& pair) {
  BinaryForm q = (BinaryForm::linear_vanishing_at(pair.first) * BinaryForm::linear_vanishing_at(pair.second)).normalized();
  if (!q.is_real()) throw Error(ErrorKind::DegenerateSeed, "pair quadratic is not real");
  return q;
}

Curve realize_from_seed(const NodeSeed& seed) {
  seed.validate();
  const BinaryForm q0 = pair_quadratic(seed.pairs[0]), q1 = pair_quadratic(seed.pairs[1]),
                   q2 = pair_quadratic(seed.pairs[2]);
  return Curve{{q1 * q2, q0 * q2, q0 * q1}};
}

NodeSeed default_seed(const ClassId& c) {
  ChordDiagram d = diagram_of(c);
  if (d.chord_count() + d.solitary_count != 3)
    throw Error(ErrorKind::MalformedWord, "a quartic class needs exactly three nodes");
  std::vector<std::vector<Rational>> ends(static_cast<size_t>(d.chord_count()) + 1);
  for (size_t i = 0; i < d.word.size(); ++i) ends[static_cast<size_t>(d.word[i])].push_back(Rational(static_cast<long>(i)));
  NodeSeed seed;
  size_t slot = 0;
  for (int label = 1; label <= d.chord_count(); ++label, ++slot) {
    const auto& e = ends[static_cast<size_t>(label)];
    seed.pairs[slot] = {ProjPoint1::affine(Gaussian(e[0])), ProjPoint1::affine(Gaussian(e[1]))};
  }
  // Three pairs on the imaginary axis would make every form even in s and
  // the map a double cover, so the third pair is moved off the axis.
  for (long j = 1; slot < 3; ++j, ++slot) {
    Gaussian z(Rational(j == 3 ? 1 : 0), Rational(j));
    seed.pairs[slot] = {ProjPoint1::affine(z), ProjPoint1::affine(z.conj())};
  }
  return seed;
}

Curve realize_class(const ClassId& c) { return realize_from_seed(default_seed(c)); }

Mat3 identity3() {
  Mat3 m;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m[i][j] = Rational(i == j ? 1 : 0);
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 m;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      m[i][j] = 0;
      for (size_t k = 0; k < 3; ++k) m[i][j] += a[i][k] * b[k][j];
    }
  return m;
}

Rational det3(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

}  // namespace nodal4
