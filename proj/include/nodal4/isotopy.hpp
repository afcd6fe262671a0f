#pragma once

#include "nodal4/classify.hpp"

#include <string>
#include <vector>

namespace nodal4 {

/// Data that lets anyone re-check genericity from the curve alone.
struct GenericityCertificate {
  ClassId class_id;
  /// Res(p0, p1 + lambda p2) != 0, so the three forms share no root.
  long witness_lambda = 0;
  Rational common_root_witness;
  /// Sextic of node preimages and its discriminant-style resultant
  /// Res(dH/ds, dH/dt), nonzero iff the six preimages are distinct.
  BinaryForm preimage_form;
  Rational preimage_discriminant;
  int crossing_nodes = 0;
  int solitary_nodes = 0;
};

/// Throws NotGeneric naming the violated condition.
GenericityCertificate verify_generic(const Curve& c);
/// Recomputes every witness; false on any mismatch.
bool check_certificate(const Curve& c, const GenericityCertificate& cert);

/// Piece of a path: either t -> M(t) o base with M(t) = ((1-t) I + t E) P,
/// or a curve built from three quadratics with polynomial coefficients in t.
struct PathSegment {
  enum class Kind { Ambient, Seed };
  Kind kind = Kind::Seed;
  std::string phase;
  // Ambient
  Curve base;
  Mat3 step, prefix;
  // Seed: coefficient k of quadratic i is quads[i][k](t).
  std::array<std::array<QPoly, 3>, 3> quads;

  Curve at(const Rational& t) const;
  std::array<BinaryForm, 3> quadratics_at(const Rational& t) const;
  /// Exact check that the whole segment t in [0, 1] stays generic: for seed
  /// segments no discriminant or pairwise resultant vanishes, for ambient
  /// ones the determinant does not.
  bool certify() const;
};

/// Linear stages from the identity to T (or -T when det T < 0, the same
/// projective map): E_1, ..., E_m with E_m ... E_1 = T and every
/// (1-t) I + t E_j invertible on [0, 1].
std::vector<Mat3> transform_stages(const Mat3& t);
/// `steps` samples of the stage path, first the identity, last T or -T.
std::vector<Mat3> transform_path(const Mat3& t, int steps);

struct PathStep {
  Rational t;
  Curve curve;
  GenericityCertificate certificate;
  std::string phase;
};

struct IsotopyPath {
  ClassId class_id;
  std::vector<PathStep> steps;
  std::vector<std::string> phases;  // one per nonempty segment
  bool reflected = false;           // a was reparametrized by s -> -s
  bool via_representative = false;  // fallback through the class representative
};

/// Certified path from a to b. Throws DifferentClass, IrrationalNodes or
/// PathObstruction.
IsotopyPath build_path(const Curve& a, const Curve& b, int steps);

/// Segments only (no sampling); exposed for tests.
std::vector<PathSegment> plan_path(const Curve& a, const Curve& b, bool* reflected = nullptr);

}  // namespace nodal4
