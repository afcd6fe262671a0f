#include "doctest.h"
#include "nodal4/isotopy.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace nodal4;
using namespace nodal4::testing;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

BinaryForm quad(long a, long b, long c) { return BinaryForm::from_rationals({r(a), r(b), r(c)}); }

Curve from_quadratics(const BinaryForm& q0, const BinaryForm& q1, const BinaryForm& q2) {
  return Curve{{q1 * q2, q0 * q2, q0 * q1}};
}

// First-occurrence relabeling of the chord word read off the parametrization,
// minimized over rotations only (no reflection).
std::vector<int> rotation_class(const Classification& c) {
  const size_t n = c.node_of.size();
  std::vector<int> best;
  for (size_t rot = 0; rot < std::max<size_t>(n, 1); ++rot) {
    std::vector<int> label(3, 0), w;
    int next = 1;
    for (size_t i = 0; i < n; ++i) {
      int& l = label[static_cast<size_t>(c.node_of[(i + rot) % n])];
      if (l == 0) l = next++;
      w.push_back(l);
    }
    if (best.empty() || w < best) best = w;
  }
  return best;
}

bool all_real(const Curve& c) {
  return std::all_of(c.p.begin(), c.p.end(), [](const BinaryForm& f) { return f.is_real(); });
}

void check_path(const IsotopyPath& path, const Curve& a, const Curve& b, int steps) {
  REQUIRE(path.steps.size() == static_cast<size_t>(steps));
  CHECK(path.steps.front().curve == a);
  CHECK(path.steps.back().curve == b);
  CHECK(path.steps.front().t == 0);
  CHECK(path.steps.back().t == 1);
  const auto word = rotation_class(classify(a));
  for (const auto& st : path.steps) {
    CHECK(all_real(st.curve));
    CHECK(st.certificate.class_id == path.class_id);
    CHECK(check_certificate(st.curve, st.certificate));
    if (!path.reflected) CHECK(rotation_class(classify(st.curve)) == word);
  }
}

}  // namespace

TEST_CASE("verify_generic accepts every class representative") {
  for (const auto& d : enumerate_all(3)) {
    const ClassId& id = d;
    const Curve c = realize_class(id);
    const auto cert = verify_generic(c);
    CHECK(cert.class_id == id);
    CHECK(cert.crossing_nodes + cert.solitary_nodes == 3);
    CHECK(cert.solitary_nodes == id.solitary_count);
    CHECK(cert.preimage_form.degree() == 6);
    CHECK(check_certificate(c, cert));
  }
}

TEST_CASE("verify_generic rejects shared roots, imaginary nodes and tampering") {
  // seed {0,1},{0,2},{3,4}: the duplicated endpoint 0 is a common root.
  const Curve shared = from_quadratics(quad(1, -1, 0), quad(1, -2, 0), quad(1, -7, 12));
  try {
    verify_generic(shared);
    FAIL("expected NotGeneric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGeneric);
  }
  CHECK_THROWS_AS(realize_from_seed(real_seed({0, 1, 0, 2, 3, 4})), Error);

  // q0 vanishes at i, 2i and q1 = conj(q0): [q1 q2 + q0 q2 : i (q0 q2 - q1 q2) :
  // q0 q1] is real with a conjugate pair of imaginary nodes.
  const BinaryForm q0 = BinaryForm::linear_vanishing_at(ipt(r(0), r(1))) * BinaryForm::linear_vanishing_at(ipt(r(0), r(2)));
  const BinaryForm q1 = q0.conj(), q2 = quad(1, -1, 0);
  Curve imag{{q1 * q2 + q0 * q2, (q0 * q2 - q1 * q2).scaled(Gaussian::i()), q0 * q1}};
  for (auto& f : imag.p) f = BinaryForm::from_rationals(f.real_coeffs());
  REQUIRE(all_real(imag));
  try {
    verify_generic(imag);
    FAIL("expected NotGeneric");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotGeneric);
    CHECK(std::string(e.what()).find("imaginary") != std::string::npos);
  }

  const Curve c = realize_class(parse_class_id("3-123123|s0"));
  auto cert = verify_generic(c);
  auto bad = cert;
  bad.preimage_discriminant += 1;
  CHECK_FALSE(check_certificate(c, bad));
  bad = cert;
  bad.class_id = parse_class_id("3-112233|s0");
  CHECK_FALSE(check_certificate(c, bad));
  CHECK_FALSE(check_certificate(realize_class(parse_class_id("3-112233|s0")), cert));
}

TEST_CASE("transform_path examples") {
  const Mat3 id = identity3();
  auto p = transform_path(id, 4);
  REQUIRE(p.size() == 4);
  for (const auto& m : p) CHECK(m == id);

  Mat3 d = id;
  d[0][0] = 2;
  CHECK(transform_stages(d).size() == 1);
  p = transform_path(d, 9);
  CHECK(p.front() == id);
  CHECK(p.back() == d);
  for (size_t k = 0; k < p.size(); ++k) {
    // det is affine along the segment: 1 + t
    CHECK(det3(p[k]) == 1 + Rational(static_cast<long>(k)) / 8);
  }

  Mat3 n = id;
  n[0][0] = -1;
  p = transform_path(n, 5);
  Mat3 minus_n = n;
  for (auto& row : minus_n)
    for (auto& x : row) x = -x;
  CHECK(p.back() == minus_n);
  for (const auto& m : p) CHECK(sgn(det3(m)) > 0);
}

TEST_CASE("transform stages stay invertible and multiply to the target") {
  std::mt19937_64 rng(11);
  std::vector<Mat3> cases;
  Mat3 half_turn = identity3();
  half_turn[0][0] = -1;
  half_turn[1][1] = -1;
  cases.push_back(half_turn);
  Mat3 swap{};
  swap[0][1] = 1;
  swap[1][0] = 1;
  swap[2][2] = 1;
  cases.push_back(swap);
  for (int k = 0; k < 60; ++k) cases.push_back(random_invertible(rng, 3));
  for (const auto& t : cases) {
    Mat3 target = t;
    if (sgn(det3(t)) < 0)
      for (auto& row : target)
        for (auto& x : row) x = -x;
    const auto stages = transform_stages(t);
    Mat3 prod = identity3();
    for (const auto& e : stages) {
      PathSegment seg;
      seg.kind = PathSegment::Kind::Ambient;
      seg.step = e;
      seg.prefix = identity3();
      CHECK(seg.certify());
      prod = e * prod;
    }
    CHECK(prod == target);
    for (const auto& m : transform_path(t, 17)) CHECK(sgn(det3(m)) > 0);
  }
}

TEST_CASE("build_path: constant path between equal curves") {
  const Curve a = realize_class(parse_class_id("3-112233|s0"));
  auto path = build_path(a, a, 5);
  REQUIRE(path.steps.size() == 5);
  for (const auto& st : path.steps) CHECK(st.curve == a);
  CHECK(path.phases.empty());
  check_path(path, a, a, 5);
}

TEST_CASE("build_path: 112233 seeds with monotone chart values") {
  const Curve a = realize_from_seed(real_seed({0, 1, 2, 3, 4, 5}));
  const Curve b = realize_from_seed(real_seed({0, 2, 3, 5, 7, 9}));
  auto path = build_path(a, b, 33);
  check_path(path, a, b, 33);
  CHECK_FALSE(path.via_representative);
  for (const auto& ph : path.phases) CHECK((ph == "slide" || ph == "wrap"));
  // Each real preimage moves monotonically: read the sorted preimages.
  std::vector<std::vector<double>> xs;
  for (const auto& st : path.steps) {
    std::vector<double> v;
    for (const auto& x : classify(st.curve).circular_order) v.push_back(x.approx());
    xs.push_back(v);
  }
  for (size_t i = 0; i < 6; ++i) {
    int dir = 0;
    for (size_t k = 1; k < xs.size(); ++k) {
      const double d = xs[k][i] - xs[k - 1][i];
      if (d == 0) continue;
      const int s = d > 0 ? 1 : -1;
      if (dir == 0) dir = s;
      CHECK(s == dir);
    }
  }
}

TEST_CASE("build_path: solitary pair travels from i to 5i") {
  const ClassId id = parse_class_id("2-1212|s1");
  const Curve a = realize_class(id);
  NodeSeed s = default_seed(id);
  s.pairs[2] = conj_pair(r(0), r(5));
  const Curve b = realize_from_seed(s);
  auto path = build_path(a, b, 9);
  check_path(path, a, b, 9);
  REQUIRE_FALSE(path.phases.empty());
  for (const auto& ph : path.phases) CHECK(ph == "direct");
  for (const auto& st : path.steps) {
    // Real points stay at 0..3 and the conjugate pair stays off the axis.
    const auto cl = classify(st.curve);
    REQUIRE(cl.circular_order.size() == 4);
    for (long k = 0; k < 4; ++k) CHECK(cl.circular_order[static_cast<size_t>(k)] == AlgebraicReal::rational(r(k)));
  }
}

TEST_CASE("build_path: irrational preimages are moved to rational ones") {
  const Curve a = from_quadratics(quad(1, 0, -2), quad(1, -7, 12), quad(1, -11, 30));
  const Curve b = realize_class(parse_class_id("3-112233|s0"));
  auto forward = build_path(a, b, 12);
  check_path(forward, a, b, 12);
  CHECK(std::count(forward.phases.begin(), forward.phases.end(), "rationalize") == 1);
  auto backward = build_path(b, a, 12);
  check_path(backward, b, a, 12);
}

TEST_CASE("build_path errors") {
  const Curve a = realize_class(parse_class_id("3-112233|s0"));
  const Curve b = realize_class(parse_class_id("3-123123|s0"));
  try {
    build_path(a, b, 4);
    FAIL("expected DifferentClass");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DifferentClass);
  }
  Curve irr = realize_from_seed(real_seed({0, 1, 2, 3, 4, 5}));
  irr.p[2] = irr.p[2] + BinaryForm::from_rationals({r(1), r(0), r(0), r(0), r(0)});
  const auto cl = classify(irr);
  try {
    build_path(irr, realize_class(cl.class_id), 4);
    FAIL("expected IrrationalNodes");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrrationalNodes);
  }
}

TEST_CASE("build_path between random curves of every class") {
  std::mt19937_64 rng(2024);
  for (const auto& d : enumerate_all(3)) {
    const ClassId& id = d;
    for (int trial = 0; trial < 1; ++trial) {
      auto make = [&]() {
        for (;;) {
          NodeSeed s = random_seed(rng, id.solitary_count);
          Curve c = realize_from_seed(s);
          try {
            if (classify(c).class_id != id) continue;
          } catch (const Error&) {
            continue;
          }
          return c.transformed(random_invertible(rng, 3)).reparametrized(random_moebius(rng, 3));
        }
      };
      const Curve a = make(), b = make();
      auto path = build_path(a, b, 10);
      check_path(path, a, b, 10);
    }
  }
}
