#include "doctest.h"
#include "test_util.hpp"

#include "nodal4/classify.hpp"

#include <set>

using namespace nodal4;
using namespace nodal4::testing;

namespace {

Rational r(long n, long d = 1) { return make_rational(n, d); }

// Oracle: read the word directly off a seed by sorting its real points.
std::string seed_class(const NodeSeed& s) {
  std::vector<std::pair<Rational, int>> pts;
  bool has_inf = false;
  int inf_label = 0;
  int solitary = 0;
  for (size_t k = 0; k < 3; ++k) {
    if (!s.pairs[k].first.is_real()) {
      ++solitary;
      continue;
    }
    for (const auto* p : {&s.pairs[k].first, &s.pairs[k].second}) {
      if (p->is_infinity()) {
        has_inf = true;
        inf_label = static_cast<int>(k) + 1;
      } else {
        pts.emplace_back(p->chart_value().re, static_cast<int>(k) + 1);
      }
    }
  }
  std::sort(pts.begin(), pts.end());
  ChordDiagram d;
  for (auto& [x, l] : pts) d.word.push_back(l);
  if (has_inf) d.word.push_back(inf_label);
  // labels may skip solitary slots; compress
  std::vector<int> seen;
  for (int& l : d.word) {
    auto it = std::find(seen.begin(), seen.end(), l);
    if (it == seen.end()) {
      seen.push_back(l);
      l = static_cast<int>(seen.size());
    } else {
      l = static_cast<int>(it - seen.begin()) + 1;
    }
  }
  d.solitary_count = solitary;
  return to_string(class_of(d));
}

}  // namespace

TEST_CASE("classify examples") {
  CHECK(to_string(classify(realize_from_seed(real_seed({0, 3, 1, 4, 2, 5}))).class_id) == "3-123123|s0");
  NodeSeed s{{conj_pair(r(0), r(1)), conj_pair(r(0), r(2)), {rpt(r(0)), rpt(r(1))}}};
  auto c = classify(realize_from_seed(s));
  CHECK(to_string(c.class_id) == "1-11|s2");
  CHECK(c.circular_order.size() == 2);
  CHECK(to_string(c.diagram) == "11|s2");
}

TEST_CASE("realize then classify round trip over the nine classes") {
  auto classes = enumerate_all(3);
  std::set<std::string> ids;
  for (const auto& cls : classes) {
    auto got = classify(realize_class(cls));
    CHECK(got.class_id == cls);
    ids.insert(to_string(got.class_id));
    CHECK(got.diagram.word.size() == 2 * static_cast<size_t>(cls.chord_count));
  }
  CHECK(ids.size() == 9);
}

TEST_CASE("random seeds classify as read off the seed") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    NodeSeed s = random_seed(rng, trial % 4);
    CHECK(to_string(classify(realize_from_seed(s)).class_id) == seed_class(s));
  }
}

TEST_CASE("classification is projectively and reparametrization invariant") {
  std::mt19937_64 rng(32);
  for (const auto& cls : enumerate_all(3)) {
    Curve c = realize_class(cls);
    for (int k = 0; k < 4; ++k) {
      CHECK(classify(c.transformed(random_invertible(rng))).class_id == cls);
      CHECK(classify(c.reparametrized(random_moebius(rng))).class_id == cls);
    }
  }
}

TEST_CASE("normalize") {
  Curve c = realize_class(parse_class_id("3-121323|s0"));
  auto n = normalize(c);
  CHECK(n.curve == c);
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j)
      if (i != j) CHECK(sgn(n.transform[i][j]) == 0);

  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    NodeSeed s = random_seed(rng, trial % 4);
    Curve base = realize_from_seed(s);
    Mat3 t = random_invertible(rng);
    Curve moved = base.transformed(t);
    auto nodes = find_nodes(moved);
    // put each node back on the coordinate point it came from
    std::array<int, 3> order{};
    for (size_t k = 0; k < 3; ++k) {
      std::array<Rational, 3> img{t[0][k], t[1][k], t[2][k]};
      for (size_t m = 0; m < 3; ++m) {
        auto p = *nodes[m].rational_position();
        bool prop = true;
        for (size_t i = 0; i < 3; ++i)
          for (size_t j = 0; j < 3; ++j)
            if (img[i] * p[j] != img[j] * p[i]) prop = false;
        if (prop) order[k] = static_cast<int>(m);
      }
    }
    auto n2 = normalize(moved, nodes, order);
    // recovered transform is t^{-1} up to scale: n2.transform * t is diagonal
    Mat3 prod = n2.transform * t;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j)
        if (i != j) CHECK(sgn(prod[i][j]) == 0);
    NodeSeed back;
    Curve rebuilt{{n2.quadratics[1] * n2.quadratics[2], n2.quadratics[0] * n2.quadratics[2],
                   n2.quadratics[0] * n2.quadratics[1]}};
    CHECK(rebuilt == n2.curve);
    for (size_t k = 0; k < 3; ++k) CHECK(n2.quadratics[k] == pair_quadratic(s.pairs[k]));
  }
  CHECK_THROWS_AS(transform_to_coordinate_points({{{r(1), r(0), r(0)}, {r(0), r(1), r(0)}, {r(1), r(1), r(0)}}}),
                  Error);
}

TEST_CASE("normalize refuses irrational nodes") {
  Curve c = realize_from_seed(real_seed({0, 1, 2, 3, 4, 5}));
  c.p[2] = c.p[2] + BinaryForm::from_rationals({r(1), r(0), r(0), r(0), r(0)});
  try {
    normalize(c);
    FAIL("expected IrrationalNodes");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IrrationalNodes);
  }
}
