#pragma once

#include "nodal4/binary_form.hpp"
#include "nodal4/error.hpp"

#include <random>
#include <set>
#include <vector>

namespace nodal4::testing {

inline Rational random_rational(std::mt19937_64& rng, long range = 9, long max_den = 4) {
  std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero(std::mt19937_64& rng, long range = 9, long max_den = 4) {
  for (;;) {
    Rational r = random_rational(rng, range, max_den);
    if (sgn(r) != 0) return r;
  }
}

/// n pairwise distinct rationals.
inline std::vector<Rational> distinct_rationals(std::mt19937_64& rng, size_t n, long range = 9, long max_den = 4) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < n) {
    Rational r = random_rational(rng, range, max_den);
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

inline BinaryForm product_of_linear(const std::vector<ProjPoint1>& roots) {
  BinaryForm f = BinaryForm::constant(Gaussian(1));
  for (const auto& p : roots) f = f * BinaryForm::linear_vanishing_at(p);
  return f;
}

}  // namespace nodal4::testing

#include "nodal4/nodes.hpp"
#include "nodal4/realize.hpp"

namespace nodal4::testing {

inline ProjPoint1 rpt(const Rational& x) { return ProjPoint1::affine(Gaussian(x)); }
inline ProjPoint1 ipt(const Rational& re, const Rational& im) { return ProjPoint1::affine(Gaussian(re, im)); }

inline NodeSeed real_seed(std::initializer_list<long> v) {
  std::vector<long> a(v);
  NodeSeed s;
  for (size_t i = 0; i < 3; ++i) s.pairs[i] = {rpt(Rational(a[2 * i])), rpt(Rational(a[2 * i + 1]))};
  return s;
}

inline PointPair conj_pair(const Rational& re, const Rational& im) { return {ipt(re, im), ipt(re, -im)}; }

/// Random seed with the given number of conjugate pairs (placed last).
inline NodeSeed random_seed(std::mt19937_64& rng, int solitary) {
  for (;;) {
    auto v = distinct_rationals(rng, 6, 12, 5);
    NodeSeed s;
    for (size_t i = 0; i < 3; ++i) {
      if (static_cast<int>(i) >= 3 - solitary) {
        Rational im = v[2 * i + 1];
        if (sgn(im) == 0) im = 1;
        s.pairs[i] = conj_pair(v[2 * i], im);
      } else {
        s.pairs[i] = {rpt(v[2 * i]), rpt(v[2 * i + 1])};
      }
    }
    try {
      s.validate();
      return s;
    } catch (const Error&) {
    }
  }
}

inline Mat3 random_invertible(std::mt19937_64& rng, long range = 4) {
  std::uniform_int_distribution<long> d(-range, range);
  for (;;) {
    Mat3 t;
    for (auto& row : t)
      for (auto& v : row) v = Rational(d(rng));
    if (sgn(det3(t)) != 0) return t;
  }
}

inline Mat2 random_moebius(std::mt19937_64& rng, long range = 4) {
  std::uniform_int_distribution<long> d(-range, range);
  for (;;) {
    Mat2 m{{{Rational(d(rng)), Rational(d(rng))}, {Rational(d(rng)), Rational(d(rng))}}};
    if (sgn(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 0) return m;
  }
}

/// Set of the pair quadratics of a seed, normalized.
inline std::vector<BinaryForm> seed_quadratics(const NodeSeed& s) {
  std::vector<BinaryForm> out;
  for (const auto& p : s.pairs) out.push_back(pair_quadratic(p));
  return out;
}

}  // namespace nodal4::testing
