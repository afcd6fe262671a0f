#include "doctest.h"
#include "test_util.hpp"

#include "nodal4/algebraic.hpp"
#include "nodal4/binary_form.hpp"
#include "nodal4/error.hpp"

using namespace nodal4;
using namespace nodal4::testing;

namespace {

BinaryForm lin(long a, long b) { return BinaryForm::from_rationals({Rational(a), Rational(b)}); }  // a s + b t

Rational r(long n, long d = 1) { return make_rational(n, d); }

/// lc(f)^deg(g) * prod g(root) over the affine roots of f, all roots rational.
Rational root_product_resultant(const Rational& lead, const std::vector<Rational>& f_roots, const BinaryForm& g) {
  Rational acc(1);
  for (int k = 0; k < g.degree(); ++k) acc *= lead;
  for (const auto& x : f_roots) acc *= g.eval(Gaussian(x), Gaussian(1)).re;
  return acc;
}

}  // namespace

TEST_CASE("rationals serialize as num/den and parse back") {
  CHECK(to_string(r(6, 4)) == "3/2");
  CHECK(to_string(r(-3)) == "-3/1");
  CHECK(parse_rational("-3/6") == r(-1, 2));
  CHECK(parse_rational("1.25") == r(5, 4));
  CHECK(parse_rational("-0.5") == r(-1, 2));
  CHECK(parse_rational(" 7 ") == r(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("simplest rational between bounds") {
  CHECK(simplest_between(r(1, 3), r(1, 2)) == r(1, 2));
  CHECK(simplest_between(r(31, 100), r(32, 100)) == r(5, 16));
  CHECK(simplest_between(r(-7, 5), r(-6, 5)) == r(-4, 3));
  CHECK(simplest_between(r(-1), r(1)) == r(0));
}

TEST_CASE("gaussian arithmetic") {
  Gaussian z(r(1), r(2));
  CHECK((z * z.conj()).is_real());
  CHECK(z * z.inverse() == Gaussian(1));
  CHECK(z.conj().conj() == z);
}

TEST_CASE("form_eval examples") {
  BinaryForm st = BinaryForm::from_rationals({r(0), r(1), r(0)});
  CHECK(st.eval(ProjPoint1::affine(Gaussian(1))) == Gaussian(1));
  ProjPoint1 p(Gaussian(r(3, 7)), Gaussian(r(-2)));
  CHECK(BinaryForm::linear_vanishing_at(p).eval(p).is_zero());
  BinaryForm circle = BinaryForm::from_rationals({r(1), r(0), r(1)});
  CHECK(circle.eval(ProjPoint1::affine(Gaussian::i())).is_zero());
  // scaling the point by lambda scales the value by lambda^deg
  ProjPoint1 q(Gaussian(r(2)), Gaussian(r(5)));
  ProjPoint1 q3(Gaussian(r(6)), Gaussian(r(15)));
  CHECK(circle.eval(q3) == circle.eval(q) * Gaussian(9));
}

TEST_CASE("form_gcd examples") {
  BinaryForm q0 = lin(1, 0) * lin(1, -1), q1 = lin(1, -2) * lin(1, -3), q2 = lin(1, 1) * lin(2, -9);
  CHECK(form_gcd(q1 * q2, q0 * q2) == q2.normalized());
  CHECK(form_gcd(lin(1, -1), lin(1, 1)).degree() == 0);
  BinaryForm f = lin(1, -1) * lin(1, -1) * lin(1, 1), g = lin(1, -1) * lin(1, -2);
  CHECK(form_gcd(f, g) == lin(1, -1));
  // factors at infinity (powers of t)
  BinaryForm t = lin(0, 1);
  CHECK(form_gcd(t * t * lin(1, 1), t * lin(1, 2)) == t);
}

TEST_CASE("resultant examples") {
  CHECK(abs(resultant(lin(1, 0), lin(0, 1)).re) == 1);
  Rational oracle = root_product_resultant(r(1), {r(1), r(-1)}, lin(1, -2));
  CHECK(oracle == 3);
  CHECK(resultant(lin(1, -1) * lin(1, 1), lin(1, -2)) == Gaussian(oracle));
  CHECK(resultant(lin(1, -1), lin(1, -1) * lin(1, 1)).is_zero());
}

TEST_CASE("squarefree part examples") {
  BinaryForm a = lin(1, -1);
  CHECK(squarefree_part(a * a) == a);
  BinaryForm circle = BinaryForm::from_rationals({r(1), r(0), r(1)});
  CHECK(squarefree_part(circle) == circle);
  BinaryForm f = a * a * a * lin(1, 1);
  // oracle: f / gcd(f, f') computed independently on the affine polynomial
  QPoly fa = f.affine_real();
  QPoly expected = exact_div(fa, gcd(fa, fa.derivative())).monic();
  CHECK(squarefree_part(f) == BinaryForm::homogenize(expected, 2));
  CHECK(squarefree_part(f) == a * lin(1, 1));
}

TEST_CASE("squarefree decomposition multiplicities") {
  BinaryForm a = lin(1, -1), b = lin(1, 1), t = lin(0, 1);
  auto parts = squarefree_decomposition(a * a * a * b * t * t);
  int total = 0;
  for (auto& [f, m] : parts) total += f.degree() * m;
  CHECK(total == 6);
}

TEST_CASE("isolate_real_roots examples") {
  BinaryForm f = lin(1, 0) * lin(0, 1) * lin(1, -1);
  auto roots = isolate_real_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == AlgebraicReal::rational(r(0)));
  CHECK(roots[1] == AlgebraicReal::rational(r(1)));
  CHECK(roots[2].is_infinity());
  CHECK(isolate_real_roots(BinaryForm::from_rationals({r(1), r(0), r(1)})).empty());

  auto sq2 = isolate_real_roots(BinaryForm::from_rationals({r(1), r(0), r(-2)}));
  REQUIRE(sq2.size() == 2);
  // sign-change oracle: x^2 - 2 changes sign on [1.41, 1.42] and [-1.42, -1.41]
  CHECK(sq2[1] > AlgebraicReal::rational(r(141, 100)));
  CHECK(sq2[1] < AlgebraicReal::rational(r(142, 100)));
  CHECK(sq2[0] < AlgebraicReal::rational(r(-141, 100)));
  CHECK(sq2[0] > AlgebraicReal::rational(r(-142, 100)));
  CHECK(!sq2[0].is_rational());

  CHECK_THROWS_AS(isolate_real_roots(lin(1, -1) * lin(1, -1)), Error);
}

TEST_CASE("conjugate_root_pair examples") {
  auto p = conjugate_root_pair(BinaryForm::from_rationals({r(1), r(0), r(1)}));
  REQUIRE(p);
  CHECK(p->first == ProjPoint1::affine(Gaussian::i()));
  CHECK(p->second == ProjPoint1::affine(-Gaussian::i()));
  CHECK(!conjugate_root_pair(BinaryForm::from_rationals({r(1), r(0), r(-1)})));
  auto q = conjugate_root_pair(BinaryForm::from_rationals({r(1), r(0), r(4)}));
  REQUIRE(q);
  CHECK(q->first == ProjPoint1::affine(Gaussian(r(0), r(2))));
}

TEST_CASE("resultant vanishes iff the gcd is nontrivial") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> deg(1, 4);
    auto pts = distinct_rationals(rng, 8, 5, 3);
    std::vector<ProjPoint1> fr, gr;
    int df = deg(rng), dg = deg(rng);
    for (int k = 0; k < df; ++k) fr.push_back(ProjPoint1::affine(Gaussian(pts[static_cast<size_t>(k)])));
    for (int k = 0; k < dg; ++k) gr.push_back(ProjPoint1::affine(Gaussian(pts[static_cast<size_t>(4 + k)])));
    if (trial % 2 == 0) gr[0] = fr[0];
    BinaryForm f = product_of_linear(fr), g = product_of_linear(gr);
    CHECK(resultant(f, g).is_zero() == (form_gcd(f, g).degree() >= 1));
    auto gd = form_gcd(f, g);
    CHECK(form_divide(f, gd).has_value());
    CHECK(form_divide(g, gd).has_value());
  }
}

TEST_CASE("resultant is multiplicative in the first argument") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto pts = distinct_rationals(rng, 6, 6, 3);
    BinaryForm f = product_of_linear({ProjPoint1::affine(Gaussian(pts[0])), ProjPoint1::affine(Gaussian(pts[1]))});
    BinaryForm h = product_of_linear({ProjPoint1::affine(Gaussian(pts[2]))});
    BinaryForm g = product_of_linear({ProjPoint1::affine(Gaussian(pts[3])), ProjPoint1::affine(Gaussian(pts[4])),
                                      ProjPoint1::affine(Gaussian(pts[5]))});
    CHECK(resultant(f * h, g) == resultant(f, g) * resultant(h, g));
  }
}

TEST_CASE("algebraic comparison agrees with rational comparison") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    Rational a = random_rational(rng, 20, 7), b = random_rational(rng, 20, 7);
    // wrap b as an isolated root of (x - b)(x^2 - 3)
    QPoly pb = QPoly({-b, Rational(1)}) * QPoly({Rational(-3), Rational(0), Rational(1)});
    auto roots = isolate_real_roots(squarefree_part(pb));
    AlgebraicReal ab = AlgebraicReal::rational(b);
    bool found = false;
    for (auto& x : roots)
      if (x == ab) found = true;
    CHECK(found);
    const int c = cmp(a, b);
    CHECK(compare(AlgebraicReal::rational(a), ab) == (c > 0) - (c < 0));
  }
  auto s2 = isolate_real_roots(QPoly({Rational(-2), Rational(0), Rational(1)}));
  auto s8 = isolate_real_roots(QPoly({Rational(-8), Rational(0), Rational(1)}));
  CHECK(s2[1] < s8[1]);
  auto s2b = isolate_real_roots(QPoly({Rational(-2), Rational(0), Rational(1)}) * QPoly({Rational(-5), Rational(1)}));
  CHECK(s2b[1] == s2[1]);
}
