#include "nodal4/algebraic.hpp"

#include "nodal4/error.hpp"

#include <algorithm>
#include <limits>

#include "nodal4/linalg.hpp"
#include <sstream>

namespace nodal4 {

AlgebraicReal AlgebraicReal::rational(const Rational& v) {
  AlgebraicReal a;
  a.kind_ = Kind::Exact;
  a.root_.exact = true;
  a.root_.value = v;
  return a;
}

AlgebraicReal AlgebraicReal::infinity() {
  AlgebraicReal a;
  a.kind_ = Kind::Infinity;
  return a;
}

AlgebraicReal::AlgebraicReal(const QPoly& defining, const Rational& lo, const Rational& hi)
    : kind_(Kind::Isolated), poly_(primitive_part(defining)) {
  root_.lo = lo;
  root_.hi = hi;
  if (sign_at(poly_, lo) == 0 || sign_at(poly_, hi) == 0 || sign_at(poly_, lo) == sign_at(poly_, hi))
    throw std::invalid_argument("interval does not isolate a sign-changing root");
}

AlgebraicReal::AlgebraicReal(const QPoly& defining, const RealRoot& root)
    : kind_(root.exact ? Kind::Exact : Kind::Isolated), poly_(primitive_part(defining)), root_(root) {
  if (root.exact) poly_ = QPoly();
}

const Rational& AlgebraicReal::value() const {
  if (kind_ != Kind::Exact) throw std::logic_error("value() on a non-rational algebraic real");
  return root_.value;
}

QPoly AlgebraicReal::defining_poly() const {
  if (kind_ == Kind::Exact) return primitive_part(QPoly({-root_.value, Rational(1)}));
  if (kind_ == Kind::Infinity) return QPoly::constant(Rational(1));
  return poly_;
}

BinaryForm AlgebraicReal::defining_form() const {
  if (kind_ == Kind::Infinity) return BinaryForm::from_rationals({Rational(0), Rational(1)});
  QPoly p = defining_poly();
  return BinaryForm::homogenize(p, p.degree());
}

Interval AlgebraicReal::enclosure() const {
  if (kind_ == Kind::Infinity) throw std::logic_error("enclosure of [1:0]");
  if (kind_ == Kind::Exact) return Interval(root_.value);
  return Interval(root_.lo, root_.hi);
}

AlgebraicReal AlgebraicReal::refined(const Rational& width) const {
  AlgebraicReal r = *this;
  if (kind_ != Kind::Isolated) return r;
  refine(r.poly_, r.root_, width);
  if (r.root_.exact) r.kind_ = Kind::Exact;
  return r;
}

AlgebraicReal AlgebraicReal::bisected() const {
  AlgebraicReal r = *this;
  if (kind_ != Kind::Isolated) return r;
  bisect(r.poly_, r.root_);
  if (r.root_.exact) r.kind_ = Kind::Exact;
  return r;
}

double AlgebraicReal::approx() const {
  if (kind_ == Kind::Infinity) return std::numeric_limits<double>::infinity();
  if (kind_ == Kind::Exact) return root_.value.get_d();
  AlgebraicReal r = refined(Rational(1, 1) / Rational(Integer(1) << 60));
  return r.enclosure().mid().get_d();
}

std::string AlgebraicReal::debug_string() const {
  std::ostringstream os;
  if (kind_ == Kind::Infinity) return "inf";
  if (kind_ == Kind::Exact) return to_string(root_.value);
  os << "root of [";
  for (size_t k = 0; k < poly_.coeffs().size(); ++k) os << (k ? "," : "") << poly_.coeffs()[k].get_str();
  os << "] in (" << to_string(root_.lo) << ", " << to_string(root_.hi) << ")";
  return os.str();
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  using K = AlgebraicReal::Kind;
  if (a.kind_ == K::Infinity || b.kind_ == K::Infinity) {
    if (a.kind_ == b.kind_) return 0;
    return a.kind_ == K::Infinity ? 1 : -1;
  }
  if (a.kind_ == K::Exact && b.kind_ == K::Exact) {
    const int c = cmp(a.root_.value, b.root_.value);
    return (c > 0) - (c < 0);
  }
  if (a.kind_ == K::Isolated && b.kind_ == K::Exact) return -compare(b, a);
  if (a.kind_ == K::Exact) {
    const Rational& v = a.root_.value;
    AlgebraicReal x = b;
    for (;;) {
      if (x.kind_ == K::Exact) return compare(a, x);
      if (v <= x.root_.lo) return -1;
      if (v >= x.root_.hi) return 1;
      if (sign_at(x.poly_, v) == 0) return 0;
      x = x.bisected();
    }
  }
  // Both isolated: equal iff a common root of the defining polynomials sits
  // in the overlap of the two isolating intervals.
  QPoly g = gcd(a.poly_, b.poly_);
  AlgebraicReal x = a, y = b;
  for (;;) {
    if (x.kind_ == K::Exact || y.kind_ == K::Exact) return compare(x, y);
    if (x.root_.hi <= y.root_.lo) return -1;
    if (y.root_.hi <= x.root_.lo) return 1;
    if (g.degree() >= 1) {
      const Rational lo = x.root_.lo > y.root_.lo ? x.root_.lo : y.root_.lo;
      const Rational hi = x.root_.hi < y.root_.hi ? x.root_.hi : y.root_.hi;
      if (count_roots(sturm_chain(g), lo, hi) > 0) return 0;
    }
    x = x.bisected();
    y = y.bisected();
  }
}

std::vector<AlgebraicReal> isolate_real_roots(const QPoly& f) {
  std::vector<AlgebraicReal> out;
  if (f.degree() <= 0) return out;
  QPoly p = primitive_part(f);
  for (const auto& r : isolate_roots(p)) out.emplace_back(p, r);
  return out;
}

std::vector<AlgebraicReal> isolate_real_roots(const BinaryForm& f) {
  if (!f.is_real() || f.is_zero()) throw std::invalid_argument("isolate_real_roots needs a nonzero real form");
  const int mt = f.infinity_multiplicity();
  QPoly a = f.affine_real();
  if (mt > 1 || gcd(a, a.derivative()).degree() > 0)
    throw Error(ErrorKind::NotSquarefree, "form has a repeated root");
  auto out = isolate_real_roots(a);
  if (mt == 1) out.push_back(AlgebraicReal::infinity());
  return out;
}

size_t match_root(std::vector<AlgebraicReal>& candidates, const std::function<Interval(int)>& enclosure,
                  int max_rounds) {
  for (int round = 0; round < max_rounds; ++round) {
    Interval e = enclosure(round);
    size_t hits = 0, idx = 0;
    for (size_t k = 0; k < candidates.size(); ++k) {
      if (candidates[k].is_infinity()) continue;
      Interval c = candidates[k].enclosure();
      bool meets = candidates[k].is_rational() ? e.contains(c.lo) : (e.lo < c.hi && c.lo < e.hi);
      if (meets) {
        ++hits;
        idx = k;
      }
    }
    if (hits == 1) return idx;
    for (auto& c : candidates)
      if (!c.is_rational() && !c.is_infinity()) c = c.bisected();
  }
  throw Error(ErrorKind::NotGeneric, "could not separate algebraic values");
}

int sign_at(const QPoly& e, const AlgebraicReal& x) {
  if (x.is_infinity()) throw std::invalid_argument("sign_at [1:0]");
  if (x.is_rational()) return sgn(e.eval(x.value()));
  QPoly g = gcd(e, x.defining_poly());
  AlgebraicReal y = x;
  if (g.degree() >= 1) {
    Interval iv = y.enclosure();
    if (count_roots(sturm_chain(g), iv.lo, iv.hi) > 0) return 0;
  }
  for (;;) {
    if (y.is_rational()) return sgn(e.eval(y.value()));
    int s = eval(e, y.enclosure()).certain_sign();
    if (s != 0) return s;
    y = y.bisected();
  }
}

AlgebraicReal evaluate_rational_function(const QPoly& m, const AlgebraicReal& x, const QPoly& num, const QPoly& den) {
  if (x.is_infinity()) throw std::invalid_argument("evaluate_rational_function at [1:0]");
  if (x.is_rational()) {
    const Rational d = den.eval(x.value());
    if (sgn(d) == 0) throw std::domain_error("denominator vanishes");
    return AlgebraicReal::rational(num.eval(x.value()) / d);
  }
  if (sign_at(den % m, x) == 0) throw std::domain_error("denominator vanishes");
  // Drop the roots of m where den vanishes; x is not among them.
  const QPoly mx = exact_div(m, gcd(m, den % m));
  const QPoly n = num % mx, d = den % mx;
  // R(y) = Res_T(m(T), d(T) y - n(T)) has the value among its roots; the
  // second argument gets a fixed formal degree so interpolation is valid.
  const size_t formal = static_cast<size_t>(std::max({n.degree(), d.degree(), 0})) + 1;
  std::vector<Rational> m_desc(mx.coeffs().rbegin(), mx.coeffs().rend());
  std::vector<Rational> ys, vals;
  for (int k = 0; k <= mx.degree(); ++k) {
    const Rational y(k);
    QPoly g = d.scaled(y) - n;
    std::vector<Rational> g_desc(formal, Rational(0));
    for (int j = 0; j <= g.degree(); ++j) g_desc[formal - 1 - static_cast<size_t>(j)] = g.coeff(j);
    ys.push_back(y);
    vals.push_back(sylvester_resultant(m_desc, g_desc));
  }
  QPoly r = squarefree_part(interpolate(ys, vals));
  auto candidates = isolate_real_roots(r);
  AlgebraicReal xr = x;
  size_t idx = match_root(candidates, [&](int) {
    for (;;) {
      Interval dv = eval(d, xr.enclosure());
      if (dv.certain_sign() != 0) {
        Interval out = eval(n, xr.enclosure()) / dv;
        xr = xr.bisected();
        return out;
      }
      xr = xr.bisected();
    }
  });
  return candidates[idx];
}

}  // namespace nodal4
