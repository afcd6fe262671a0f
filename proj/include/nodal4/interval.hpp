#pragma once

#include "nodal4/poly.hpp"

#include <algorithm>

namespace nodal4 {

/// Closed rational interval [lo, hi] with outward-exact arithmetic.
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(const Rational& v) : lo(v), hi(v) {}  // NOLINT(implicit)
  Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {}

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
  /// +1 / -1 when the interval is strictly signed, 0 otherwise.
  int certain_sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
  }
  /// Requires b to exclude zero.
  friend Interval operator/(const Interval& a, const Interval& b) {
    Rational inv_lo = 1 / b.hi, inv_hi = 1 / b.lo;
    return a * Interval(inv_lo, inv_hi);
  }
};

inline Interval eval(const QPoly& p, const Interval& x) {
  Interval r(Rational(0));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + Interval(*it);
  return r;
}

}  // namespace nodal4
