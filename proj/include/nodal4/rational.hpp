#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nodal4 {

using Integer = mpz_class;
/// Arbitrary precision rational; gmp keeps it reduced with a positive
/// denominator after every arithmetic operation.
using Rational = mpq_class;

inline int sign(const Rational& r) { return sgn(r); }
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// "num/den", always with an explicit denominator.
std::string to_string(const Rational& r);
/// Accepts "a", "a/b" and plain decimals such as "-1.25".
Rational parse_rational(std::string_view text);

Rational floor(const Rational& r);
Rational ceil(const Rational& r);

/// The rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace nodal4
