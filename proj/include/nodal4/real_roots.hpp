#pragma once

#include "nodal4/interval.hpp"
#include "nodal4/poly.hpp"

#include <vector>

namespace nodal4 {

/// Root of a squarefree rational polynomial on the real line: either an
/// exact rational or an open isolating interval (lo, hi) whose endpoints
/// are not roots and carry opposite signs.
struct RealRoot {
  bool exact = false;
  Rational value;  // valid when exact
  Rational lo, hi;  // valid when !exact
};

int sign_at(const QPoly& p, const Rational& x);

/// Sturm chain p, p', -rem(...), ...
std::vector<QPoly> sturm_chain(const QPoly& p);
/// Number of distinct real roots in (a, b]; a and b must not be roots.
int count_roots(const std::vector<QPoly>& chain, const Rational& a, const Rational& b);
/// Number of distinct real roots on the whole line.
int count_real_roots(const QPoly& p);
/// Cauchy bound: every root has |x| < bound.
Rational root_bound(const QPoly& p);

/// Isolates every real root of a squarefree polynomial, ascending. Roots
/// that are rational are always reported exactly.
std::vector<RealRoot> isolate_roots(const QPoly& squarefree);

/// Halves the isolating interval (may turn the root exact).
void bisect(const QPoly& p, RealRoot& r);
/// Refines until the interval width is below `width` or the root is exact.
void refine(const QPoly& p, RealRoot& r, const Rational& width);

/// Scales to integer coefficients with content 1 and positive leading term.
QPoly primitive_part(const QPoly& p);

}  // namespace nodal4
