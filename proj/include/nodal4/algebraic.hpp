#pragma once

#include "nodal4/binary_form.hpp"
#include "nodal4/interval.hpp"
#include "nodal4/real_roots.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nodal4 {

/// A real point of RP^1 in the chart x = s/t: an exact rational, a root of
/// a squarefree integer polynomial pinned by an isolating interval, or the
/// point [1:0], which orders after every finite value.
class AlgebraicReal {
 public:
  static AlgebraicReal rational(const Rational& v);
  static AlgebraicReal infinity();
  /// `defining` squarefree with exactly one root in (lo, hi), endpoints not roots.
  AlgebraicReal(const QPoly& defining, const Rational& lo, const Rational& hi);
  AlgebraicReal(const QPoly& defining, const RealRoot& root);

  bool is_infinity() const { return kind_ == Kind::Infinity; }
  bool is_rational() const { return kind_ == Kind::Exact; }
  /// Exact value; requires is_rational().
  const Rational& value() const;
  /// Primitive integer defining polynomial (x - v for rationals).
  QPoly defining_poly() const;
  BinaryForm defining_form() const;
  /// [v, v] for rationals; requires a finite point.
  Interval enclosure() const;

  /// Copy with isolating interval narrower than `width` (or exact).
  AlgebraicReal refined(const Rational& width) const;
  /// One bisection step.
  AlgebraicReal bisected() const;
  double approx() const;
  std::string debug_string() const;

  friend int compare(const AlgebraicReal& a, const AlgebraicReal& b);
  friend bool operator<(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) < 0; }
  friend bool operator>(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) > 0; }
  friend bool operator==(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) == 0; }
  friend bool operator!=(const AlgebraicReal& a, const AlgebraicReal& b) { return compare(a, b) != 0; }

 private:
  enum class Kind { Exact, Isolated, Infinity };
  AlgebraicReal() = default;

  Kind kind_ = Kind::Exact;
  QPoly poly_;
  RealRoot root_;
};

/// Real roots of a real squarefree binary form in chart order, [1:0] last.
/// Throws NotSquarefree.
std::vector<AlgebraicReal> isolate_real_roots(const BinaryForm& f);
/// Real roots of a squarefree univariate polynomial, ascending.
std::vector<AlgebraicReal> isolate_real_roots(const QPoly& f);

/// Index of the single candidate whose isolating interval meets the value
/// enclosure. `enclosure(k)` must return enclosures that shrink to the true
/// value as k grows and the true value must be one of the candidates;
/// candidates are refined in place. Throws NotGeneric when no decision is
/// reached within `max_rounds`.
size_t match_root(std::vector<AlgebraicReal>& candidates, const std::function<Interval(int)>& enclosure,
                  int max_rounds = 4000);

/// Sign of e at an algebraic point, decided exactly: by gcd when e shares
/// the defining polynomial's root, by refinement otherwise.
int sign_at(const QPoly& e, const AlgebraicReal& x);

}  // namespace nodal4

namespace nodal4 {

/// num(x)/den(x) at a root x of the squarefree polynomial m, as an
/// algebraic real (exact when rational). den must not vanish at x.
AlgebraicReal evaluate_rational_function(const QPoly& m, const AlgebraicReal& x, const QPoly& num, const QPoly& den);

}  // namespace nodal4
