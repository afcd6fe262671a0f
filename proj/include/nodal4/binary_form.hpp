#pragma once

#include "nodal4/gaussian.hpp"
#include "nodal4/linalg.hpp"
#include "nodal4/poly.hpp"

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace nodal4 {

/// Point [a:b] of the complex projective line.
struct ProjPoint1 {
  Gaussian a;
  Gaussian b;

  /// [0:1].
  ProjPoint1() : a(0), b(1) {}
  ProjPoint1(Gaussian a_, Gaussian b_);
  /// [x:1].
  static ProjPoint1 affine(const Gaussian& x) { return {x, Gaussian(1)}; }
  static ProjPoint1 infinity() { return {Gaussian(1), Gaussian(0)}; }

  bool is_real() const;
  bool is_infinity() const { return b.is_zero(); }
  ProjPoint1 conj() const { return {a.conj(), b.conj()}; }
  /// a/b; requires a finite point.
  Gaussian chart_value() const { return a / b; }

  /// Projective equality: a*b' == a'*b.
  friend bool operator==(const ProjPoint1& p, const ProjPoint1& q) { return p.a * q.b == q.a * p.b; }
  friend bool operator!=(const ProjPoint1& p, const ProjPoint1& q) { return !(p == q); }
};

/// Homogeneous polynomial sum_k c_k s^(d-k) t^k over the Gaussian
/// rationals. The zero form keeps its nominal degree but has no nonzero
/// coefficient.
class BinaryForm {
 public:
  BinaryForm() : BinaryForm(0, {Gaussian(0)}) {}
  BinaryForm(int degree, std::vector<Gaussian> coeffs);
  static BinaryForm from_rationals(const std::vector<Rational>& coeffs);
  static BinaryForm zero(int degree) { return BinaryForm(degree, std::vector<Gaussian>(static_cast<size_t>(degree) + 1)); }
  static BinaryForm constant(const Gaussian& v) { return BinaryForm(0, {v}); }
  /// b*s - a*t, vanishing at [a:b].
  static BinaryForm linear_vanishing_at(const ProjPoint1& p);
  /// Homogenizes an affine polynomial in x = s/t to the given degree.
  static BinaryForm homogenize(const GPoly& p, int degree);
  static BinaryForm homogenize(const QPoly& p, int degree);

  int degree() const { return degree_; }
  const std::vector<Gaussian>& coeffs() const { return c_; }
  const Gaussian& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  bool is_zero() const;
  bool is_real() const;
  /// Real parts; requires is_real().
  std::vector<Rational> real_coeffs() const;

  Gaussian eval(const ProjPoint1& p) const;
  Gaussian eval(const Gaussian& s, const Gaussian& t) const;

  /// f(x, 1) as a polynomial in x.
  GPoly affine() const;
  /// f(x, 1) for a real form.
  QPoly affine_real() const;
  /// Multiplicity of [1:0] as a root (number of leading zero coefficients).
  int infinity_multiplicity() const;

  /// First nonzero coefficient scaled to 1; the zero form is returned as is.
  BinaryForm normalized() const;
  BinaryForm conj() const;
  BinaryForm scaled(const Gaussian& k) const;
  /// f(m00 s + m01 t, m10 s + m11 t).
  BinaryForm substitute(const std::array<std::array<Rational, 2>, 2>& m) const;
  BinaryForm d_ds() const;
  BinaryForm d_dt() const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BinaryForm& a, const BinaryForm& b) { return !(a == b); }

 private:
  int degree_;
  std::vector<Gaussian> c_;
};

/// Normalized gcd (first nonzero coefficient 1); real inputs give a real result.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);
/// Exact quotient f / g, nullopt when g does not divide f.
std::optional<BinaryForm> form_divide(const BinaryForm& f, const BinaryForm& g);
/// Sylvester determinant with the f rows first.
Gaussian resultant(const BinaryForm& f, const BinaryForm& g);
BinaryForm squarefree_part(const BinaryForm& f);
/// Yun decomposition: (factor, multiplicity) with all factors squarefree,
/// pairwise coprime and normalized; the product equals f up to a constant.
std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f);
/// Conjugate roots ([z:1], [conj z:1]) of a real quadratic with negative
/// discriminant when they are Gaussian rationals; nullopt otherwise.
std::optional<std::pair<ProjPoint1, ProjPoint1>> conjugate_root_pair(const BinaryForm& f);

}  // namespace nodal4
