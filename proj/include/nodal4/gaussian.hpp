#pragma once

#include "nodal4/rational.hpp"

#include <ostream>

namespace nodal4 {

/// re + i*im over the rationals.
struct Gaussian {
  Rational re;
  Rational im;

  Gaussian() = default;
  Gaussian(const Rational& r) : re(r), im(0) {}  // NOLINT(implicit)
  Gaussian(long r) : re(r), im(0) {}             // NOLINT(implicit)
  Gaussian(const Rational& r, const Rational& i) : re(r), im(i) {}

  static Gaussian i() { return Gaussian(Rational(0), Rational(1)); }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  Gaussian conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }
  Gaussian inverse() const;

  Gaussian operator-() const { return {-re, -im}; }
  Gaussian& operator+=(const Gaussian& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o) { return *this *= o.inverse(); }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

inline bool is_zero(const Gaussian& g) { return g.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Gaussian& g);

}  // namespace nodal4
