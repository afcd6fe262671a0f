#pragma once

#include "nodal4/gaussian.hpp"
#include "nodal4/rational.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nodal4 {

/// Dense univariate polynomial over a field F (Rational or Gaussian).
/// Coefficients are stored lowest degree first and kept trimmed, so the
/// zero polynomial has no coefficients and degree -1.
template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& v) { return Poly(std::vector<F>{v}); }
  static Poly monomial(const F& v, int k) {
    std::vector<F> c(static_cast<size_t>(k) + 1, F(0));
    c.back() = v;
    return Poly(std::move(c));
  }
  static Poly x() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return F(0);
    return c_[static_cast<size_t>(k)];
  }
  const F& lead() const {
    assert(!c_.empty());
    return c_.back();
  }

  F eval(const F& x) const {
    F r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      r *= x;
      r += *it;
    }
    return r;
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(F(1) / lead());
  }

  Poly scaled(const F& k) const {
    std::vector<F> c = c_;
    for (auto& v : c) v *= k;
    return Poly(std::move(c));
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> c(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) c[k - 1] = c_[k] * F(static_cast<long>(k));
    return Poly(std::move(c));
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + constant(*it);
    return r;
  }

  Poly operator-() const { return scaled(F(-1)); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<F> c(std::max(a.c_.size(), b.c_.size()), F(0));
    for (size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (nodal4::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && nodal4::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

/// Quotient and remainder; throws std::domain_error on division by zero.
template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<F>(), a};
  std::vector<F> r = a.coeffs();
  std::vector<F> q(static_cast<size_t>(a.degree() - b.degree() + 1), F(0));
  const F inv = F(1) / b.lead();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const F f = r[static_cast<size_t>(k)] * inv;
    if (is_zero(f)) continue;
    q[static_cast<size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k - db + j)] -= f * b.coeffs()[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(db));
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).first;
}

/// Exact quotient or std::domain_error when b does not divide a.
template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, u, v) with u*a + v*b = g, g monic.
template <class F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(F(1)), s1;
  Poly<F> t0, t1 = Poly<F>::constant(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const F inv = F(1) / r0.lead();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// Inverse of a modulo m, or std::domain_error when gcd(a, m) != 1.
template <class F>
Poly<F> inverse_mod(const Poly<F>& a, const Poly<F>& m) {
  auto [g, u, v] = ext_gcd(a % m, m);
  if (g.degree() != 0) throw std::domain_error("polynomial not invertible modulo m");
  return u % m;
}

/// Product of the distinct irreducible factors (monic).
template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
  if (f.degree() <= 0) return f.is_zero() ? f : Poly<F>::constant(F(1));
  return exact_div(f, gcd(f, f.derivative())).monic();
}

using QPoly = Poly<Rational>;
using GPoly = Poly<Gaussian>;

}  // namespace nodal4
