#include "nodal4/binary_form.hpp"

#include "nodal4/error.hpp"

#include <stdexcept>

namespace nodal4 {

ProjPoint1::ProjPoint1(Gaussian a_, Gaussian b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("[0:0] is not a projective point");
}

bool ProjPoint1::is_real() const {
  // Real iff some representative is real: a*conj(b) must be real.
  return (a * b.conj()).is_real();
}

BinaryForm::BinaryForm(int degree, std::vector<Gaussian> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<size_t>(degree) + 1)
    throw std::invalid_argument("binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::from_rationals(const std::vector<Rational>& coeffs) {
  std::vector<Gaussian> c(coeffs.begin(), coeffs.end());
  const int d = static_cast<int>(c.size()) - 1;
  return BinaryForm(d, std::move(c));
}

BinaryForm BinaryForm::linear_vanishing_at(const ProjPoint1& p) { return BinaryForm(1, {p.b, -p.a}); }

BinaryForm BinaryForm::homogenize(const GPoly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("homogenize: degree too small");
  std::vector<Gaussian> c(static_cast<size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) c[static_cast<size_t>(k)] = p.coeff(degree - k);
  return BinaryForm(degree, std::move(c));
}

BinaryForm BinaryForm::homogenize(const QPoly& p, int degree) {
  if (p.degree() > degree) throw std::invalid_argument("homogenize: degree too small");
  std::vector<Gaussian> c(static_cast<size_t>(degree) + 1);
  for (int k = 0; k <= degree; ++k) c[static_cast<size_t>(k)] = Gaussian(p.coeff(degree - k));
  return BinaryForm(degree, std::move(c));
}

bool BinaryForm::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

bool BinaryForm::is_real() const {
  for (const auto& v : c_)
    if (!v.is_real()) return false;
  return true;
}

std::vector<Rational> BinaryForm::real_coeffs() const {
  if (!is_real()) throw std::logic_error("real_coeffs on a non-real form");
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& v : c_) r.push_back(v.re);
  return r;
}

Gaussian BinaryForm::eval(const Gaussian& s, const Gaussian& t) const {
  std::vector<Gaussian> spow(c_.size(), Gaussian(1)), tpow(c_.size(), Gaussian(1));
  for (size_t k = 1; k < c_.size(); ++k) {
    spow[k] = spow[k - 1] * s;
    tpow[k] = tpow[k - 1] * t;
  }
  Gaussian r(0);
  for (size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    r += c_[k] * spow[c_.size() - 1 - k] * tpow[k];
  }
  return r;
}

Gaussian BinaryForm::eval(const ProjPoint1& p) const { return eval(p.a, p.b); }

GPoly BinaryForm::affine() const {
  std::vector<Gaussian> c(c_.rbegin(), c_.rend());
  return GPoly(std::move(c));
}

QPoly BinaryForm::affine_real() const {
  auto r = real_coeffs();
  return QPoly(std::vector<Rational>(r.rbegin(), r.rend()));
}

int BinaryForm::infinity_multiplicity() const {
  int m = 0;
  while (m <= degree_ && c_[static_cast<size_t>(m)].is_zero()) ++m;
  return m;
}

BinaryForm BinaryForm::normalized() const {
  const int m = infinity_multiplicity();
  if (m > degree_) return *this;
  return scaled(c_[static_cast<size_t>(m)].inverse());
}

BinaryForm BinaryForm::conj() const {
  std::vector<Gaussian> c = c_;
  for (auto& v : c) v = v.conj();
  return BinaryForm(degree_, std::move(c));
}

BinaryForm BinaryForm::scaled(const Gaussian& k) const {
  std::vector<Gaussian> c = c_;
  for (auto& v : c) v *= k;
  return BinaryForm(degree_, std::move(c));
}

BinaryForm BinaryForm::substitute(const std::array<std::array<Rational, 2>, 2>& m) const {
  const BinaryForm l1 = BinaryForm::from_rationals({m[0][0], m[0][1]});
  const BinaryForm l2 = BinaryForm::from_rationals({m[1][0], m[1][1]});
  std::vector<BinaryForm> p1(static_cast<size_t>(degree_) + 1, BinaryForm::constant(Gaussian(1)));
  std::vector<BinaryForm> p2 = p1;
  for (size_t k = 1; k < p1.size(); ++k) {
    p1[k] = p1[k - 1] * l1;
    p2[k] = p2[k - 1] * l2;
  }
  BinaryForm r = BinaryForm::zero(degree_);
  for (int k = 0; k <= degree_; ++k) {
    const auto& c = c_[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    r = r + (p1[static_cast<size_t>(degree_ - k)] * p2[static_cast<size_t>(k)]).scaled(c);
  }
  return r;
}

BinaryForm BinaryForm::d_ds() const {
  if (degree_ == 0) return BinaryForm::zero(0);
  std::vector<Gaussian> c(static_cast<size_t>(degree_));
  for (int k = 0; k < degree_; ++k) c[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] * Gaussian(degree_ - k);
  return BinaryForm(degree_ - 1, std::move(c));
}

BinaryForm BinaryForm::d_dt() const {
  if (degree_ == 0) return BinaryForm::zero(0);
  std::vector<Gaussian> c(static_cast<size_t>(degree_));
  for (int k = 1; k <= degree_; ++k) c[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * Gaussian(k);
  return BinaryForm(degree_ - 1, std::move(c));
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Gaussian> c(static_cast<size_t>(a.degree_ + b.degree_) + 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return BinaryForm(a.degree_ + b.degree_, std::move(c));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("adding forms of different degree");
  std::vector<Gaussian> c = a.c_;
  for (size_t k = 0; k < c.size(); ++k) c[k] += b.c_[k];
  return BinaryForm(a.degree_, std::move(c));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) { return a + b.scaled(Gaussian(-1)); }

namespace {

BinaryForm t_power(int m) {
  std::vector<Gaussian> c(static_cast<size_t>(m) + 1);
  c.back() = Gaussian(1);
  return BinaryForm(m, std::move(c));
}

}  // namespace

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g.normalized();
  if (g.is_zero()) return f.normalized();
  const int mt = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
  BinaryForm core = BinaryForm::constant(Gaussian(1));
  if (f.is_real() && g.is_real()) {
    QPoly h = gcd(f.affine_real(), g.affine_real());
    core = BinaryForm::homogenize(h, h.degree());
  } else {
    GPoly h = gcd(f.affine(), g.affine());
    core = BinaryForm::homogenize(h, h.degree());
  }
  return (t_power(mt) * core).normalized();
}

std::optional<BinaryForm> form_divide(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero() || g.degree() > f.degree()) return std::nullopt;
  const int n = f.degree() - g.degree();
  const int j0 = g.infinity_multiplicity();
  const Gaussian inv = g.coeff(j0).inverse();
  std::vector<Gaussian> q(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    if (k + j0 > f.degree()) break;
    Gaussian acc = f.coeff(k + j0);
    for (int i = 0; i < k; ++i) {
      const int gi = k + j0 - i;
      if (gi <= g.degree()) acc -= q[static_cast<size_t>(i)] * g.coeff(gi);
    }
    q[static_cast<size_t>(k)] = acc * inv;
  }
  BinaryForm quotient(n, std::move(q));
  if (quotient * g != f) return std::nullopt;
  return quotient;
}

Gaussian resultant(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_real() && g.is_real()) return Gaussian(sylvester_resultant(f.real_coeffs(), g.real_coeffs()));
  return sylvester_resultant(f.coeffs(), g.coeffs());
}

namespace {

template <class F>
std::vector<std::pair<Poly<F>, int>> yun(const Poly<F>& f) {
  std::vector<std::pair<Poly<F>, int>> out;
  if (f.degree() <= 0) return out;
  Poly<F> a0 = gcd(f, f.derivative());
  Poly<F> b = exact_div(f, a0);
  Poly<F> c = exact_div(f.derivative(), a0);
  Poly<F> d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Poly<F> a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.monic(), i);
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = c - b.derivative();
  }
  return out;
}

}  // namespace

BinaryForm squarefree_part(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_part of the zero form");
  const int mt = std::min(f.infinity_multiplicity(), 1);
  BinaryForm core = BinaryForm::constant(Gaussian(1));
  if (f.is_real()) {
    QPoly h = squarefree_part(f.affine_real());
    core = BinaryForm::homogenize(h, h.degree());
  } else {
    GPoly h = squarefree_part(f.affine());
    core = BinaryForm::homogenize(h, h.degree());
  }
  return (t_power(mt) * core).normalized();
}

std::vector<std::pair<BinaryForm, int>> squarefree_decomposition(const BinaryForm& f) {
  if (f.is_zero()) throw std::invalid_argument("squarefree_decomposition of the zero form");
  std::vector<std::pair<BinaryForm, int>> out;
  const int mt = f.infinity_multiplicity();
  if (mt > 0) out.emplace_back(t_power(1), mt);
  if (f.is_real()) {
    for (auto& [p, m] : yun(f.affine_real())) out.emplace_back(BinaryForm::homogenize(p, p.degree()).normalized(), m);
  } else {
    for (auto& [p, m] : yun(f.affine())) out.emplace_back(BinaryForm::homogenize(p, p.degree()).normalized(), m);
  }
  return out;
}

std::optional<std::pair<ProjPoint1, ProjPoint1>> conjugate_root_pair(const BinaryForm& f) {
  if (f.degree() != 2 || !f.is_real()) throw std::invalid_argument("conjugate_root_pair needs a real quadratic");
  auto c = f.real_coeffs();
  Rational disc = c[1] * c[1] - 4 * c[0] * c[2];
  if (sgn(disc) >= 0) return std::nullopt;
  Rational neg = -disc;
  if (!mpz_perfect_square_p(neg.get_num_mpz_t()) || !mpz_perfect_square_p(neg.get_den_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), neg.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), neg.get_den_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  Rational re = -c[1] / (2 * c[0]);
  Rational im = root / (2 * c[0]);
  if (sgn(im) < 0) im = -im;
  return std::make_pair(ProjPoint1::affine(Gaussian(re, im)), ProjPoint1::affine(Gaussian(re, -im)));
}

}  // namespace nodal4
