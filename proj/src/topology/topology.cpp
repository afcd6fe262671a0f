#include "nodal4/topology.hpp"

#include "nodal4/classify.hpp"
#include "nodal4/error.hpp"
#include "nodal4/linalg.hpp"
#include "nodal4/nodes.hpp"
#include "raster_grid.hpp"

#include <algorithm>
#include <cmath>

namespace nodal4 {

// --- ternary forms -------------------------------------------------------

TernaryForm TernaryForm::linear(const std::array<Rational, 3>& l) {
  TernaryForm f(1);
  f.set({1, 0, 0}, l[0]);
  f.set({0, 1, 0}, l[1]);
  f.set({0, 0, 1}, l[2]);
  return f;
}

std::vector<Exponent3> TernaryForm::monomials(int d) {
  std::vector<Exponent3> out;
  for (int a = d; a >= 0; --a)
    for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  return out;
}

Rational TernaryForm::coefficient(const Exponent3& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void TernaryForm::set(const Exponent3& e, const Rational& v) {
  if (e[0] + e[1] + e[2] != degree_ || e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw std::invalid_argument("monomial of the wrong degree");
  if (sgn(v) == 0)
    terms_.erase(e);
  else
    terms_[e] = v;
}

Rational TernaryForm::eval(const std::array<Rational, 3>& x) const {
  Rational r(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    r += t;
  }
  return r;
}

double TernaryForm::eval(const std::array<double, 3>& x) const {
  double r = 0;
  for (const auto& [e, c] : terms_) r += c.get_d() * std::pow(x[0], e[0]) * std::pow(x[1], e[1]) * std::pow(x[2], e[2]);
  return r;
}

TernaryForm TernaryForm::derivative(int k) const {
  TernaryForm d(degree_ - 1);
  for (const auto& [e, c] : terms_) {
    if (e[static_cast<size_t>(k)] == 0) continue;
    Exponent3 f = e;
    --f[static_cast<size_t>(k)];
    d.set(f, d.coefficient(f) + c * e[static_cast<size_t>(k)]);
  }
  return d;
}

TernaryForm TernaryForm::scaled(const Rational& k) const {
  TernaryForm out(degree_);
  for (const auto& [e, c] : terms_) out.set(e, c * k);
  return out;
}

TernaryForm operator+(const TernaryForm& a, const TernaryForm& b) {
  if (a.degree_ != b.degree_) throw std::invalid_argument("adding forms of different degree");
  TernaryForm out = a;
  for (const auto& [e, c] : b.terms_) out.set(e, out.coefficient(e) + c);
  return out;
}

TernaryForm operator*(const TernaryForm& a, const TernaryForm& b) {
  TernaryForm out(a.degree_ + b.degree_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      const Exponent3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out.set(e, out.coefficient(e) + ca * cb);
    }
  return out;
}

TernaryForm TernaryForm::substitute(const Mat3& m) const {
  std::array<std::vector<TernaryForm>, 3> pw;
  for (size_t i = 0; i < 3; ++i) {
    TernaryForm one(0);
    one.set({0, 0, 0}, Rational(1));
    pw[i].push_back(one);
    const TernaryForm l = linear(m[i]);
    for (int k = 1; k <= degree_; ++k) pw[i].push_back(pw[i].back() * l);
  }
  TernaryForm out(degree_);
  for (const auto& [e, c] : terms_) out = out + (pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] *
                                                 pw[2][static_cast<size_t>(e[2])]).scaled(c);
  return out;
}

BinaryForm TernaryForm::compose(const Curve& c) const {
  std::array<std::vector<BinaryForm>, 3> pw;
  for (size_t i = 0; i < 3; ++i) {
    pw[i].push_back(BinaryForm::constant(Gaussian(1)));
    for (int k = 1; k <= degree_; ++k) pw[i].push_back(pw[i].back() * c.p[i]);
  }
  BinaryForm out = BinaryForm::zero(4 * degree_);
  for (const auto& [e, k] : terms_)
    out = out + (pw[0][static_cast<size_t>(e[0])] * pw[1][static_cast<size_t>(e[1])] * pw[2][static_cast<size_t>(e[2])])
                    .scaled(Gaussian(k));
  return out;
}

// --- implicitization -----------------------------------------------------

ImplicitQuartic implicitize(const Curve& c) {
  c.validate();
  // F(theta) = 0 is a linear system in the 15 coefficients of F: one
  // equation per coefficient of the degree-16 binary form.
  const auto mons = TernaryForm::monomials(4);
  Matrix<Rational> a(17, std::vector<Rational>(mons.size()));
  for (size_t j = 0; j < mons.size(); ++j) {
    TernaryForm m(4);
    m.set(mons[j], Rational(1));
    const BinaryForm img = m.compose(c);
    for (int k = 0; k <= 16; ++k) a[static_cast<size_t>(k)][j] = img.coeff(k).re;
  }
  const auto basis = nullspace(a, mons.size());
  if (basis.size() != 1)
    throw Error(ErrorKind::ImplicitizationFailure,
                std::to_string(basis.size()) + " independent quartics vanish on the curve, expected 1");
  Rational big(0);
  for (const auto& v : basis[0]) big = std::max(big, Rational(abs(v)));
  TernaryForm f(4);
  for (size_t j = 0; j < mons.size(); ++j) f.set(mons[j], basis[0][j] / big);
  if (!f.compose(c).is_zero()) throw Error(ErrorKind::ImplicitizationFailure, "F(theta) does not vanish");
  return f;
}

namespace {

// Res over x2 of f(1, y, x2) and g(1, y, x2) as a binary form in (x0, x1).
BinaryForm eliminate_last(const TernaryForm& f, const TernaryForm& g) {
  const int df = f.degree(), dg = g.degree(), d = df * dg;
  auto column = [](const TernaryForm& h, const Rational& y) {
    std::vector<Rational> v(static_cast<size_t>(h.degree()) + 1, Rational(0));
    for (const auto& [e, c] : h.terms()) {
      Rational t = c;
      for (int k = 0; k < e[1]; ++k) t *= y;
      v[static_cast<size_t>(h.degree() - e[2])] += t;
    }
    return v;
  };
  std::vector<Rational> xs, ys;
  for (long k = 0; k <= d; ++k) {
    const Rational y(k);
    xs.push_back(y);
    ys.push_back(sylvester_resultant(column(f, y), column(g, y)));
  }
  return BinaryForm::homogenize(interpolate(xs, ys), d);
}

}  // namespace

bool is_nonsingular(const TernaryForm& f) {
  if (f.is_zero()) return false;
  for (long attempt = 0; attempt < 6; ++attempt) {
    Mat3 m = identity3();
    m[0][2] = Rational(attempt);
    m[1][2] = Rational(2 * attempt - 1) * Rational(attempt % 2 == 0 ? 1 : -1);
    const TernaryForm g = attempt == 0 ? f : f.substitute(m);
    std::array<TernaryForm, 3> d{g.derivative(0), g.derivative(1), g.derivative(2)};
    // [0:0:1] is invisible to the elimination below.
    const std::array<Rational, 3> pole{Rational(0), Rational(0), Rational(1)};
    if (std::all_of(d.begin(), d.end(), [&](const TernaryForm& h) { return sgn(h.eval(pole)) == 0; })) return false;
    if (std::any_of(d.begin(), d.end(), [](const TernaryForm& h) { return h.is_zero(); })) continue;
    // A singular point [a:b:c] with (a, b) != 0 makes every pairwise
    // resultant vanish at [a:b].
    BinaryForm gc = eliminate_last(d[0], d[1]);
    for (const auto& r : {eliminate_last(d[0], d[2]), eliminate_last(d[1], d[2])}) {
      if (gc.is_zero()) {
        gc = r;
      } else if (!r.is_zero()) {
        gc = form_gcd(gc, r);
      }
    }
    if (!gc.is_zero() && gc.degree() == 0) return true;
  }
  return false;
}

// --- lines ---------------------------------------------------------------

std::vector<int> line_multiplicities(const Curve& c, const std::array<Rational, 3>& line) {
  BinaryForm f = BinaryForm::zero(4);
  for (size_t i = 0; i < 3; ++i) f = f + c.p[i].scaled(Gaussian(line[i]));
  if (f.is_zero()) throw std::invalid_argument("line contains the curve");
  std::vector<int> out;
  for (const auto& [factor, mult] : squarefree_decomposition(f))
    for (int k = 0; k < factor.degree(); ++k) out.push_back(mult);
  std::sort(out.begin(), out.end());
  return out;
}

// --- ovals ---------------------------------------------------------------

namespace {

std::array<double, 3> approx_position(const Node& n) {
  std::array<double, 3> p{};
  for (size_t i = 0; i < 3; ++i) p[i] = n.position[i].approx();
  return p;
}

std::vector<std::array<double, 3>> solitary_points(const Curve& c) {
  std::vector<std::array<double, 3>> pts;
  for (const auto& n : classify(c).nodes)
    if (n.kind == NodeKind::Solitary) pts.push_back(approx_position(n));
  return pts;
}

}  // namespace

OvalReport count_ovals(const TernaryForm& f, int resolution, const std::vector<std::array<double, 3>>& points) {
  if (!is_nonsingular(f)) throw Error(ErrorKind::StillSingular, "the quartic has a singular point");
  OvalReport coarse = detail::ovals_at(f, resolution, points);
  coarse.resolution = resolution;
  const OvalReport fine = detail::ovals_at(f, 2 * resolution, points);
  if (coarse.l != fine.l || coarse.injective_pairs != fine.injective_pairs || coarse.depths != fine.depths)
    throw Error(ErrorKind::UnstableResolution, "oval structure changes under resolution doubling");
  return coarse;
}

TernaryForm perturbation_term(const Curve& c) {
  // L must miss every node, not only the solitary ones, or F + eps L^4
  // stays singular there.
  std::vector<std::array<double, 3>> pts;
  for (const auto& n : classify(c).nodes) pts.push_back(approx_position(n));
  std::array<Rational, 3> best{Rational(1), Rational(1), Rational(1)};
  double best_score = -1;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b)
      for (int d = -1; d <= 1; ++d) {
        if (a == 0 && b == 0 && d == 0) continue;
        const double len = std::sqrt(static_cast<double>(a * a + b * b + d * d));
        double score = 1;
        for (const auto& p : pts) {
          const double pl = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
          score = std::min(score, std::abs(a * p[0] + b * p[1] + d * p[2]) / (len * pl));
        }
        if (score > best_score + 1e-12) {
          best_score = score;
          best = {Rational(a), Rational(b), Rational(d)};
        }
      }
  const TernaryForm l = TernaryForm::linear(best);
  const TernaryForm l2 = l * l;
  return l2 * l2;
}

OvalReport perturb_and_count(const Curve& c, const Rational& eps, int resolution) {
  const TernaryForm f = implicitize(c);
  const TernaryForm fe = sgn(eps) == 0 ? f : f + perturbation_term(c).scaled(eps);
  OvalReport rep = count_ovals(fe, resolution, solitary_points(c));
  rep.epsilon = eps;
  return rep;
}

OvalReport perturb_search(const Curve& c, int resolution) {
  const TernaryForm f = implicitize(c);
  const auto pts = solitary_points(c);
  // F keeps one sign around an isolated real zero; pushing the node value
  // to the other sign opens a small oval there.
  int local = 0;
  if (!pts.empty()) {
    const auto& p = pts.front();
    const double len = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    double sum = 0;
    for (int k = 0; k < 3; ++k) {
      std::array<double, 3> q{p[0] / len, p[1] / len, p[2] / len};
      q[static_cast<size_t>(k)] += 1e-3;
      sum += f.eval(q);
    }
    local = sum > 0 ? 1 : -1;
  }
  const int first = local > 0 ? -1 : 1;
  std::string last = "no attempt";
  for (int sign : {first, -first}) {
    Rational eps = Rational(sign) / 1024;
    for (int attempt = 0; attempt <= 10; ++attempt, eps /= 2) {
      for (int res = resolution;; res *= 2) {
        try {
          return perturb_and_count(c, eps, res);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::StillSingular && e.kind() != ErrorKind::UnstableResolution) throw;
          last = e.what();
          if (e.kind() == ErrorKind::StillSingular || res >= kMaxRetryResolution) break;
        }
      }
    }
  }
  throw Error(ErrorKind::StillSingular, "no perturbation produced a resolvable nonsingular quartic (" + last + ")");
}

bool rokhlin_check(int l, int pi_plus, int pi_minus, int d) {
  if (l < 0 || pi_plus < 0 || pi_minus < 0 || d < 0 || d % 2 != 0) throw std::invalid_argument("rokhlin_check inputs");
  return 2 * (pi_plus - pi_minus) == l - d * d / 4;
}

// --- placement -----------------------------------------------------------

PlacementReport solitary_placement_check(const Curve& c, int resolution) {
  const Classification cl = classify(c);
  std::vector<std::array<double, 3>> pts;
  for (const auto& n : cl.nodes)
    if (n.kind == NodeKind::Solitary) pts.push_back(approx_position(n));
  if (pts.empty()) throw std::invalid_argument("curve has no solitary node");
  RasterMap m;
  for (int res = resolution;; res *= 2) {
    try {
      m = raster_components(c, res);
      break;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnstableResolution || res >= kMaxRetryResolution) throw;
    }
  }
  PlacementReport rep;
  rep.stable = m.stable;
  rep.resolution = m.resolution;
  rep.component_count = static_cast<int>(m.components.size());
  for (const auto& comp : m.components) rep.disk_count += comp.disk ? 1 : 0;
  for (const auto& p : pts) {
    const int k = m.component_of(p);
    rep.components.push_back(k);
    rep.disk.push_back(k >= 0 && m.components[static_cast<size_t>(k)].disk);
  }
  rep.shared = std::all_of(rep.components.begin(), rep.components.end(),
                           [&](int k) { return k >= 0 && k == rep.components.front(); });
  rep.all_non_disk = std::none_of(rep.disk.begin(), rep.disk.end(), [](bool d) { return d; });
  if (cl.class_id == parse_class_id("2-1212|s1")) {
    const OvalReport ov = perturb_search(c, m.resolution);
    rep.nested = ov.l == 2 && ov.injective_pairs == 1 && ov.depths.size() == 1 && ov.depths[0] == 2;
  }
  return rep;
}

}  // namespace nodal4
