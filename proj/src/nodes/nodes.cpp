#include "nodal4/nodes.hpp"

#include "nodal4/error.hpp"
#include "nodal4/linalg.hpp"

#include <algorithm>
#include <random>

namespace nodal4 {

namespace {

constexpr std::array<std::pair<size_t, size_t>, 3> kMinorIndex{{{0, 1}, {0, 2}, {1, 2}}};

Gaussian power(const Gaussian& x, int k) {
  Gaussian r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

QPoly mulmod(const QPoly& a, const QPoly& b, const QPoly& h) { return (a * b) % h; }

/// p(q) mod h.
QPoly compose_mod(const QPoly& p, const QPoly& q, const QPoly& h) {
  QPoly r;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = mulmod(r, q, h) + QPoly::constant(*it);
  return r % h;
}

QPoly power_mod(const QPoly& a, int k, const QPoly& h) {
  QPoly r = QPoly::constant(Rational(1)) % h;
  for (int i = 0; i < k; ++i) r = mulmod(r, a, h);
  return r;
}

/// G(x, y) in the affine chart t = v = 1, with y a residue modulo h.
QPoly eval_minor_mod(const MinorForm& m, const QPoly& y, const QPoly& h) {
  QPoly acc;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const Rational& c = m.g[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (sgn(c) == 0) continue;
      acc = acc + mulmod(QPoly::monomial(c, 3 - a), power_mod(y, 3 - b, h), h);
    }
  return acc % h;
}

MinorForm combine(const std::array<MinorForm, 3>& g, const std::array<long, 3>& k) {
  MinorForm out{};
  for (size_t i = 0; i < 3; ++i) out = out + g[i].scaled(Rational(k[i]));
  return out;
}

/// Partner map candidate x -> -B/A mod h from the first subresultant
/// A(x) y + B(x) of two minor combinations viewed as cubics in y.
std::optional<QPoly> partner_candidate(const MinorForm& l1, const MinorForm& l2, const QPoly& h) {
  std::vector<Rational> xs, as, bs;
  for (long x0 = 0; x0 <= 12; ++x0) {
    const Rational x(x0);
    std::array<Rational, 4> f, g;
    for (size_t b = 0; b < 4; ++b) {
      f[b] = 0;
      g[b] = 0;
      Rational xp(1);
      for (size_t a = 4; a-- > 0;) {  // x^(3-a)
        f[b] += l1.g[a][b] * xp;
        g[b] += l2.g[a][b] * xp;
        xp *= x;
      }
    }
    Matrix<Rational> rows(4, std::vector<Rational>(5, Rational(0)));
    for (size_t b = 0; b < 4; ++b) {
      rows[0][b] = f[b];
      rows[1][b + 1] = f[b];
      rows[2][b] = g[b];
      rows[3][b + 1] = g[b];
    }
    auto minor = [&](size_t last) {
      Matrix<Rational> sq(4, std::vector<Rational>(4));
      for (size_t r = 0; r < 4; ++r) {
        for (size_t k = 0; k < 3; ++k) sq[r][k] = rows[r][k];
        sq[r][3] = rows[r][last];
      }
      return determinant(std::move(sq));
    };
    xs.push_back(x);
    as.push_back(minor(3));
    bs.push_back(minor(4));
  }
  const QPoly a = interpolate(xs, as) % h, b = interpolate(xs, bs) % h;
  if (a.is_zero() || gcd(a, h).degree() != 0) return std::nullopt;
  return mulmod(-b, inverse_mod(a, h), h);
}

/// Exact certificate that P is a fixed-point-free involution on the roots
/// of h pairing points with equal image and transversal branches.
bool certify_partner(const QPoly& p, const QPoly& h, const std::array<MinorForm, 3>& g, const Curve& cw) {
  const QPoly x = QPoly::x();
  if (compose_mod(p, p, h) != x % h) return false;
  if (!compose_mod(h, p, h).is_zero()) return false;
  if (gcd(p - x, h).degree() != 0) return false;
  for (const auto& m : g)
    if (!eval_minor_mod(m, p, h).is_zero()) return false;
  std::array<std::array<QPoly, 3>, 3> r;
  for (size_t i = 0; i < 3; ++i) {
    const QPoly f = cw.p[i].affine_real();
    r[0][i] = f % h;
    r[1][i] = f.derivative() % h;
    r[2][i] = compose_mod(f.derivative(), p, h);
  }
  auto m2 = [&](size_t i, size_t j) { return mulmod(r[1][i], r[2][j], h) - mulmod(r[1][j], r[2][i], h); };
  QPoly det = mulmod(r[0][0], m2(1, 2), h) - mulmod(r[0][1], m2(0, 2), h) + mulmod(r[0][2], m2(0, 1), h);
  det = det % h;
  return !det.is_zero() && gcd(det, h).degree() == 0;
}

QPoly partner_map(const std::array<MinorForm, 3>& g, const QPoly& h, const Curve& cw) {
  std::vector<std::pair<std::array<long, 3>, std::array<long, 3>>> combos{
      {{1, 0, 0}, {0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}}};
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int k = 0; k < 6; ++k) combos.push_back({{coef(rng), coef(rng), coef(rng)}, {coef(rng), coef(rng), coef(rng)}});
  for (const auto& [k1, k2] : combos) {
    auto p = partner_candidate(combine(g, k1), combine(g, k2), h);
    if (p && certify_partner(*p, h, g, cw)) return *p;
  }
  throw Error(ErrorKind::NotGeneric, "self-intersections are not three transversal double points");
}

QPoly charpoly(const QPoly& tau, const QPoly& h) {
  const size_t n = static_cast<size_t>(h.degree());
  Matrix<Rational> mt(n, std::vector<Rational>(n));
  for (size_t j = 0; j < n; ++j) {
    QPoly col = mulmod(tau, QPoly::monomial(Rational(1), static_cast<int>(j)), h);
    for (size_t i = 0; i < n; ++i) mt[i][j] = col.coeff(static_cast<int>(i));
  }
  std::vector<Rational> xs, ys;
  for (size_t k = 0; k <= n; ++k) {
    Matrix<Rational> a = mt;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = (i == j ? Rational(static_cast<long>(k)) : Rational(0)) - a[i][j];
    xs.push_back(Rational(static_cast<long>(k)));
    ys.push_back(determinant(std::move(a)));
  }
  return interpolate(xs, ys);
}

/// Coefficients c with v = c0 + c1 tau + c2 tau^2 in Q[x]/h.
QPoly express_in_tau(const QPoly& v, const QPoly& tau, const QPoly& h) {
  const size_t n = static_cast<size_t>(h.degree());
  std::array<QPoly, 3> basis{QPoly::constant(Rational(1)), tau % h, mulmod(tau, tau, h)};
  Matrix<Rational> a(n, std::vector<Rational>(3));
  std::vector<Rational> rhs(n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < 3; ++j) a[i][j] = basis[j].coeff(static_cast<int>(i));
    rhs[i] = v.coeff(static_cast<int>(i));
  }
  auto sol = solve(a, rhs);
  if (!sol) throw Error(ErrorKind::NotGeneric, "pair invariants do not factor through the node parameter");
  return QPoly(*sol);
}

AlgebraicReal to_original_chart(const AlgebraicReal& r, long shift, const QPoly& original_affine) {
  if (shift == 0) return r;
  const Rational c(shift);
  if (r.is_rational()) {
    const Rational den = 1 + c * r.value();
    if (sgn(den) == 0) return AlgebraicReal::infinity();
    return AlgebraicReal::rational(r.value() / den);
  }
  const Rational pole = -1 / c;
  AlgebraicReal rr = r;
  while (!rr.is_rational() && rr.enclosure().contains(pole)) rr = rr.bisected();
  if (rr.is_rational()) return to_original_chart(rr, shift, original_affine);
  const Interval e = rr.enclosure();
  const Rational lo = e.lo / (1 + c * e.lo), hi = e.hi / (1 + c * e.hi);
  return AlgebraicReal(original_affine, lo, hi);
}

}  // namespace

Gaussian MinorForm::eval(const ProjPoint1& x, const ProjPoint1& y) const { return at_first(x).eval(y); }

BinaryForm MinorForm::at_first(const ProjPoint1& x) const {
  std::vector<Gaussian> c(4);
  for (size_t b = 0; b < 4; ++b)
    for (size_t a = 0; a < 4; ++a)
      if (sgn(g[a][b]) != 0) c[b] += Gaussian(g[a][b]) * power(x.a, 3 - static_cast<int>(a)) * power(x.b, static_cast<int>(a));
  return BinaryForm(3, std::move(c));
}

bool MinorForm::is_symmetric() const {
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b)
      if (g[a][b] != g[b][a]) return false;
  return true;
}

MinorForm MinorForm::operator+(const MinorForm& o) const {
  MinorForm r = *this;
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) r.g[a][b] += o.g[a][b];
  return r;
}

MinorForm MinorForm::scaled(const Rational& k) const {
  MinorForm r = *this;
  for (auto& row : r.g)
    for (auto& v : row) v *= k;
  return r;
}

std::array<MinorForm, 3> minor_forms(const Curve& c) {
  std::array<MinorForm, 3> out{};
  for (size_t m = 0; m < 3; ++m) {
    const auto [i, j] = kMinorIndex[m];
    const auto pi = c.p[i].real_coeffs(), pj = c.p[j].real_coeffs();
    if (pi.size() != 5 || pj.size() != 5) throw std::invalid_argument("minor_forms needs quartic forms");
    Rational n[5][5];
    for (size_t a = 0; a < 5; ++a)
      for (size_t b = 0; b < 5; ++b) n[a][b] = pi[a] * pj[b] - pj[a] * pi[b];
    // n[a][b] = g[a][b-1] - g[a-1][b]
    auto& g = out[m].g;
    for (size_t a = 0; a < 4; ++a)
      for (size_t b = 1; b < 5; ++b) g[a][b - 1] = n[a][b] + (a > 0 && b < 4 ? g[a - 1][b] : Rational(0));
    for (size_t a = 0; a < 5; ++a)
      for (size_t b = 0; b < 5; ++b) {
        Rational rebuilt = (b >= 1 && a <= 3 ? g[a][b - 1] : Rational(0)) - (a >= 1 && b <= 3 ? g[a - 1][b] : Rational(0));
        if (rebuilt != n[a][b]) throw Error(ErrorKind::DivisionFailure, "minor is not divisible by s v - t u");
      }
  }
  return out;
}

BinaryForm preimage_form(const Curve& c) {
  c.validate();
  const auto g = minor_forms(c);
  auto elim = [&](const MinorForm& a, const MinorForm& b) {
    std::vector<Rational> xs, ys;
    // Cubics in (u, v) at (s, t) = (x, 1), in plain rational arithmetic.
    auto cubic = [](const MinorForm& f, const Rational& x) {
      std::vector<Rational> c(4);
      for (size_t b = 0; b < 4; ++b)
        for (size_t a = 0; a < 4; ++a) c[b] = c[b] * x + f.g[a][b];
      return c;
    };
    for (long x0 = 0; x0 <= 18; ++x0) {
      const Rational x(x0);
      xs.push_back(x);
      ys.push_back(sylvester_resultant(cubic(a, x), cubic(b, x)));
    }
    return BinaryForm::homogenize(interpolate(xs, ys), 18);
  };
  BinaryForm r = form_gcd(form_gcd(elim(g[0], g[1]), elim(g[0], g[2])), elim(g[1], g[2]));
  if (r.is_zero()) throw Error(ErrorKind::NotGeneric, "minors share a common component");
  BinaryForm h = squarefree_part(r).normalized();
  if (h.degree() != 6)
    throw Error(ErrorKind::NotGeneric, "expected 6 node preimages, elimination gives " + std::to_string(h.degree()));
  return h;
}

std::optional<std::array<Rational, 3>> Node::rational_position() const {
  std::array<Rational, 3> out;
  for (size_t i = 0; i < 3; ++i) {
    if (!position[i].is_rational()) return std::nullopt;
    out[i] = position[i].value();
  }
  return out;
}

std::optional<BinaryForm> Node::rational_quadratic() const {
  std::vector<Rational> out;
  for (const auto& q : quadratic) {
    if (!q.is_rational()) return std::nullopt;
    out.push_back(q.value());
  }
  return BinaryForm::from_rationals(out);
}

std::vector<Node> find_nodes(const Curve& c) {
  const BinaryForm big_h = preimage_form(c);

  // Move [1:0] off the preimages: (s, t) = (s', t' + shift s').
  long shift = 0;
  for (long k : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L}) {
    if (!big_h.eval(ProjPoint1(Gaussian(1), Gaussian(Rational(k)))).is_zero()) {
      shift = k;
      break;
    }
  }
  const Rational cs(shift);
  const Mat2 m2{{{Rational(1), Rational(0)}, {cs, Rational(1)}}};
  const Curve cw = c.reparametrized(m2);
  const QPoly h = big_h.substitute(m2).affine_real().monic();
  if (h.degree() != 6) throw Error(ErrorKind::NotGeneric, "working chart lost a preimage");
  const auto gw = minor_forms(cw);

  const QPoly p = partner_map(gw, h, cw);
  const QPoly x = QPoly::x();
  const QPoly sigma = (x + p) % h, pi = mulmod(x, p, h);

  QPoly tau, m;
  bool separated = false;
  for (long lambda = 0; lambda <= 8 && !separated; ++lambda) {
    tau = (sigma + pi.scaled(Rational(lambda))) % h;
    const QPoly chi = charpoly(tau, h).monic();
    m = squarefree_part(chi);
    separated = m.degree() == 3 && m * m == chi;
  }
  if (!separated) throw Error(ErrorKind::NotGeneric, "could not separate the three preimage pairs");

  auto taus = isolate_real_roots(m);
  if (taus.size() < 3) throw Error(ErrorKind::ImaginaryNodePresent, "curve has a pair of imaginary nodes");

  const QPoly s_of = express_in_tau(sigma, tau, h), p_of = express_in_tau(pi, tau, h);
  const QPoly disc = (s_of * s_of - p_of.scaled(Rational(4))) % m;

  // p_i(y) = alpha_i y + beta_i modulo y^2 - S y + Pi, coefficients in Q[T]/m.
  std::array<QPoly, 3> alpha, beta;
  for (size_t i = 0; i < 3; ++i) {
    QPoly ya, yb = QPoly::constant(Rational(1));
    const QPoly f = cw.p[i].affine_real();
    for (int n = 0; n <= 4; ++n) {
      alpha[i] = alpha[i] + ya.scaled(f.coeff(n));
      beta[i] = beta[i] + yb.scaled(f.coeff(n));
      QPoly na = (ya * s_of + yb) % m, nb = (-(ya * p_of)) % m;
      ya = std::move(na);
      yb = std::move(nb);
    }
    alpha[i] = alpha[i] % m;
    beta[i] = beta[i] % m;
  }
  const QPoly qa = (QPoly::constant(Rational(1)) + s_of.scaled(cs) + p_of.scaled(cs * cs)) % m;
  const QPoly qb = (-(s_of + p_of.scaled(2 * cs))) % m;
  const QPoly qc = p_of % m;

  std::vector<Node> nodes(3);
  for (size_t k = 0; k < 3; ++k) {
    const AlgebraicReal& tk = taus[k];
    Node& node = nodes[k];
    const int ds = sign_at(disc, tk);
    if (ds == 0) throw Error(ErrorKind::NotGeneric, "node with a repeated preimage");
    node.kind = ds > 0 ? NodeKind::Crossing : NodeKind::Solitary;

    std::array<QPoly, 3> v = alpha;
    if (std::all_of(v.begin(), v.end(), [&](const QPoly& q) { return sign_at(q, tk) == 0; })) v = beta;
    size_t big = 3;
    for (size_t i = 0; i < 3; ++i) {
      if (sign_at(v[i], tk) == 0) continue;
      if (big == 3 || sign_at((v[i] * v[i] - v[big] * v[big]) % m, tk) > 0) big = i;
    }
    if (big == 3) throw Error(ErrorKind::NotGeneric, "node position vanishes");
    for (size_t i = 0; i < 3; ++i) {
      if (i == big) node.position[i] = AlgebraicReal::rational(1);
      else if (sign_at(v[i], tk) == 0) node.position[i] = AlgebraicReal::rational(0);
      else node.position[i] = evaluate_rational_function(m, tk, v[i], v[big]);
    }

    const QPoly& lead = sign_at(qa, tk) != 0 ? qa : qb;
    const std::array<const QPoly*, 3> qs{&qa, &qb, &qc};
    for (size_t i = 0; i < 3; ++i) node.quadratic[i] = evaluate_rational_function(m, tk, *qs[i], lead);
    if (node.kind == NodeKind::Solitary)
      if (auto q = node.rational_quadratic()) node.gaussian_preimages = conjugate_root_pair(*q);
  }

  // Real preimages: match each real root of h to its node parameter.
  const QPoly original_affine = big_h.affine_real();
  std::vector<AlgebraicReal> work = taus;
  for (const auto& r : isolate_real_roots(h)) {
    AlgebraicReal rr = r;
    const size_t k = match_root(work, [&](int) {
      Interval e = eval(tau, rr.enclosure());
      rr = rr.bisected();
      return e;
    });
    if (nodes[k].kind != NodeKind::Crossing) throw Error(ErrorKind::NotGeneric, "real preimage at a solitary node");
    nodes[k].real_preimages.push_back(to_original_chart(r, shift, original_affine));
  }
  for (auto& node : nodes) {
    const size_t want = node.kind == NodeKind::Crossing ? 2 : 0;
    if (node.real_preimages.size() != want) throw Error(ErrorKind::NotGeneric, "preimage count mismatch");
    std::sort(node.real_preimages.begin(), node.real_preimages.end());
  }

  // Coordinate points first: order by position, largest first.
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    for (size_t i = 0; i < 3; ++i) {
      const int c = compare(a.position[i], b.position[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  if (positions_collinear({nodes[0].position, nodes[1].position, nodes[2].position}))
    throw Error(ErrorKind::NotGeneric, "node positions are collinear");
  return nodes;
}

BinaryForm preimages_of_point(const Curve& c, const std::array<Rational, 3>& z) {
  BinaryForm acc = BinaryForm::zero(4);
  for (const auto& [i, j] : kMinorIndex) {
    BinaryForm f = c.p[i].scaled(Gaussian(z[j])) - c.p[j].scaled(Gaussian(z[i]));
    acc = form_gcd(acc, f);
  }
  if (acc.is_zero()) throw std::invalid_argument("preimages_of_point: z = 0");
  return acc;
}

bool positions_collinear(const std::array<std::array<AlgebraicReal, 3>, 3>& pts) {
  bool all_rational = true;
  Mat3 exact;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) {
      if (pts[i][j].is_rational()) exact[i][j] = pts[i][j].value();
      else all_rational = false;
    }
  if (all_rational) return sgn(det3(exact)) == 0;
  auto work = pts;
  for (int round = 0; round < 200; ++round) {
    std::array<std::array<Interval, 3>, 3> e;
    for (size_t i = 0; i < 3; ++i)
      for (size_t j = 0; j < 3; ++j) e[i][j] = work[i][j].enclosure();
    Interval d = e[0][0] * (e[1][1] * e[2][2] - e[1][2] * e[2][1]) - e[0][1] * (e[1][0] * e[2][2] - e[1][2] * e[2][0]) +
                 e[0][2] * (e[1][0] * e[2][1] - e[1][1] * e[2][0]);
    if (d.certain_sign() != 0) return false;
    for (auto& row : work)
      for (auto& v : row) v = v.bisected();
  }
  return true;  // undecided after deep refinement: treat as degenerate
}

}  // namespace nodal4
