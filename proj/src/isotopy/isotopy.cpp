#include "nodal4/isotopy.hpp"

#include "nodal4/error.hpp"
#include "nodal4/real_roots.hpp"

#include <algorithm>
#include <numeric>

namespace nodal4 {

namespace {

using QuadPath = std::array<QPoly, 3>;
using Seed3 = std::array<BinaryForm, 3>;


// p has no zero on the closed interval [0, 1].
bool nonvanishing_on_unit(const QPoly& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  if (sign_at(p, Rational(0)) == 0 || sign_at(p, Rational(1)) == 0) return false;
  return count_roots(sturm_chain(squarefree_part(p)), Rational(0), Rational(1)) == 0;
}

Mat3 scalar3(const Rational& k) {
  Mat3 m{};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m[i][j] = i == j ? k : Rational(0);
  return m;
}

Mat3 lerp_identity(const Mat3& e, const Rational& t) {
  Mat3 m{};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m[i][j] = t * e[i][j] + (i == j ? 1 - t : Rational(0));
  return m;
}

Mat3 inverse3(const Mat3& a) {
  Matrix<Rational> m(3, std::vector<Rational>(3));
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) m[i][j] = a[i][j];
  auto inv = inverse(m);
  if (!inv) throw std::invalid_argument("singular matrix");
  Mat3 out;
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) out[i][j] = (*inv)[i][j];
  return out;
}

// det((1-t) I + t e) as a cubic in t.
QPoly lerp_determinant(const Mat3& e) {
  std::vector<Rational> xs, ys;
  for (long k = 0; k <= 3; ++k) {
    xs.emplace_back(k);
    ys.push_back(det3(lerp_identity(e, Rational(k))));
  }
  return interpolate(xs, ys);
}

QuadPath lerp_form(const BinaryForm& a, const BinaryForm& b) {
  QuadPath q;
  for (int k = 0; k < 3; ++k) {
    const Rational x = a.coeff(k).re, y = b.coeff(k).re;
    q[static_cast<size_t>(k)] = QPoly({x, y - x});
  }
  return q;
}

BinaryForm eval_quad(const QuadPath& q, const Rational& t) {
  return BinaryForm::from_rationals({q[0].eval(t), q[1].eval(t), q[2].eval(t)});
}

Curve curve_of(const Seed3& q) {
  Curve c;
  c.p = {q[1] * q[2], q[0] * q[2], q[0] * q[1]};
  return c;
}

bool equal_up_to_scalar(const Curve& a, const Curve& b) {
  // Find a nonzero coefficient of a, then compare b to the scaled a.
  for (size_t i = 0; i < 3; ++i)
    for (int k = 0; k <= a.p[i].degree(); ++k) {
      if (a.p[i].coeff(k).is_zero()) continue;
      if (b.p[i].degree() != a.p[i].degree() || b.p[i].coeff(k).is_zero()) return false;
      const Gaussian r = b.p[i].coeff(k) / a.p[i].coeff(k);
      for (size_t j = 0; j < 3; ++j)
        if (a.p[j].scaled(r) != b.p[j]) return false;
      return true;
    }
  return false;
}

// --- chart handling ------------------------------------------------------
//
// Planning happens in the chart z = 1/(w - x) of a rational cut point w
// that is not a real preimage. x = oo maps to z = 0 and x = w to z = oo.

BinaryForm pull_back(const BinaryForm& zform, const Rational& w) {
  // (Z1, Z2) = (Y, -X + w Y)
  return zform.substitute({{{Rational(0), Rational(1)}, {Rational(-1), w}}});
}

BinaryForm push_forward(const BinaryForm& xform, const Rational& w) {
  // (X, Y) = (w Z1 - Z2, Z1)
  return xform.substitute({{{w, Rational(-1)}, {Rational(1), Rational(0)}}});
}

QuadPath pull_back(const QuadPath& z, const Rational& w, const Rational& scale) {
  const QPoly& a = z[0];
  const QPoly& b = z[1];
  const QPoly& c = z[2];
  return {c.scaled(scale), (-b - c.scaled(2 * w)).scaled(scale), (a + b.scaled(w) + c.scaled(w * w)).scaled(scale)};
}

Rational z_of(const AlgebraicReal& x, const Rational& w) {
  if (x.is_infinity()) return Rational(0);
  return 1 / (w - x.value());
}

struct PairState {
  bool real = true;
  Rational z0, z1;  // real, ascending
  Rational u, W;    // imaginary: roots u +- i sqrt(W), W > 0
  Rational scale;   // x-chart quadratic = scale * pull_back(monic)

  BinaryForm monic() const {
    if (real) return BinaryForm::from_rationals({Rational(1), -(z0 + z1), z0 * z1});
    return BinaryForm::from_rationals({Rational(1), -2 * u, u * u + W});
  }
  BinaryForm xform(const Rational& w) const { return pull_back(monic(), w).scaled(Gaussian(scale)); }
};

PairState state_of(const BinaryForm& q, const Rational& w) {
  PairState s;
  const BinaryForm g = push_forward(q, w);
  s.scale = g.coeff(0).re;
  if (sgn(s.scale) == 0) throw std::logic_error("cut point is a preimage");
  const Rational b = g.coeff(1).re / s.scale, c = g.coeff(2).re / s.scale;
  if (b * b - 4 * c > 0) {
    auto roots = isolate_real_roots(q);
    if (roots.size() != 2) throw std::logic_error("real pair without two real roots");
    s.z0 = z_of(roots[0], w);
    s.z1 = z_of(roots[1], w);
    if (s.z0 > s.z1) std::swap(s.z0, s.z1);
  } else {
    s.real = false;
    s.u = -b / 2;
    s.W = c - s.u * s.u;
  }
  if (s.xform(w) != q) throw std::logic_error("chart conversion mismatch");
  return s;
}

// --- planner -------------------------------------------------------------

class Planner {
 public:
  explicit Planner(std::vector<PathSegment>& out) : out_(out) {}

  // Seed segment from `cur` to `next`; false (nothing appended) when the
  // certificate fails.
  bool try_lerp(const std::string& phase, const Seed3& cur, const Seed3& next) {
    if (cur == next) return true;
    PathSegment seg;
    seg.kind = PathSegment::Kind::Seed;
    seg.phase = phase;
    for (size_t i = 0; i < 3; ++i) seg.quads[i] = lerp_form(cur[i], next[i]);
    return push_if_certified(std::move(seg));
  }
  void lerp(const std::string& phase, const Seed3& cur, const Seed3& next) {
    if (!try_lerp(phase, cur, next)) throw Error(ErrorKind::PathObstruction, "segment " + phase + " is not generic");
  }
  void quad_path(const std::string& phase, const Seed3& cur, size_t k, const QuadPath& q) {
    PathSegment seg;
    seg.kind = PathSegment::Kind::Seed;
    seg.phase = phase;
    for (size_t i = 0; i < 3; ++i) seg.quads[i] = i == k ? q : lerp_form(cur[i], cur[i]);
    if (!push_if_certified(std::move(seg)))
      throw Error(ErrorKind::PathObstruction, "segment " + phase + " is not generic");
  }
  void ambient(const std::string& phase, const Curve& base, const Mat3& target) {
    Mat3 prefix = identity3();
    for (const auto& e : transform_stages(target)) {
      PathSegment seg;
      seg.kind = PathSegment::Kind::Ambient;
      seg.phase = phase;
      seg.base = base;
      seg.step = e;
      seg.prefix = prefix;
      prefix = e * prefix;
      out_.push_back(std::move(seg));
    }
  }
  size_t size() const { return out_.size(); }
  void truncate(size_t n) { out_.resize(n); }

 private:
  bool push_if_certified(PathSegment seg) {
    if (!seg.certify()) return false;
    out_.push_back(std::move(seg));
    return true;
  }
  std::vector<PathSegment>& out_;
};

// Points strictly inside (lo, hi), preferring small denominators.
Rational interior_point(const Interval& iv) {
  Rational r = simplest_between(iv.lo, iv.hi);
  if (r == iv.lo || r == iv.hi) r = (iv.lo + iv.hi) / 2;
  return r;
}

bool outside(const AlgebraicReal& o, const Interval& iv) {
  return o < AlgebraicReal::rational(iv.lo) || o > AlgebraicReal::rational(iv.hi);
}

// Moves every real pair with irrational roots onto nearby rational roots,
// one certified straight segment per pair. Returns the snapshots, first the
// input.
std::vector<Seed3> rationalize(const Seed3& start) {
  std::vector<Seed3> snaps{start};
  std::vector<PathSegment> scratch;
  Planner probe(scratch);
  for (size_t k = 0; k < 3; ++k) {
    Seed3 cur = snaps.back();
    const BinaryForm& q = cur[k];
    const Rational disc = q.coeff(1).re * q.coeff(1).re - 4 * q.coeff(0).re * q.coeff(2).re;
    if (sgn(disc) <= 0) continue;
    auto roots = isolate_real_roots(q);
    if (roots[0].is_rational()) continue;
    std::vector<AlgebraicReal> others;
    for (size_t j = 0; j < 3; ++j) {
      if (j == k) continue;
      const BinaryForm& p = cur[j];
      const Rational dj = p.coeff(1).re * p.coeff(1).re - 4 * p.coeff(0).re * p.coeff(2).re;
      if (sgn(dj) <= 0) continue;
      for (auto& r : isolate_real_roots(p)) others.push_back(r);
    }
    bool done = false;
    Rational width(1, 4);
    for (int attempt = 0; attempt < 80 && !done; ++attempt, width /= 2) {
      const Interval i0 = roots[0].refined(width).enclosure(), i1 = roots[1].refined(width).enclosure();
      if (!(i0.hi < i1.lo)) continue;
      bool clear = true;
      for (const auto& o : others) clear = clear && outside(o, i0) && outside(o, i1);
      if (!clear) continue;
      const Rational r0 = interior_point(i0), r1 = interior_point(i1);
      Seed3 next = cur;
      next[k] = BinaryForm::from_rationals({Rational(1), -(r0 + r1), r0 * r1}).scaled(q.coeff(0));
      if (probe.try_lerp("rationalize", cur, next)) {
        snaps.push_back(next);
        done = true;
      }
    }
    if (!done) throw Error(ErrorKind::PathObstruction, "could not move irrational preimages to rational ones");
  }
  return snaps;
}

struct RealPoint {
  Rational z;
  size_t pair;
  int slot;  // 0 or 1 within the pair
};

std::vector<RealPoint> real_points(const std::array<PairState, 3>& st) {
  std::vector<RealPoint> pts;
  for (size_t k = 0; k < 3; ++k)
    if (st[k].real) {
      pts.push_back({st[k].z0, k, 0});
      pts.push_back({st[k].z1, k, 1});
    }
  std::sort(pts.begin(), pts.end(), [](const RealPoint& a, const RealPoint& b) { return a.z < b.z; });
  return pts;
}

void set_point(PairState& s, int slot, const Rational& z) {
  (slot == 0 ? s.z0 : s.z1) = z;
  if (s.z0 > s.z1) std::swap(s.z0, s.z1);
}

// Rotation r with labels a[i] == b[(i + r) mod n], if any.
std::optional<size_t> cyclic_shift(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return std::nullopt;
  const size_t n = a.size();
  if (n == 0) return 0;
  for (size_t r = 0; r < n; ++r) {
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + r) % n];
    if (ok) return r;
  }
  return std::nullopt;
}

class SeedMover {
 public:
  SeedMover(Planner& plan, const Rational& w, std::array<PairState, 3> st, const std::array<PairState, 3>& target)
      : plan_(plan), w_(w), st_(std::move(st)), target_(target) {}

  const std::array<PairState, 3>& state() const { return st_; }

  Seed3 forms() const { return {st_[0].xform(w_), st_[1].xform(w_), st_[2].xform(w_)}; }

  // Moves every real point to its partner in `target` (same pair labels).
  void move_real() {
    auto a = real_points(st_), b = real_points(target_);
    std::vector<int> la, lb;
    for (const auto& p : a) la.push_back(static_cast<int>(p.pair));
    for (const auto& p : b) lb.push_back(static_cast<int>(p.pair));
    auto r = cyclic_shift(la, lb);
    if (!r) throw Error(ErrorKind::PathObstruction, "real preimage orders do not match");
    Rational lowest = a.empty() ? Rational(0) : std::min(a.front().z, b.front().z);
    for (size_t m = 0; m < *r; ++m) {
      lowest -= 1;
      wrap_down(lowest);
    }
    a = real_points(st_);
    // a[i] now corresponds to b[i].
    std::vector<size_t> right, left;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i].pair != b[i].pair) throw std::logic_error("wrap bookkeeping mismatch");
      if (b[i].z > a[i].z) right.push_back(i);
      if (b[i].z < a[i].z) left.push_back(i);
    }
    std::reverse(right.begin(), right.end());
    for (auto idx : {&right, &left})
      for (size_t i : *idx) {
        const Seed3 cur = forms();
        set_point(st_[a[i].pair], a[i].slot, b[i].z);
        adopt_scale(a[i].pair);
        plan_.lerp("slide", cur, forms());
      }
  }

  // Moves every imaginary pair to its target (u, W), straight when that
  // certifies and through separated lanes otherwise.
  void move_imaginary() {
    const auto& target = target_;
    std::vector<size_t> pairs;
    for (size_t k = 0; k < 3; ++k)
      if (!st_[k].real) pairs.push_back(k);
    if (pairs.empty()) return;
    const auto saved = st_;
    const size_t mark = plan_.size();
    bool direct = true;
    for (size_t k : pairs) {
      const Seed3 cur = forms();
      st_[k].u = target[k].u;
      st_[k].W = target[k].W;
      adopt_scale(k);
      if (!plan_.try_lerp("direct", cur, forms())) {
        direct = false;
        break;
      }
    }
    if (direct) return;
    plan_.truncate(mark);
    st_ = saved;

    Rational top = 0, right = 0;
    for (size_t k : pairs) {
      top = std::max({top, st_[k].W, target[k].W});
      right = std::max({right, st_[k].u, target[k].u});
    }
    top += 1;
    right += 1;
    auto by = [&](auto key) {
      std::vector<size_t> v = pairs;
      std::sort(v.begin(), v.end(), [&](size_t x, size_t y) { return key(x) < key(y); });
      return v;
    };
    // Lift in descending W; the highest pair gets the highest lane.
    auto lift_order = by([&](size_t k) { return -st_[k].W; });
    for (size_t n = 0; n < lift_order.size(); ++n)
      vertical(lift_order[n], top + Rational(static_cast<long>(lift_order.size() - n)), "lift");
    for (size_t n = 0; n < pairs.size(); ++n) horizontal(pairs[n], right + Rational(static_cast<long>(n)), "spread");
    // Lanes ordered by ascending target W so lowering never crosses.
    auto lower_order = by([&](size_t k) { return target[k].W; });
    for (size_t n = 0; n < lower_order.size(); ++n)
      vertical(lower_order[n], top + Rational(static_cast<long>(n + 1)), "relane");
    for (size_t k : pairs) horizontal(k, target[k].u, "shift");
    for (size_t k : lower_order) vertical(k, target[k].W, "lower", true);
  }

 private:
  // The largest real point travels up through z = oo and comes back from
  // below to `to`; its pair's scale changes sign.
  void wrap_down(const Rational& to) {
    auto pts = real_points(st_);
    const RealPoint top = pts.back();
    PairState& s = st_[top.pair];
    const Rational other = top.slot == 0 ? s.z1 : s.z0;
    const Seed3 start = forms();
    Seed3 mid = start;
    // -Z2 (Z1 - other Z2): one root at z = oo.
    mid[top.pair] = pull_back(BinaryForm::from_rationals({Rational(0), Rational(-1), other}), w_).scaled(Gaussian(s.scale));
    plan_.lerp("wrap", start, mid);
    s.z0 = to;
    s.z1 = other;
    if (s.z0 > s.z1) std::swap(s.z0, s.z1);
    s.scale = -s.scale;
    plan_.lerp("wrap", mid, forms());
  }

  void vertical(size_t k, const Rational& W, const std::string& phase, bool last = false) {
    const Seed3 cur = forms();
    st_[k].W = W;
    if (last) adopt_scale(k);
    plan_.lerp(phase, cur, forms());
  }

  // Real part moves linearly at constant imaginary height.
  void horizontal(size_t k, const Rational& u, const std::string& phase) {
    PairState& s = st_[k];
    if (s.u == u) return;
    const QPoly ut = QPoly({s.u, u - s.u});
    QuadPath z{QPoly::constant(Rational(1)), ut.scaled(Rational(-2)), ut * ut + QPoly::constant(s.W)};
    const Seed3 cur = forms();
    plan_.quad_path(phase, cur, k, pull_back(z, w_, s.scale));
    s.u = u;
  }

  // Positive rescaling along a move keeps the roots where the move puts
  // them, so a pair takes its target scale whenever the signs agree.
  void adopt_scale(size_t k) {
    if (sgn(st_[k].scale) == sgn(target_[k].scale)) st_[k].scale = target_[k].scale;
  }

  Planner& plan_;
  Rational w_;
  std::array<PairState, 3> st_;
  std::array<PairState, 3> target_;
};

Mat3 lambda_matrix(const std::array<Rational, 3>& l) {
  Mat3 m = scalar3(Rational(0));
  m[0][0] = l[1] * l[2];
  m[1][1] = l[0] * l[2];
  m[2][2] = l[0] * l[1];
  return m;
}

std::vector<PathSegment> plan_direct(const Curve& a, const Curve& b, bool* reflected) {
  const Classification ca = classify(a), cb = classify(b);
  if (ca.class_id != cb.class_id)
    throw Error(ErrorKind::DifferentClass, to_string(ca.class_id) + " vs " + to_string(cb.class_id));

  // Node correspondence pi (a-node k <-> b-node pi[k]) matching kinds and
  // the cyclic label sequence; a reflection s -> -s only as a last resort.
  std::array<int, 3> pi{0, 1, 2};
  bool found = false, refl = false;
  for (bool r : {false, true}) {
    std::array<int, 3> p{0, 1, 2};
    do {
      bool kinds = true;
      for (size_t k = 0; k < 3; ++k)
        kinds = kinds && ca.nodes[k].kind == cb.nodes[static_cast<size_t>(p[k])].kind;
      if (!kinds) continue;
      std::vector<int> la = ca.node_of, lb;
      if (r) std::reverse(la.begin(), la.end());
      std::array<int, 3> inv{};
      for (int k = 0; k < 3; ++k) inv[static_cast<size_t>(p[static_cast<size_t>(k)])] = k;
      for (int x : cb.node_of) lb.push_back(inv[static_cast<size_t>(x)]);
      if (cyclic_shift(la, lb)) {
        pi = p;
        refl = r;
        found = true;
        break;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    if (found) break;
  }
  if (!found) throw Error(ErrorKind::PathObstruction, "no node correspondence matches the diagrams");
  if (reflected) *reflected = refl;

  const Normalized na = normalize(a, ca.nodes, {0, 1, 2});
  const Normalized nb = normalize(b, cb.nodes, pi);
  Seed3 qa = na.quadratics, qb = nb.quadratics;
  if (refl)
    for (auto& q : qa) q = q.substitute({{{Rational(-1), Rational(0)}, {Rational(0), Rational(1)}}});

  std::vector<PathSegment> segs;
  Planner plan(segs);
  plan.ambient("ambient-a", a, na.transform);

  const auto snaps_a = rationalize(qa);
  for (size_t j = 1; j < snaps_a.size(); ++j) plan.lerp("rationalize", snaps_a[j - 1], snaps_a[j]);
  const auto snaps_b = rationalize(qb);
  const Seed3 ra = snaps_a.back(), rb = snaps_b.back();

  // Cut point beyond every finite real preimage.
  Rational w = 0;
  bool any = false;
  for (const Seed3* s : {&ra, &rb})
    for (const auto& q : *s) {
      const Rational d = q.coeff(1).re * q.coeff(1).re - 4 * q.coeff(0).re * q.coeff(2).re;
      if (sgn(d) <= 0) continue;
      for (const auto& x : isolate_real_roots(q)) {
        if (x.is_infinity()) continue;
        w = any ? std::max(w, x.value()) : x.value();
        any = true;
      }
    }
  w = floor(w) + 1;

  std::array<PairState, 3> sa, sb;
  for (size_t k = 0; k < 3; ++k) {
    sa[k] = state_of(ra[k], w);
    sb[k] = state_of(rb[k], w);
    if (sa[k].real != sb[k].real) throw std::logic_error("pair kinds differ after alignment");
  }
  SeedMover mover(plan, w, sa, sb);
  mover.move_real();
  mover.move_imaginary();

  std::array<Rational, 3> lambda;
  for (size_t k = 0; k < 3; ++k) lambda[k] = mover.state()[k].scale / sb[k].scale;
  auto scaled = [&](const Seed3& s) {
    Seed3 out = s;
    for (size_t k = 0; k < 3; ++k) out[k] = s[k].scaled(Gaussian(lambda[k]));
    return out;
  };
  if (mover.forms() != scaled(rb)) throw std::logic_error("planner did not reach the target seed");
  for (size_t j = snaps_b.size() - 1; j > 0; --j) plan.lerp("rationalize", scaled(snaps_b[j]), scaled(snaps_b[j - 1]));

  const Curve c_end = curve_of(scaled(qb));
  plan.ambient("ambient-b", c_end, inverse3(lambda_matrix(lambda) * nb.transform));
  return segs;
}

std::vector<PathSegment> concat(std::vector<PathSegment> x, const std::vector<PathSegment>& y) {
  x.insert(x.end(), y.begin(), y.end());
  return x;
}

}  // namespace

// --- certificates --------------------------------------------------------

GenericityCertificate verify_generic(const Curve& c) {
  c.validate();
  GenericityCertificate cert;
  bool witnessed = false;
  for (long lam = 0; lam <= 8 && !witnessed; ++lam) {
    const Gaussian r = resultant(c.p[0], c.p[1] + c.p[2].scaled(Gaussian(lam)));
    if (!r.is_zero()) {
      cert.witness_lambda = lam;
      cert.common_root_witness = r.re;
      witnessed = true;
    }
  }
  if (!witnessed) throw Error(ErrorKind::NotGeneric, "the coordinate forms share a root");
  cert.preimage_form = preimage_form(c);
  cert.preimage_discriminant = resultant(cert.preimage_form.d_ds(), cert.preimage_form.d_dt()).re;
  if (sgn(cert.preimage_discriminant) == 0) throw Error(ErrorKind::NotGeneric, "node preimages are not distinct");
  Classification cl;
  try {
    cl = classify(c);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ImaginaryNodePresent) throw Error(ErrorKind::NotGeneric, "imaginary node present");
    throw;
  }
  cert.class_id = cl.class_id;
  for (const auto& n : cl.nodes) ++(n.kind == NodeKind::Solitary ? cert.solitary_nodes : cert.crossing_nodes);
  return cert;
}

bool check_certificate(const Curve& c, const GenericityCertificate& cert) {
  try {
    c.validate();
    const Gaussian r = resultant(c.p[0], c.p[1] + c.p[2].scaled(Gaussian(cert.witness_lambda)));
    if (r.is_zero() || r.re != cert.common_root_witness) return false;
    const BinaryForm h = preimage_form(c);
    if (h != cert.preimage_form) return false;
    const Gaussian d = resultant(h.d_ds(), h.d_dt());
    if (d.is_zero() || d.re != cert.preimage_discriminant) return false;
    const Classification cl = classify(c);
    int crossing = 0, solitary = 0;
    for (const auto& n : cl.nodes) ++(n.kind == NodeKind::Solitary ? solitary : crossing);
    return cl.class_id == cert.class_id && crossing == cert.crossing_nodes && solitary == cert.solitary_nodes;
  } catch (const Error&) {
    return false;
  }
}

// --- segments ------------------------------------------------------------

std::array<BinaryForm, 3> PathSegment::quadratics_at(const Rational& t) const {
  return {eval_quad(quads[0], t), eval_quad(quads[1], t), eval_quad(quads[2], t)};
}

Curve PathSegment::at(const Rational& t) const {
  if (kind == Kind::Ambient) return base.transformed(lerp_identity(step, t) * prefix);
  return curve_of(quadratics_at(t));
}

bool PathSegment::certify() const {
  if (kind == Kind::Ambient) return nonvanishing_on_unit(lerp_determinant(step));
  for (const auto& q : quads)
    if (!nonvanishing_on_unit(q[1] * q[1] - q[0] * q[2].scaled(Rational(4)))) return false;
  for (size_t j = 0; j < 3; ++j)
    for (size_t k = j + 1; k < 3; ++k) {
      const QuadPath& x = quads[j];
      const QuadPath& y = quads[k];
      const QPoly ac = x[0] * y[2] - y[0] * x[2];
      const QPoly ab = x[0] * y[1] - y[0] * x[1];
      const QPoly bc = x[1] * y[2] - y[1] * x[2];
      if (!nonvanishing_on_unit(ac * ac - ab * bc)) return false;
    }
  return true;
}

// --- transforms ----------------------------------------------------------

std::vector<Mat3> transform_stages(const Mat3& t) {
  const Rational d = det3(t);
  if (sgn(d) == 0) throw std::invalid_argument("transform_stages needs an invertible matrix");
  Mat3 target = t;
  if (sgn(d) < 0)
    for (auto& row : target)
      for (auto& v : row) v = -v;
  if (target == identity3()) return {};
  if (nonvanishing_on_unit(lerp_determinant(target))) return {target};

  // Reduce target to I by shears, two quarter turns and a positive
  // diagonal; the stages are the inverted operations in reverse.
  std::vector<Mat3> ops;
  Mat3 m = target;
  auto apply = [&](const Mat3& o) {
    ops.push_back(o);
    m = o * m;
  };
  auto shear = [](size_t i, size_t r, const Rational& lam) {
    Mat3 o = identity3();
    o[i][r] = lam;
    return o;
  };
  for (size_t j = 0; j < 3; ++j) {
    if (sgn(m[j][j]) == 0) {
      size_t r = j + 1;
      while (sgn(m[r][j]) == 0) ++r;
      apply(shear(j, r, Rational(1)));
    }
    for (size_t i = 0; i < 3; ++i)
      if (i != j && sgn(m[i][j]) != 0) apply(shear(i, j, -m[i][j] / m[j][j]));
  }
  std::vector<size_t> neg;
  for (size_t i = 0; i < 3; ++i)
    if (sgn(m[i][i]) < 0) neg.push_back(i);
  if (neg.size() == 2) {
    const size_t i = neg[0], j = neg[1];
    for (int half = 0; half < 2; ++half) {
      apply(shear(i, j, Rational(-1)));
      apply(shear(j, i, Rational(1)));
      apply(shear(i, j, Rational(-1)));
    }
  }
  Mat3 diag = scalar3(Rational(0));
  for (size_t i = 0; i < 3; ++i) diag[i][i] = 1 / m[i][i];
  apply(diag);
  if (m != identity3()) throw std::logic_error("shear reduction failed");

  std::vector<Mat3> stages;
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    Mat3 e = inverse3(*it);
    if (e != identity3()) stages.push_back(e);
  }
  return stages;
}

std::vector<Mat3> transform_path(const Mat3& t, int steps) {
  if (steps < 1) throw std::invalid_argument("transform_path needs at least one step");
  const auto stages = transform_stages(t);
  std::vector<Mat3> out;
  const long n = static_cast<long>(stages.size());
  for (int k = 0; k < steps; ++k) {
    if (n == 0) {
      out.push_back(identity3());
      continue;
    }
    const Rational g = steps == 1 ? Rational(0) : Rational(k) / Rational(steps - 1);
    const Rational x = g * n;
    long idx = std::min(static_cast<long>(floor(x).get_num().get_si()), n - 1);
    Mat3 prefix = identity3();
    for (long j = 0; j < idx; ++j) prefix = stages[static_cast<size_t>(j)] * prefix;
    out.push_back(lerp_identity(stages[static_cast<size_t>(idx)], x - idx) * prefix);
  }
  return out;
}

// --- paths ---------------------------------------------------------------

std::vector<PathSegment> plan_path(const Curve& a, const Curve& b, bool* reflected) {
  return plan_direct(a, b, reflected);
}

IsotopyPath build_path(const Curve& a, const Curve& b, int steps) {
  if (steps < 2) throw std::invalid_argument("build_path needs at least two steps");
  const GenericityCertificate ca = verify_generic(a), cb = verify_generic(b);
  if (ca.class_id != cb.class_id)
    throw Error(ErrorKind::DifferentClass, to_string(ca.class_id) + " vs " + to_string(cb.class_id));

  IsotopyPath path;
  path.class_id = ca.class_id;
  std::vector<PathSegment> segs;
  if (!equal_up_to_scalar(a, b)) {
    try {
      segs = plan_direct(a, b, &path.reflected);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PathObstruction) throw;
      const Curve rep = realize_class(ca.class_id);
      bool r1 = false, r2 = false;
      segs = concat(plan_direct(a, rep, &r1), plan_direct(rep, b, &r2));
      path.reflected = r1 || r2;
      path.via_representative = true;
    }
  }
  for (const auto& s : segs) path.phases.push_back(s.phase);

  const long n = static_cast<long>(segs.size());
  for (int k = 0; k < steps; ++k) {
    PathStep st;
    st.t = Rational(k) / Rational(steps - 1);
    if (k == 0) {
      st.curve = a;
      st.phase = "start";
    } else if (k == steps - 1) {
      st.curve = b;
      st.phase = "end";
    } else if (n == 0) {
      st.curve = a;
      st.phase = "constant";
    } else {
      const Rational x = st.t * n;
      const long idx = std::min(static_cast<long>(floor(x).get_num().get_si()), n - 1);
      st.curve = segs[static_cast<size_t>(idx)].at(x - idx);
      st.phase = segs[static_cast<size_t>(idx)].phase;
    }
    if (k == 0 && n > 0 && !equal_up_to_scalar(segs.front().at(Rational(0)), a))
      throw std::logic_error("path does not start at a");
    if (k == steps - 1 && n > 0 && !equal_up_to_scalar(segs.back().at(Rational(1)), b))
      throw std::logic_error("path does not end at b");
    try {
      st.certificate = verify_generic(st.curve);
    } catch (const Error& e) {
      throw Error(ErrorKind::PathObstruction, std::string("sample failed genericity: ") + e.what());
    }
    if (st.certificate.class_id != path.class_id) throw Error(ErrorKind::PathObstruction, "sample changed class");
    path.steps.push_back(std::move(st));
  }
  return path;
}

}  // namespace nodal4
