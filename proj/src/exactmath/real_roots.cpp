#include "nodal4/real_roots.hpp"

#include <algorithm>

namespace nodal4 {

int sign_at(const QPoly& p, const Rational& x) { return sgn(p.eval(x)); }

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    QPoly r = chain[chain.size() - 2] % chain.back();
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

namespace {

int variations(const std::vector<int>& signs) {
  int v = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int variations_at(const std::vector<QPoly>& chain, const Rational& x) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(sign_at(q, x));
  return variations(s);
}

int variations_at_infinity(const std::vector<QPoly>& chain, bool positive) {
  std::vector<int> s;
  for (const auto& q : chain) {
    int sg = sgn(q.lead());
    if (!positive && q.degree() % 2 == 1) sg = -sg;
    s.push_back(sg);
  }
  return variations(s);
}

void isolate_into(const QPoly& p, const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi,
                  int count, std::vector<RealRoot>& out) {
  if (count == 0) return;
  if (count == 1) {
    RealRoot r;
    r.lo = lo;
    r.hi = hi;
    out.push_back(std::move(r));
    return;
  }
  Rational mid = (lo + hi) / 2;
  if (sign_at(p, mid) != 0) {
    isolate_into(p, chain, lo, mid, count_roots(chain, lo, mid), out);
    isolate_into(p, chain, mid, hi, count_roots(chain, mid, hi), out);
    return;
  }
  Rational delta = (hi - lo) / 4;
  Rational a, b;
  for (;;) {
    a = mid - delta;
    b = mid + delta;
    if (sign_at(p, a) != 0 && sign_at(p, b) != 0 && count_roots(chain, a, b) == 1) break;
    delta /= 2;
  }
  isolate_into(p, chain, lo, a, count_roots(chain, lo, a), out);
  RealRoot r;
  r.exact = true;
  r.value = mid;
  out.push_back(std::move(r));
  isolate_into(p, chain, b, hi, count_roots(chain, b, hi), out);
}

}  // namespace

int count_roots(const std::vector<QPoly>& chain, const Rational& a, const Rational& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots(const QPoly& p) {
  if (p.degree() <= 0) return 0;
  auto chain = sturm_chain(squarefree_part(p));
  return variations_at_infinity(chain, false) - variations_at_infinity(chain, true);
}

Rational root_bound(const QPoly& p) {
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) {
    Rational q = abs(p.coeff(k) / p.lead());
    if (q > m) m = q;
  }
  return m + 1;
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  Integer l(1);
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer g(0);
  std::vector<Rational> c = p.coeffs();
  for (auto& v : c) {
    v *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  Rational scale(1, 1);
  scale = Rational(1) / Rational(g);
  if (sgn(c.back()) < 0) scale = -scale;
  for (auto& v : c) v *= scale;
  return QPoly(std::move(c));
}

void bisect(const QPoly& p, RealRoot& r) {
  if (r.exact) return;
  Rational mid = (r.lo + r.hi) / 2;
  int s = sign_at(p, mid);
  if (s == 0) {
    r.exact = true;
    r.value = mid;
    return;
  }
  if (s == sign_at(p, r.lo))
    r.lo = mid;
  else
    r.hi = mid;
}

void refine(const QPoly& p, RealRoot& r, const Rational& width) {
  while (!r.exact && r.hi - r.lo >= width) bisect(p, r);
}

std::vector<RealRoot> isolate_roots(const QPoly& f) {
  std::vector<RealRoot> out;
  if (f.degree() <= 0) return out;
  auto chain = sturm_chain(f);
  Rational b = root_bound(f);
  isolate_into(f, chain, -b, b, count_roots(chain, -b, b), out);

  // Any rational root p/q has q | L; fractions with denominator <= L are
  // at least 1/L^2 apart, so the simplest fraction in a narrow enough
  // isolating interval is the only candidate.
  QPoly prim = primitive_part(f);
  Integer lead = abs(prim.lead().get_num());
  Rational width(1, 2);
  width /= Rational(lead * lead);
  for (auto& r : out) {
    if (r.exact) continue;
    refine(f, r, width);
    if (r.exact) continue;
    Rational cand = simplest_between(r.lo, r.hi);
    if (cand.get_den() <= lead && sign_at(f, cand) == 0) {
      r.exact = true;
      r.value = cand;
    }
  }
  return out;
}

}  // namespace nodal4
