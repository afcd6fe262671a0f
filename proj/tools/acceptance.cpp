// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "nodal4/algebraic.hpp"
#include "nodal4/cli.hpp"
#include "nodal4/error.hpp"
#include "nodal4/io.hpp"
#include "nodal4/isotopy.hpp"
#include "nodal4/topology.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace nodal4;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

bool report(int n, const std::string& name, const std::function<Outcome()>& body) {
  const auto t0 = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::printf("[%s] %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", n, name.c_str(), o.detail.c_str(),
              seconds_since(t0));
  std::fflush(stdout);
  return o.pass;
}

// Random helpers.

Rational rnd(std::mt19937_64& rng, long range, long max_den) {
  std::uniform_int_distribution<long> num(-range, range), den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

std::vector<Rational> distinct(std::mt19937_64& rng, size_t n, long range = 20, long max_den = 6) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  while (out.size() < n) {
    Rational r = rnd(rng, range, max_den);
    if (seen.insert(r).second) out.push_back(r);
  }
  return out;
}

ProjPoint1 at(const Rational& x) { return ProjPoint1::affine(Gaussian(x)); }

Mat3 random_invertible(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  for (;;) {
    Mat3 t;
    for (auto& row : t)
      for (auto& v : row) v = Rational(d(rng));
    if (sgn(det3(t)) != 0) return t;
  }
}

Mat2 random_moebius(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  for (;;) {
    Mat2 m{{{Rational(d(rng)), Rational(d(rng))}, {Rational(d(rng)), Rational(d(rng))}}};
    if (sgn(m[0][0] * m[1][1] - m[0][1] * m[1][0]) != 0) return m;
  }
}

// Seed realizing the class: the word, rotated and possibly reversed, laid
// out on increasing random rationals, plus random conjugate pairs.
NodeSeed class_seed(std::mt19937_64& rng, const ClassId& id) {
  std::vector<int> word;
  for (char ch : id.canonical_word) word.push_back(ch - '0');
  if (!word.empty()) {
    std::rotate(word.begin(), word.begin() + static_cast<long>(rng() % word.size()), word.end());
    if (rng() % 2) std::reverse(word.begin(), word.end());
  }
  auto xs = distinct(rng, word.size());
  std::sort(xs.begin(), xs.end());
  NodeSeed s;
  std::vector<std::vector<Rational>> ends(static_cast<size_t>(id.chord_count));
  for (size_t j = 0; j < word.size(); ++j) ends[static_cast<size_t>(word[j] - 1)].push_back(xs[j]);
  size_t k = 0;
  for (; k < ends.size(); ++k) s.pairs[k] = {at(ends[k][0]), at(ends[k][1])};
  const auto re = distinct(rng, 3), im = distinct(rng, 3, 20, 6);
  for (size_t j = 0; k < 3; ++k, ++j) {
    Rational y = abs(im[j]);
    if (sgn(y) == 0) y = Rational(7, 3);
    s.pairs[k] = {ProjPoint1::affine(Gaussian(re[j], y)), ProjPoint1::affine(Gaussian(re[j], -y))};
  }
  return s;
}

// Redraws seeds the library rejects as non-generic; counts the redraws.
Curve class_curve(std::mt19937_64& rng, const ClassId& id, long& rejected, NodeSeed* seed_out = nullptr) {
  for (;;) {
    const NodeSeed s = class_seed(rng, id);
    try {
      s.validate();
      Curve c = realize_from_seed(s);
      verify_generic(c);
      if (seed_out) *seed_out = s;
      return c;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotGeneric && e.kind() != ErrorKind::DegenerateSeed) throw;
      ++rejected;
    }
  }
}

// Brute force: perfect matchings of 2k points on a circle up to the
// dihedral group of order 4k.
int matching_orbits(int k) {
  const int n = 2 * k;
  std::vector<std::vector<int>> all;
  std::function<void(std::vector<int>&)> rec = [&](std::vector<int>& partner) {
    const auto it = std::find(partner.begin(), partner.end(), -1);
    if (it == partner.end()) {
      all.push_back(partner);
      return;
    }
    const int i = static_cast<int>(it - partner.begin());
    for (int j = i + 1; j < n; ++j)
      if (partner[static_cast<size_t>(j)] == -1) {
        partner[static_cast<size_t>(i)] = j;
        partner[static_cast<size_t>(j)] = i;
        rec(partner);
        partner[static_cast<size_t>(i)] = partner[static_cast<size_t>(j)] = -1;
      }
  };
  std::vector<int> start(static_cast<size_t>(n), -1);
  rec(start);
  std::set<std::vector<int>> seen;
  int orbits = 0;
  for (const auto& m : all) {
    if (seen.count(m)) continue;
    ++orbits;
    for (int r = 0; r < std::max(n, 1); ++r)
      for (int flip = 0; flip < 2; ++flip) {
        auto g = [&](int x) { return flip ? (r - x + 2 * n) % n : (x + r) % n; };
        std::vector<int> img(static_cast<size_t>(n));
        for (int x = 0; x < n; ++x) img[static_cast<size_t>(g(x))] = g(m[static_cast<size_t>(x)]);
        seen.insert(img);
      }
  }
  return n == 0 ? 1 : orbits;
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool proportional(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) return false;
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = i + 1; j <= a.degree(); ++j)
      if (a.coeff(i) * b.coeff(j) != a.coeff(j) * b.coeff(i)) return false;
  return !a.is_zero() && !b.is_zero();
}

BinaryForm from_roots(const Rational& lead, const std::vector<Rational>& roots) {
  BinaryForm f = BinaryForm::constant(Gaussian(lead));
  for (const auto& x : roots) f = f * BinaryForm::linear_vanishing_at(at(x));
  return f;
}

}  // namespace

int main() {
  std::mt19937_64 rng(20240601);
  const std::vector<ClassId> classes = enumerate_all(3);
  std::vector<Curve> reps;
  for (const auto& id : classes) reps.push_back(realize_class(id));
  bool all = true;

  all &= report(1, "class count", [&] {
    const auto t0 = Clock::now();
    std::ostringstream out, err;
    if (run_cli({"enumerate", "--json"}, out, err) != kExitOk) return Outcome{false, err.str()};
    const Json rows = Json::parse(out.str());
    std::map<int, int> per_k;
    for (const auto& row : rows) ++per_k[row["chords"].get<int>()];
    const double took = seconds_since(t0);
    std::ostringstream os;
    os << rows.size() << " classes, by chords 3/2/1/0 = " << per_k[3] << "/" << per_k[2] << "/" << per_k[1] << "/"
       << per_k[0] << ", orbit oracle " << matching_orbits(3) << "/" << matching_orbits(2) << "/"
       << matching_orbits(1) << "/" << matching_orbits(0);
    const bool ok = rows.size() == 9 && per_k[3] == 5 && per_k[2] == 2 && per_k[1] == 1 && per_k[0] == 1 &&
                    per_k[3] == matching_orbits(3) && per_k[2] == matching_orbits(2) &&
                    per_k[1] == matching_orbits(1) && per_k[0] == matching_orbits(0) && took < 1.0;
    return Outcome{ok, os.str()};
  });

  all &= report(2, "realize-classify round trip", [&] {
    const auto t0 = Clock::now();
    long checked = 0, wrong = 0, rejected = 0;
    for (const auto& id : classes)
      for (int trial = 0; trial < 100; ++trial) {
        const Curve c = class_curve(rng, id, rejected);
        ++checked;
        if (classify(c).class_id != id) ++wrong;
      }
    std::ostringstream os;
    os << checked << " seeds over 9 classes, " << wrong << " mismatches, " << rejected << " non-generic draws redrawn";
    return Outcome{wrong == 0 && checked >= 900 && seconds_since(t0) < 60, os.str()};
  });

  all &= report(3, "node recovery", [&] {
    const auto t0 = Clock::now();
    long checked = 0, wrong = 0, rejected = 0;
    for (int trial = 0; trial < 120; ++trial) {
      const ClassId& id = classes[static_cast<size_t>(trial) % classes.size()];
      NodeSeed s;
      const Curve c = class_curve(rng, id, rejected, &s);
      const auto nodes = find_nodes(c);
      ++checked;
      bool ok = nodes.size() == 3;
      std::array<bool, 3> hit{};
      for (const auto& n : nodes) {
        const auto pos = n.rational_position();
        const auto quad = n.rational_quadratic();
        if (!pos || !quad) {
          ok = false;
          continue;
        }
        int k = -1;
        for (int j = 0; j < 3; ++j) {
          std::array<Rational, 3> e{};
          e[static_cast<size_t>(j)] = 1;
          if (*pos == e) k = j;
        }
        if (k < 0 || hit[static_cast<size_t>(k)]) {
          ok = false;
          continue;
        }
        hit[static_cast<size_t>(k)] = true;
        const PointPair& p = s.pairs[static_cast<size_t>(k)];
        ok = ok && proportional(*quad, pair_quadratic(p));
        ok = ok && ((n.kind == NodeKind::Crossing) == p.first.is_real());
      }
      if (!ok) ++wrong;
    }
    std::ostringstream os;
    os << checked << " random seeds, " << wrong << " with wrong pairs or positions";
    return Outcome{wrong == 0 && checked >= 100 && seconds_since(t0) < 60, os.str()};
  });

  all &= report(4, "invariance", [&] {
    long checked = 0, wrong = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
      for (int trial = 0; trial < 50; ++trial) {
        wrong += classify(reps[i].transformed(random_invertible(rng))).class_id != classes[i];
        wrong += classify(reps[i].reparametrized(random_moebius(rng))).class_id != classes[i];
        checked += 2;
      }
    }
    std::ostringstream os;
    os << checked << " transformed curves (50 projective + 50 Moebius per class), " << wrong << " changed class";
    return Outcome{wrong == 0, os.str()};
  });

  all &= report(5, "Bezout through node pairs", [&] {
    long lines = 0, wrong = 0;
    for (const auto& c : reps) {
      const auto nodes = find_nodes(c);
      for (size_t a = 0; a < 3; ++a)
        for (size_t b = a + 1; b < 3; ++b) {
          const auto mult = line_multiplicities(c, cross(*nodes[a].rational_position(), *nodes[b].rational_position()));
          int total = 0;
          for (int m : mult) total += m;
          ++lines;
          // The four node preimages, each simple.
          wrong += total != 4 || mult != std::vector<int>{1, 1, 1, 1};
        }
    }
    std::ostringstream os;
    os << lines << " lines, " << wrong << " with multiplicities other than 1+1+1+1";
    return Outcome{wrong == 0 && lines == 27, os.str()};
  });

  all &= report(6, "solitary placement", [&] {
    const auto t0 = Clock::now();
    std::ostringstream os;
    bool ok = true;
    for (size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].solitary_count == 0) continue;
      const PlacementReport rep = solitary_placement_check(reps[i], 512);
      const bool good = rep.stable && rep.shared && rep.all_non_disk && rep.resolution >= 512;
      ok = ok && good;
      os << to_string(classes[i]) << " " << (good ? "ok" : "bad") << " at " << rep.resolution << "/"
         << 2 * rep.resolution << " (" << rep.component_count << " regions, " << rep.disk_count << " disks); ";
    }
    const double took = seconds_since(t0);
    os << "total under 120 s: " << (took < 120 ? "yes" : "no");
    return Outcome{ok && took < 120, os.str()};
  });

  all &= report(7, "1212|s1 nesting and Rokhlin", [&] {
    const auto t0 = Clock::now();
    const OvalReport ov = perturb_search(realize_class(parse_class_id("2-1212|s1")), 512);
    std::vector<std::pair<int, int>> consistent;
    for (int plus = 0; plus <= ov.injective_pairs; ++plus)
      if (rokhlin_check(ov.l, plus, ov.injective_pairs - plus, 4)) consistent.emplace_back(plus, ov.injective_pairs - plus);
    std::ostringstream os;
    os << "eps = " << to_string(ov.epsilon) << ", l = " << ov.l << ", injective pairs = " << ov.injective_pairs
       << ", consistent (pi+, pi-):";
    for (const auto& [p, m] : consistent) os << " (" << p << "," << m << ")";
    const bool ok = ov.l == 2 && ov.injective_pairs == 1 && consistent.size() == 1 &&
                    consistent[0] == std::make_pair(0, 1) && seconds_since(t0) < 60;
    return Outcome{ok, os.str()};
  });

  all &= report(8, "isotopy paths", [&] {
    std::ostringstream os;
    bool ok = true;
    double worst = 0;
    long samples = 0, rejected = 0;
    for (const auto& id : classes) {
      const auto t0 = Clock::now();
      auto make = [&] {
        return class_curve(rng, id, rejected).transformed(random_invertible(rng)).reparametrized(random_moebius(rng));
      };
      const Curve a = make(), b = make();
      const IsotopyPath p = build_path(a, b, 32);
      bool good = p.steps.size() >= 32 && p.steps.front().curve == a && p.steps.back().curve == b;
      for (const auto& st : p.steps) good = good && verify_generic(st.curve).class_id == id;
      samples += static_cast<long>(p.steps.size());
      const double took = seconds_since(t0);
      worst = std::max(worst, took);
      good = good && took < 120;
      if (!good) os << to_string(id) << " failed; ";
      ok = ok && good;
    }
    os << samples << " certified samples over 9 classes, slowest class " << worst << " s";
    return Outcome{ok, os.str()};
  });

  all &= report(9, "kernel oracles", [&] {
    long res_checks = 0, res_wrong = 0, iso_checks = 0, iso_wrong = 0;
    std::uniform_int_distribution<int> deg(1, 4);
    for (int trial = 0; trial < 1000; ++trial) {
      const auto f_roots = distinct(rng, static_cast<size_t>(deg(rng)), 9, 4);
      const auto g_roots = distinct(rng, static_cast<size_t>(deg(rng)), 9, 4);
      Rational lf = rnd(rng, 5, 3), lg = rnd(rng, 5, 3);
      if (sgn(lf) == 0) lf = 1;
      if (sgn(lg) == 0) lg = -2;
      const BinaryForm f = from_roots(lf, f_roots), g = from_roots(lg, g_roots);
      // lc(f)^deg g * prod over roots x of f of g(x, 1).
      Rational expect(1);
      for (int k = 0; k < g.degree(); ++k) expect *= lf;
      for (const auto& x : f_roots) expect *= g.eval(Gaussian(x), Gaussian(1)).re;
      ++res_checks;
      res_wrong += resultant(f, g) != Gaussian(expect);
    }
    for (int trial = 0; trial < 1000; ++trial) {
      auto roots = distinct(rng, static_cast<size_t>(1 + trial % 6), 30, 8);
      Rational lead = rnd(rng, 7, 2);
      if (sgn(lead) == 0) lead = 3;
      BinaryForm f = from_roots(lead, roots);
      const bool with_infinity = trial % 5 == 0;
      if (with_infinity) f = f * BinaryForm::linear_vanishing_at(ProjPoint1::infinity());
      std::sort(roots.begin(), roots.end());
      const auto got = isolate_real_roots(f);
      bool ok = got.size() == roots.size() + (with_infinity ? 1 : 0);
      for (size_t k = 0; ok && k < roots.size(); ++k) ok = got[k] == AlgebraicReal::rational(roots[k]);
      if (ok && with_infinity) ok = got.back().is_infinity();
      ++iso_checks;
      iso_wrong += !ok;
    }
    std::ostringstream os;
    os << res_checks << " resultants (" << res_wrong << " wrong), " << iso_checks << " root isolations (" << iso_wrong
       << " wrong)";
    return Outcome{res_wrong == 0 && iso_wrong == 0 && res_checks >= 1000 && iso_checks >= 1000, os.str()};
  });

  std::printf("%s\n", all ? "all criteria pass" : "some criteria FAIL");
  return all ? 0 : 1;
}
