#include "nodal4/error.hpp"
#include "nodal4/nodes.hpp"
#include "nodal4/topology.hpp"
#include "raster_grid.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>

namespace nodal4 {
namespace detail {

Vec3 CubeGrid::point(int f, double u, double v) {
  const int k = f / 2;
  const double s = f % 2 == 0 ? 1.0 : -1.0;
  Vec3 p{};
  p[static_cast<size_t>(k)] = s;
  p[static_cast<size_t>((k + 1) % 3)] = s * u;
  p[static_cast<size_t>((k + 2) % 3)] = s * v;
  return p;
}

Vec3 CubeGrid::center(size_t idx) const {
  int f, i, j;
  decode(idx, f, i, j);
  return point(f, -1 + (i + 0.5) * h, -1 + (j + 0.5) * h);
}

size_t CubeGrid::cell_of(const Vec3& p) const {
  size_t k = 0;
  for (size_t i = 1; i < 3; ++i)
    if (std::abs(p[i]) > std::abs(p[k])) k = i;
  const int f = 2 * static_cast<int>(k) + (p[k] < 0 ? 1 : 0);
  const double u = p[(k + 1) % 3] / p[k], v = p[(k + 2) % 3] / p[k];
  auto clampi = [&](double x) { return std::clamp(static_cast<int>(std::floor((x + 1) / h)), 0, n - 1); };
  return index(f, clampi(u), clampi(v));
}

size_t CubeGrid::neighbor(size_t idx, int di, int dj) const {
  int f, i, j;
  decode(idx, f, i, j);
  const int ni = i + di, nj = j + dj;
  if (ni >= 0 && ni < n && nj >= 0 && nj < n) return index(f, ni, nj);
  return cell_of(point(f, -1 + (ni + 0.5) * h, -1 + (nj + 0.5) * h));
}

SparseRaster::SparseRaster(int resolution) : g_(resolution) {
  b_ = std::clamp(resolution / 32, 1, 16);
  if (resolution % b_ != 0) throw std::invalid_argument("resolution must be a multiple of " + std::to_string(b_));
  c_ = resolution / b_;
  slot_.assign(6 * static_cast<size_t>(c_) * static_cast<size_t>(c_), -1);
}

size_t SparseRaster::block_of(size_t cell) const {
  int f, i, j;
  g_.decode(cell, f, i, j);
  return (static_cast<size_t>(f) * static_cast<size_t>(c_) + static_cast<size_t>(i / b_)) * static_cast<size_t>(c_) +
         static_cast<size_t>(j / b_);
}

size_t SparseRaster::block_antipode(size_t blk) const {
  const size_t cc = static_cast<size_t>(c_) * static_cast<size_t>(c_);
  return (blk / cc) % 2 == 0 ? blk + cc : blk - cc;
}

void SparseRaster::block_origin(size_t blk, int& f, int& i0, int& j0) const {
  const size_t cc = static_cast<size_t>(c_) * static_cast<size_t>(c_);
  f = static_cast<int>(blk / cc);
  i0 = static_cast<int>((blk % cc) / static_cast<size_t>(c_)) * b_;
  j0 = static_cast<int>(blk % static_cast<size_t>(c_)) * b_;
}

bool SparseRaster::expand(size_t blk) {
  if (expanded(blk)) return false;
  const size_t bb = static_cast<size_t>(b_) * static_cast<size_t>(b_);
  for (size_t k : {blk, block_antipode(blk)}) {
    slot_[k] = static_cast<int32_t>(owner_.size());
    owner_.push_back(k);
    mask_.resize(mask_.size() + bb, 0);
  }
  return true;
}

size_t SparseRaster::node_of(size_t cell) const {
  const size_t blk = block_of(cell);
  if (slot_[blk] < 0) return blk;
  int f, i, j;
  g_.decode(cell, f, i, j);
  const size_t bb = static_cast<size_t>(b_) * static_cast<size_t>(b_);
  return blocks() + static_cast<size_t>(slot_[blk]) * bb + static_cast<size_t>(i % b_) * static_cast<size_t>(b_) +
         static_cast<size_t>(j % b_);
}

size_t SparseRaster::cell_of_node(size_t node) const {
  const size_t bb = static_cast<size_t>(b_) * static_cast<size_t>(b_);
  const size_t local = (node - blocks()) % bb;
  int f, i0, j0;
  block_origin(owner_[(node - blocks()) / bb], f, i0, j0);
  return g_.index(f, i0 + static_cast<int>(local / static_cast<size_t>(b_)), j0 + static_cast<int>(local % static_cast<size_t>(b_)));
}

size_t SparseRaster::antipode_node(size_t node) const {
  if (is_block(node)) return block_antipode(node);
  return node_of(g_.antipode(cell_of_node(node)));
}

void SparseRaster::set_mask(size_t cell) {
  expand(block_of(cell));
  mask_[node_of(cell) - blocks()] = 1;
  mask_[node_of(g_.antipode(cell)) - blocks()] = 1;
}

namespace {

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 normalized(Vec3 v) {
  const double len = std::sqrt(dot(v, v));
  for (auto& x : v) x /= len;
  return v;
}

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Connected components of the nodes selected by `inside`; returns the
// number of components and fills comp (-1 outside).
template <class Pred>
int components(const SparseRaster& g, const Pred& inside, bool eight, std::vector<int32_t>& comp) {
  UnionFind uf(g.node_count());
  for (size_t v = 0; v < g.node_count(); ++v) {
    if (!g.alive(v) || !inside(v)) continue;
    g.neighbors(v, eight, [&](size_t w) {
      if (inside(w)) uf.unite(static_cast<uint32_t>(v), static_cast<uint32_t>(w));
    });
  }
  comp.assign(g.node_count(), -1);
  std::vector<int32_t> id(g.node_count(), -1);
  int next = 0;
  for (size_t v = 0; v < g.node_count(); ++v) {
    if (!g.alive(v) || !inside(v)) continue;
    const uint32_t r = uf.find(static_cast<uint32_t>(v));
    if (id[r] < 0) id[r] = next++;
    comp[v] = id[r];
  }
  return next;
}

struct DoubleForm {
  struct Term {
    int a, b, c;
    double k;
  };
  std::vector<Term> terms;
  explicit DoubleForm(const TernaryForm& f) {
    for (const auto& [e, c] : f.terms()) terms.push_back({e[0], e[1], e[2], c.get_d()});
  }
  double operator()(const Vec3& x) const {
    double px[3][5], r = 0;
    for (size_t i = 0; i < 3; ++i) {
      px[i][0] = 1;
      for (int k = 1; k < 5; ++k) px[i][k] = px[i][k - 1] * x[i];
    }
    for (const auto& t : terms) r += t.k * px[0][t.a] * px[1][t.b] * px[2][t.c];
    return r;
  }
};

int sign_of(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Masks the cells of an expanded block whose corners and center take both
// signs. Zero counts as neither, so isolated real zeros stay unmasked.
void fill_signs(SparseRaster& g, const DoubleForm& f, size_t blk) {
  const CubeGrid& fine = g.fine();
  const int b = g.block_edge();
  int face, i0, j0;
  g.block_origin(blk, face, i0, j0);
  std::vector<int> vs(static_cast<size_t>(b + 1) * static_cast<size_t>(b + 1));
  for (int i = 0; i <= b; ++i)
    for (int j = 0; j <= b; ++j)
      vs[static_cast<size_t>(i * (b + 1) + j)] =
          sign_of(f(CubeGrid::point(face, -1 + (i0 + i) * fine.h, -1 + (j0 + j) * fine.h)));
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j) {
      bool pos = false, neg = false;
      auto see = [&](int s) {
        pos = pos || s > 0;
        neg = neg || s < 0;
      };
      for (int di = 0; di <= 1; ++di)
        for (int dj = 0; dj <= 1; ++dj) see(vs[static_cast<size_t>((i + di) * (b + 1) + j + dj)]);
      see(sign_of(f(CubeGrid::point(face, -1 + (i0 + i + 0.5) * fine.h, -1 + (j0 + j + 0.5) * fine.h))));
      if (pos && neg) g.set_mask(fine.index(face, i0 + i, j0 + j));
    }
}

// Blocks whose coarse sample lattice already shows both signs.
void seed_by_signs(SparseRaster& g, const DoubleForm& f) {
  const CubeGrid& fine = g.fine();
  const int b = g.block_edge(), sub = std::min(b, 4), step = b / sub;
  const int c = fine.n / b, m = c * sub;
  std::vector<int> vs(static_cast<size_t>(m + 1) * static_cast<size_t>(m + 1));
  for (int face = 0; face < 6; face += 2) {
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j)
        vs[static_cast<size_t>(i * (m + 1) + j)] =
            sign_of(f(CubeGrid::point(face, -1 + i * step * fine.h, -1 + j * step * fine.h)));
    for (int bi = 0; bi < c; ++bi)
      for (int bj = 0; bj < c; ++bj) {
        bool pos = false, neg = false;
        for (int i = bi * sub; i <= (bi + 1) * sub; ++i)
          for (int j = bj * sub; j <= (bj + 1) * sub; ++j) {
            const int s = vs[static_cast<size_t>(i * (m + 1) + j)];
            pos = pos || s > 0;
            neg = neg || s < 0;
          }
        if (pos && neg) g.expand(g.block_of(fine.index(face, bi * b, bj * b)));
      }
  }
}

// theta(cos phi, sin phi) on the unit sphere; phi in [0, pi) covers RP^1.
struct Image {
  std::array<std::vector<double>, 3> coef;

  explicit Image(const Curve& c) {
    for (size_t i = 0; i < 3; ++i)
      for (const auto& x : c.p[i].coeffs()) coef[i].push_back(x.re.get_d());
  }
  Vec3 operator()(double phi) const {
    const double s = std::cos(phi), t = std::sin(phi);
    Vec3 p{};
    for (size_t i = 0; i < 3; ++i) {
      const int d = static_cast<int>(coef[i].size()) - 1;
      for (int k = 0; k <= d; ++k) p[i] += coef[i][static_cast<size_t>(k)] * std::pow(s, d - k) * std::pow(t, k);
    }
    return normalized(p);
  }
};

void mark_trace(SparseRaster& g, const Image& image) {
  const CubeGrid& fine = g.fine();
  const double step = fine.h / 4;
  const int base = 4096;
  const double pi = std::acos(-1.0);
  auto walk = [&](auto&& self, double a, double b, const Vec3& pa, const Vec3& pb, int depth) -> void {
    const double dx = pa[0] - pb[0], dy = pa[1] - pb[1], dz = pa[2] - pb[2];
    if (depth > 30 || std::sqrt(dx * dx + dy * dy + dz * dz) < step) {
      g.set_mask(fine.cell_of(pb));
      return;
    }
    const double m = (a + b) / 2;
    const auto pm = image(m);
    self(self, a, m, pa, pm, depth + 1);
    self(self, m, b, pm, pb, depth + 1);
  };
  auto prev = image(0);
  g.set_mask(fine.cell_of(prev));
  for (int k = 1; k <= base; ++k) {
    const double b = pi * k / base;
    const auto pb = image(b);
    walk(walk, pi * (k - 1) / base, b, prev, pb, 0);
    prev = pb;
  }
}

struct Crossing {
  Vec3 dir;
  std::array<Vec3, 4> bisectors;  // one per sector, in cyclic order
  double radius;                  // angular radius of the masked ball
};

// Largest angular radius r such that the ball of radius r around the node
// meets the curve only in the two branches, each leaving radially.
double clear_radius(const Image& image, const Vec3& node, const std::array<double, 2>& phis) {
  const int samples = 1 << 16;
  const double pi = std::acos(-1.0);
  std::vector<double> d(samples);
  for (int k = 0; k < samples; ++k)
    d[static_cast<size_t>(k)] = std::acos(std::min(1.0, std::abs(dot(image(pi * k / samples), node))));
  std::vector<bool> branch(samples, false);
  double bound = pi / 2;
  for (double phi : phis) {
    const int start = static_cast<int>(std::lround(phi / pi * samples)) % samples;
    for (int dir : {-1, 1}) {
      int k = start;
      for (;;) {
        branch[static_cast<size_t>(k)] = true;
        const int next = ((k + dir) % samples + samples) % samples;
        if (d[static_cast<size_t>(next)] < d[static_cast<size_t>(k)] && k != start) {
          bound = std::min(bound, d[static_cast<size_t>(k)]);
          break;
        }
        k = next;
        if (k == start) break;
      }
    }
  }
  for (int k = 0; k < samples; ++k)
    if (!branch[static_cast<size_t>(k)]) bound = std::min(bound, d[static_cast<size_t>(k)]);
  return bound;
}

std::vector<Crossing> crossings_of(const Curve& c, const Image& image, double h) {
  std::vector<Crossing> out;
  for (const auto& node : find_nodes(c)) {
    if (node.kind != NodeKind::Crossing) continue;
    Crossing x;
    x.dir = normalized({node.position[0].approx(), node.position[1].approx(), node.position[2].approx()});
    std::array<Vec3, 2> tangent;
    std::array<double, 2> phis;
    for (size_t k = 0; k < 2; ++k) {
      const auto& pre = node.real_preimages[k];
      const double phi = pre.is_infinity() ? 0.0 : std::atan2(1.0, pre.approx()), d = 1e-6;
      phis[k] = phi;
      const Vec3 a = image(phi - d), b = image(phi + d);
      const double sa = dot(a, x.dir) < 0 ? -1 : 1, sb = dot(b, x.dir) < 0 ? -1 : 1;
      Vec3 t{};
      for (size_t i = 0; i < 3; ++i) t[i] = sb * b[i] - sa * a[i];
      const double along = dot(t, x.dir);
      for (size_t i = 0; i < 3; ++i) t[i] -= along * x.dir[i];
      tangent[k] = normalized(t);
    }
    const double cosine = dot(tangent[0], tangent[1]);
    const double sine = std::sqrt(std::max(0.0, 1 - cosine * cosine));
    x.radius = std::min(5 * h / std::max(sine, 1e-9), 0.9 * clear_radius(image, x.dir, phis));
    for (size_t q = 0; q < 4; ++q) {
      const double s0 = q < 2 ? 1 : -1, s1 = (q == 0 || q == 3) ? 1 : -1;
      Vec3 b{};
      for (size_t i = 0; i < 3; ++i) b[i] = s0 * tangent[0][i] + s1 * tangent[1][i];
      x.bisectors[q] = normalized(b);
    }
    out.push_back(x);
  }
  return out;
}

// Near a crossing the sectors narrow below cell size and break into
// pockets; masking a ball that meets only the two branches removes them
// without changing the components.
void mark_ball(SparseRaster& g, const Crossing& x) {
  const CubeGrid& fine = g.fine();
  const double limit = std::cos(x.radius);
  std::vector<size_t> stack{fine.cell_of(x.dir)};
  std::set<size_t> seen{stack.back()};
  while (!stack.empty()) {
    const size_t c = stack.back();
    stack.pop_back();
    g.set_mask(c);
    for (int di = -1; di <= 1; ++di)
      for (int dj = -1; dj <= 1; ++dj) {
        const size_t nb = fine.neighbor(c, di, dj);
        if (seen.count(nb) || dot(normalized(fine.center(nb)), x.dir) < limit) continue;
        seen.insert(nb);
        stack.push_back(nb);
      }
  }
}

// Expands blocks until no masked cell touches an unexpanded block, filling
// sign masks as blocks appear.
void grow(SparseRaster& g, const DoubleForm& f) {
  const CubeGrid& fine = g.fine();
  const int b = g.block_edge();
  for (size_t s = 0; s < g.expanded_blocks(); ++s) {
    const size_t blk = g.owner(s);
    fill_signs(g, f, blk);
    int face, i0, j0;
    g.block_origin(blk, face, i0, j0);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j) {
        if (i != 0 && j != 0 && i != b - 1 && j != b - 1) continue;
        const size_t cell = fine.index(face, i0 + i, j0 + j);
        if (!g.cell_masked(cell)) continue;
        for (int di = -1; di <= 1; ++di)
          for (int dj = -1; dj <= 1; ++dj) {
            const size_t nb = g.block_of(fine.neighbor(cell, di, dj));
            if (!g.expanded(nb)) g.expand(nb);
          }
      }
  }
}

}  // namespace

OvalReport ovals_at(const TernaryForm& f, int resolution, const std::vector<Vec3>& points) {
  const RasterMap m = raster_at(f, resolution);
  const SparseRaster& g = m.data->grid;
  std::vector<int32_t> curve;
  const int pieces = components(g, [&](size_t v) { return g.masked(v); }, true, curve);
  auto unstable = [&](const std::string& why) {
    return Error(ErrorKind::UnstableResolution, why + " at resolution " + std::to_string(resolution));
  };
  std::vector<std::set<int>> touches(static_cast<size_t>(pieces));
  std::vector<int> twin(static_cast<size_t>(pieces), -1);
  for (size_t v = 0; v < g.node_count(); ++v) {
    const int k = curve[v];
    if (k < 0) continue;
    twin[static_cast<size_t>(k)] = curve[g.antipode_node(v)];
    g.neighbors(v, false, [&](size_t w) {
      const int r = m.data->label[w];
      if (r >= 0) touches[static_cast<size_t>(k)].insert(r);
    });
  }
  // Each oval lifts to two circles; each separates exactly two regions.
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < pieces; ++k) {
    if (twin[static_cast<size_t>(k)] == k) throw unstable("a curve component is its own antipode");
    if (touches[static_cast<size_t>(k)].size() != 2) throw unstable("an oval does not separate two regions");
    if (k < twin[static_cast<size_t>(k)])
      edges.emplace_back(*touches[static_cast<size_t>(k)].begin(), *touches[static_cast<size_t>(k)].rbegin());
  }
  const int regions = static_cast<int>(m.components.size());
  int root = -1;
  for (int r = 0; r < regions; ++r)
    if (m.components[static_cast<size_t>(r)].lift_connected) {
      if (root >= 0) throw unstable("two non-orientable regions");
      root = r;
    }
  if (root < 0 || regions != static_cast<int>(edges.size()) + 1) throw unstable("region graph is not a tree");
  std::vector<int> depth(static_cast<size_t>(regions), -1);
  depth[static_cast<size_t>(root)] = 0;
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int r = queue.front();
    queue.pop_front();
    for (const auto& [x, y] : edges) {
      const int other = x == r ? y : (y == r ? x : -1);
      if (other < 0 || depth[static_cast<size_t>(other)] >= 0) continue;
      depth[static_cast<size_t>(other)] = depth[static_cast<size_t>(r)] + 1;
      queue.push_back(other);
    }
  }
  OvalReport rep;
  rep.l = static_cast<int>(edges.size());
  for (int r = 0; r < regions; ++r) {
    if (depth[static_cast<size_t>(r)] < 0) throw unstable("region graph is disconnected");
    // The oval just outside region r sits inside depth(r) - 1 others.
    if (r != root) rep.injective_pairs += depth[static_cast<size_t>(r)] - 1;
  }
  for (const auto& p : points) {
    const int r = m.component_of(p);
    rep.depths.push_back(r < 0 ? -1 : depth[static_cast<size_t>(r)]);
  }
  return rep;
}

}  // namespace detail

using detail::CubeGrid;
using detail::SparseRaster;
using detail::Vec3;

int RasterMap::component_of(const std::array<double, 3>& x) const {
  const SparseRaster& g = data->grid;
  return data->label[g.node_of(g.fine().cell_of(x))];
}

RasterMap raster_at(const TernaryForm& f, int resolution, const Curve* trace) {
  if (resolution < 2) throw std::invalid_argument("resolution too small");
  auto data = std::make_shared<detail::RasterData>(detail::RasterData{SparseRaster(resolution), {}, {}});
  SparseRaster& g = data->grid;
  const detail::DoubleForm fd(f);
  std::vector<detail::Crossing> crossings;
  if (trace) {
    const detail::Image image(*trace);
    detail::mark_trace(g, image);
    crossings = detail::crossings_of(*trace, image, g.fine().h);
    for (const auto& x : crossings) detail::mark_ball(g, x);
  } else {
    detail::seed_by_signs(g, fd);
  }
  detail::grow(g, fd);

  RasterMap m;
  m.resolution = resolution;
  const int sphere_count = detail::components(g, [&](size_t v) { return !g.masked(v); }, false, data->sphere);
  std::vector<size_t> first(static_cast<size_t>(sphere_count), SIZE_MAX);
  std::vector<long> size(static_cast<size_t>(sphere_count), 0);
  for (size_t v = 0; v < g.node_count(); ++v) {
    if (g.alive(v) && g.masked(v)) ++m.curve_cells;
    const int s = data->sphere[v];
    if (s < 0) continue;
    if (first[static_cast<size_t>(s)] == SIZE_MAX) first[static_cast<size_t>(s)] = v;
    size[static_cast<size_t>(s)] += g.weight(v);
  }
  std::vector<int> rp(static_cast<size_t>(sphere_count), -1);
  for (int s = 0; s < sphere_count; ++s) {
    if (rp[static_cast<size_t>(s)] >= 0) continue;
    const int twin = data->sphere[g.antipode_node(first[static_cast<size_t>(s)])];
    const int id = static_cast<int>(m.components.size());
    rp[static_cast<size_t>(s)] = id;
    rp[static_cast<size_t>(twin)] = id;
    RasterMap::Component comp;
    comp.lift_connected = twin == s;
    comp.cells = size[static_cast<size_t>(s)] + (comp.lift_connected ? 0 : size[static_cast<size_t>(twin)]);
    if (!comp.lift_connected) {
      // One lift is an open disk iff its complement on the sphere is connected.
      std::vector<int32_t> rest;
      comp.disk = detail::components(g, [&](size_t v) { return data->sphere[v] != s; }, true, rest) == 1;
    }
    m.components.push_back(comp);
  }
  data->label.assign(g.node_count(), -1);
  for (size_t v = 0; v < g.node_count(); ++v)
    if (data->sphere[v] >= 0) data->label[v] = rp[static_cast<size_t>(data->sphere[v])];
  m.data = data;

  // Read each sector just outside the masked ball.
  for (const auto& x : crossings) {
    std::array<int, 4> sectors{-1, -1, -1, -1};
    for (size_t q = 0; q < 4; ++q)
      for (int k = 1; k <= 16 && sectors[q] < 0; ++k) {
        const double r = x.radius + k * g.fine().h;
        Vec3 p{};
        for (size_t i = 0; i < 3; ++i) p[i] = std::cos(r) * x.dir[i] + std::sin(r) * x.bisectors[q][i];
        sectors[q] = m.component_of(p);
      }
    for (size_t q = 0; q < 4; ++q)
      for (size_t o = q + 1; o < 4; ++o)
        if (sectors[q] >= 0 && sectors[q] == sectors[o]) {
          auto& comp = m.components[static_cast<size_t>(sectors[q])];
          comp.pinched = true;
          comp.disk = false;
        }
    m.node_sectors.push_back(sectors);
  }
  return m;
}

namespace {

std::vector<std::pair<bool, bool>> signature(const RasterMap& m) {
  std::vector<std::pair<bool, bool>> s;
  for (const auto& c : m.components) s.emplace_back(c.lift_connected, c.disk);
  std::sort(s.begin(), s.end());
  return s;
}

RasterMap stable_raster(const TernaryForm& f, int resolution, const Curve* trace) {
  RasterMap m = raster_at(f, resolution, trace);
  const RasterMap fine = raster_at(f, 2 * resolution, trace);
  if (signature(m) != signature(fine))
    throw Error(ErrorKind::UnstableResolution, "components differ between resolution " + std::to_string(resolution) +
                                                   " and " + std::to_string(2 * resolution));
  m.stable = true;
  return m;
}

}  // namespace

RasterMap raster_components(const Curve& c, int resolution) { return stable_raster(implicitize(c), resolution, &c); }

RasterMap raster_components(const TernaryForm& f, int resolution) { return stable_raster(f, resolution, nullptr); }

bool is_disk(const RasterMap& m, int component) { return m.components.at(static_cast<size_t>(component)).disk; }

void write_pgm(const RasterMap& m, const std::string& path) {
  const int n = std::min(m.resolution, 512);
  const CubeGrid g(n);
  std::vector<unsigned char> px(static_cast<size_t>(3 * n) * static_cast<size_t>(2 * n), 0);
  for (int f = 0; f < 6; ++f)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int k = m.component_of(g.center(g.index(f, i, j)));
        const int x = (f % 3) * n + i, y = (f / 3) * n + j;
        px[static_cast<size_t>(y) * static_cast<size_t>(3 * n) + static_cast<size_t>(x)] =
            static_cast<unsigned char>(k < 0 ? 0 : 60 + (k * 53) % 190);
      }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << "P5\n" << 3 * n << " " << 2 * n << "\n255\n";
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
    if (!out) throw std::runtime_error("cannot write " + path);
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nodal4
