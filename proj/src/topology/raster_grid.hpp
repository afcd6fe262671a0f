#pragma once

#include "nodal4/topology.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace nodal4 {
namespace detail {

using Vec3 = std::array<double, 3>;

// Cube-map lattice on the unit sphere. Face f = 2k + (sign < 0) is the
// face with x_k = +-1; the other coordinates are (sign u, sign v), so the
// antipode of a cell is the same (i, j) on the paired face.
struct CubeGrid {
  int n;
  double h;

  explicit CubeGrid(int res) : n(res), h(2.0 / res) {}

  size_t cells() const { return 6 * static_cast<size_t>(n) * static_cast<size_t>(n); }
  size_t index(int f, int i, int j) const {
    return (static_cast<size_t>(f) * static_cast<size_t>(n) + static_cast<size_t>(i)) * static_cast<size_t>(n) +
           static_cast<size_t>(j);
  }
  void decode(size_t idx, int& f, int& i, int& j) const {
    const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
    f = static_cast<int>(idx / nn);
    i = static_cast<int>((idx % nn) / static_cast<size_t>(n));
    j = static_cast<int>(idx % static_cast<size_t>(n));
  }
  static Vec3 point(int f, double u, double v);
  Vec3 center(size_t idx) const;
  size_t cell_of(const Vec3& p) const;
  size_t antipode(size_t idx) const {
    const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
    return (idx / nn) % 2 == 0 ? idx + nn : idx - nn;
  }
  size_t neighbor(size_t idx, int di, int dj) const;
};

// Two-level raster: the fine lattice is cut into b x b blocks. Blocks the
// curve never reaches stay whole (one node, always off the curve); the
// others are expanded into fine cells. Connectivity is the same as on the
// full fine lattice.
class SparseRaster {
 public:
  explicit SparseRaster(int resolution);

  const CubeGrid& fine() const { return g_; }
  int block_edge() const { return b_; }
  size_t blocks() const { return slot_.size(); }
  size_t node_count() const { return blocks() + mask_.size(); }

  size_t block_of(size_t cell) const;
  size_t block_antipode(size_t blk) const;
  bool expanded(size_t blk) const { return slot_[blk] >= 0; }
  /// Expands the block and its antipode; false if already expanded.
  bool expand(size_t blk);
  size_t expanded_blocks() const { return owner_.size(); }
  size_t owner(size_t slot) const { return owner_[slot]; }
  void block_origin(size_t blk, int& f, int& i0, int& j0) const;

  size_t node_of(size_t cell) const;
  bool is_block(size_t node) const { return node < blocks(); }
  /// Expanded blocks keep a dead node id.
  bool alive(size_t node) const { return !is_block(node) || slot_[node] < 0; }
  bool masked(size_t node) const { return !is_block(node) && mask_[node - blocks()] != 0; }
  long weight(size_t node) const { return is_block(node) ? static_cast<long>(b_) * b_ : 1; }
  size_t antipode_node(size_t node) const;
  size_t cell_of_node(size_t node) const;

  /// Marks a fine cell and its antipode as meeting the curve.
  void set_mask(size_t cell);
  bool cell_masked(size_t cell) const { return masked(node_of(cell)); }

  /// Calls fn(node) for every node sharing an edge (or a corner when
  /// eight) with `node`; repeats are possible.
  template <class Fn>
  void neighbors(size_t node, bool eight, Fn&& fn) const;

 private:
  CubeGrid g_;
  int b_ = 1, c_ = 1;
  std::vector<int32_t> slot_;
  std::vector<size_t> owner_;
  std::vector<uint8_t> mask_;
};

template <class Fn>
void SparseRaster::neighbors(size_t node, bool eight, Fn&& fn) const {
  static constexpr int kDirs[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
  const int nd = eight ? 8 : 4;
  if (!is_block(node)) {
    const size_t cell = cell_of_node(node);
    for (int d = 0; d < nd; ++d) fn(node_of(g_.neighbor(cell, kDirs[d][0], kDirs[d][1])));
    return;
  }
  int f, i0, j0;
  block_origin(node, f, i0, j0);
  const int last = b_ - 1;
  for (int side = 0; side < 4; ++side) {
    const int di = kDirs[side][0], dj = kDirs[side][1];
    auto cell_at = [&](int k) {
      if (di == 1) return g_.index(f, i0 + last, j0 + k);
      if (di == -1) return g_.index(f, i0, j0 + k);
      if (dj == 1) return g_.index(f, i0 + k, j0 + last);
      return g_.index(f, i0 + k, j0);
    };
    const size_t probe = g_.neighbor(cell_at(b_ / 2), di, dj);
    if (!expanded(block_of(probe))) {
      fn(block_of(probe));
      continue;
    }
    for (int k = 0; k < b_; ++k) {
      const size_t c = cell_at(k);
      fn(node_of(g_.neighbor(c, di, dj)));
      if (eight) {
        fn(node_of(g_.neighbor(c, di + dj, dj + di)));
        fn(node_of(g_.neighbor(c, di - dj, dj - di)));
      }
    }
  }
  if (eight) {
    fn(node_of(g_.neighbor(g_.index(f, i0 + last, j0 + last), 1, 1)));
    fn(node_of(g_.neighbor(g_.index(f, i0 + last, j0), 1, -1)));
    fn(node_of(g_.neighbor(g_.index(f, i0, j0 + last), -1, 1)));
    fn(node_of(g_.neighbor(g_.index(f, i0, j0), -1, -1)));
  }
}

struct RasterData {
  SparseRaster grid;
  std::vector<int32_t> sphere;  // per node: component on the sphere, -1 on the curve or dead
  std::vector<int32_t> label;   // per node: RP^2 component, -1 on the curve or dead
};

/// Ovals of a nonsingular form at one resolution (no stability check).
OvalReport ovals_at(const TernaryForm& f, int resolution, const std::vector<Vec3>& points);

}  // namespace detail
}  // namespace nodal4
