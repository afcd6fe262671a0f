#pragma once

#include "nodal4/realize.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace nodal4 {

using Exponent3 = std::array<int, 3>;

/// Homogeneous polynomial in x0, x1, x2 with rational coefficients.
class TernaryForm {
 public:
  TernaryForm() = default;
  explicit TernaryForm(int degree) : degree_(degree) {}
  static TernaryForm linear(const std::array<Rational, 3>& l);
  /// Exponents of every monomial of degree d, x0 powers descending.
  static std::vector<Exponent3> monomials(int d);

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponent3& e) const;
  void set(const Exponent3& e, const Rational& v);
  const std::map<Exponent3, Rational>& terms() const { return terms_; }

  Rational eval(const std::array<Rational, 3>& x) const;
  double eval(const std::array<double, 3>& x) const;
  TernaryForm derivative(int k) const;
  /// f(M x).
  TernaryForm substitute(const Mat3& m) const;
  /// f(p0, p1, p2) as a binary form.
  BinaryForm compose(const Curve& c) const;
  TernaryForm scaled(const Rational& k) const;

  friend TernaryForm operator+(const TernaryForm& a, const TernaryForm& b);
  friend TernaryForm operator*(const TernaryForm& a, const TernaryForm& b);
  friend bool operator==(const TernaryForm& a, const TernaryForm& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  int degree_ = 0;
  std::map<Exponent3, Rational> terms_;  // nonzero coefficients only
};

/// Quartic F with F(theta) = 0 identically, scaled so the largest
/// coefficient magnitude is 1.
using ImplicitQuartic = TernaryForm;

/// Throws ImplicitizationFailure unless exactly one quartic (up to scale)
/// vanishes on the curve.
ImplicitQuartic implicitize(const Curve& c);

/// Exact: no point of CP^2 where all partial derivatives vanish.
bool is_nonsingular(const TernaryForm& f);

namespace detail {
struct RasterData;
}

/// Components of RP^2 minus the zero set, sampled on the cube-map sphere.
/// Blocks of cells the curve never reaches are stored whole, so fine
/// resolutions stay cheap.
struct RasterMap {
  int resolution = 0;  // cells per cube-face edge
  struct Component {
    long cells = 0;               // sphere cells over both lifts
    bool lift_connected = false;  // preimage on the sphere is connected
    /// Meets some crossing node in two or more of its four sectors, so the
    /// closure is not a closed disk even when the component is an open one.
    bool pinched = false;
    bool disk = false;
  };
  std::vector<Component> components;
  bool stable = false;  // agreed with the doubled resolution
  /// Per real crossing node of the traced curve: the component in each of
  /// the four sectors between its branches (-1 if unresolved).
  std::vector<std::array<int, 4>> node_sectors;
  long curve_cells = 0;  // sphere cells meeting the curve
  std::shared_ptr<const detail::RasterData> data;

  size_t cell_count() const { return 6 * static_cast<size_t>(resolution) * static_cast<size_t>(resolution); }
  /// Component containing the direction x (any nonzero vector), -1 on the curve.
  int component_of(const std::array<double, 3>& x) const;
};

/// Single resolution, no stability check. The trace curve, when given, adds
/// the cells met by its real image and masks a small ball around each real
/// crossing, where the branches would otherwise cut the sectors into
/// sub-cell pockets.
RasterMap raster_at(const TernaryForm& f, int resolution, const Curve* trace = nullptr);
/// Compares with 2 x resolution; throws UnstableResolution when the number
/// of components or their disk flags differ. A component is a disk when one
/// lift has a connected complement on the sphere and it is not pinched.
RasterMap raster_components(const Curve& c, int resolution);
RasterMap raster_components(const TernaryForm& f, int resolution);

bool is_disk(const RasterMap& m, int component);

/// Callers that retry on UnstableResolution double up to this resolution.
constexpr int kMaxRetryResolution = 4096;

/// Multiplicity of each distinct root of line o theta (complex roots
/// included); they always add up to 4.
std::vector<int> line_multiplicities(const Curve& c, const std::array<Rational, 3>& line);

struct PlacementReport {
  std::vector<int> components;  // per solitary node
  std::vector<bool> disk;       // per solitary node
  bool shared = false;          // all solitary nodes in one component
  bool all_non_disk = false;
  int component_count = 0;
  int disk_count = 0;
  bool stable = false;
  int resolution = 0;  // the one that proved stable
  /// For 1212|s1: the solitary node's oval ends up nested after perturbation.
  std::optional<bool> nested;
};

/// Retries doubled resolutions on UnstableResolution. Throws
/// std::invalid_argument when the curve has no solitary node.
PlacementReport solitary_placement_check(const Curve& c, int resolution = 512);

struct OvalReport {
  int l = 0;
  int injective_pairs = 0;
  std::optional<int> pi_plus, pi_minus;
  Rational epsilon;
  int resolution = 0;
  /// Number of ovals around each query point (solitary nodes when perturbing).
  std::vector<int> depths;
};

/// Ovals of a nonsingular quartic; throws StillSingular or UnstableResolution.
OvalReport count_ovals(const TernaryForm& f, int resolution, const std::vector<std::array<double, 3>>& points = {});

/// F + eps G with G = L^4 for a line L far from every node.
TernaryForm perturbation_term(const Curve& c);
OvalReport perturb_and_count(const Curve& c, const Rational& eps, int resolution = 512);
/// Tries eps = 1/1024, halving up to 10 times, first with the sign that
/// grows an oval at each solitary node, then with the other sign.
OvalReport perturb_search(const Curve& c, int resolution = 512);

bool rokhlin_check(int l, int pi_plus, int pi_minus, int d);

/// Component labels as gray levels, faces laid out 3 x 2, at most 512
/// pixels per face edge.
void write_pgm(const RasterMap& m, const std::string& path);

}  // namespace nodal4
