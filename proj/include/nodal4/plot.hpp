#pragma once

#include "nodal4/realize.hpp"

#include <optional>
#include <string>

namespace nodal4 {

struct PlotSpec {
  /// Affine chart: divide by coordinate `chart`.
  int chart = 2;
  /// xmin, xmax, ymin, ymax; fitted to the curve when unset.
  std::optional<std::array<Rational, 4>> window;
  int samples = 400;
  double stroke = 1.5;
  double dot = 4.0;
  int size = 480;
  /// Apply a fixed projective change first so that no node lies on the
  /// chart's line at infinity (the realized nodes sit at coordinate points).
  bool generic_view = true;

  /// Throws invalid_argument unless samples >= 100 and the window is nonempty.
  void validate() const;
};

/// Image in the chosen chart, solitary nodes as <circle class="solitary">.
std::string plot_svg(const Curve& c, const PlotSpec& spec);

/// The transform applied by generic_view (identity when it is off).
Mat3 view_transform(const Curve& c, const PlotSpec& spec);

}  // namespace nodal4
