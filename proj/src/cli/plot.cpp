#include "nodal4/plot.hpp"

#include "nodal4/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace nodal4 {

namespace {

using V3 = std::array<double, 3>;

V3 map_point(const Mat3& m, const V3& z) {
  V3 out{};
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = 0; j < 3; ++j) out[i] += m[i][j].get_d() * z[j];
  return out;
}

V3 approx(const Node& n) { return {n.position[0].approx(), n.position[1].approx(), n.position[2].approx()}; }

// How far the nodes stay from the line at infinity of the chart.
double clearance(const Mat3& m, const std::vector<Node>& nodes, int chart) {
  double worst = 1;
  for (const auto& n : nodes) {
    const V3 w = map_point(m, approx(n));
    const double norm = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
    worst = std::min(worst, std::abs(w[static_cast<size_t>(chart)]) / norm);
  }
  return worst;
}

Mat3 mat(std::initializer_list<long> v) {
  Mat3 m;
  auto it = v.begin();
  for (auto& row : m)
    for (auto& x : row) x = Rational(*it++);
  return m;
}

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

struct Chart {
  std::array<std::vector<double>, 3> coeffs;  // per coordinate, s^(4-k) t^k
  size_t w, a, b;                              // divide by w; plot (a, b)

  V3 at(double phi) const {
    const double s = std::cos(phi), t = std::sin(phi);
    V3 out{};
    for (size_t i = 0; i < 3; ++i) {
      double v = 0;
      for (size_t k = 0; k < 5; ++k) v += coeffs[i][k] * std::pow(s, 4.0 - k) * std::pow(t, static_cast<double>(k));
      out[i] = v;
    }
    return out;
  }
};

}  // namespace

void PlotSpec::validate() const {
  if (chart < 0 || chart > 2) throw std::invalid_argument("chart must be x0, x1 or x2");
  if (samples < 100) throw std::invalid_argument("samples must be at least 100");
  if (window && ((*window)[0] >= (*window)[1] || (*window)[2] >= (*window)[3]))
    throw std::invalid_argument("plot window is empty");
  if (size <= 0 || stroke <= 0 || dot <= 0) throw std::invalid_argument("sizes must be positive");
}

Mat3 view_transform(const Curve& c, const PlotSpec& spec) {
  if (!spec.generic_view) return identity3();
  const auto nodes = find_nodes(c);
  const std::vector<Mat3> candidates = {
      identity3(),
      mat({4, 1, 1, 1, 4, 1, 1, 1, 4}),
      mat({3, -1, 1, 1, 3, -1, 1, 1, 3}),
      mat({2, 1, -1, -1, 2, 1, 1, -1, 2}),
      mat({5, 2, 1, 1, 5, 2, 2, 1, 5}),
  };
  Mat3 best = candidates[0];
  double score = clearance(best, nodes, spec.chart);
  for (const auto& m : candidates) {
    // Keep the raw coordinates unless they hide a node.
    if (score > 0.2) break;
    const double s = clearance(m, nodes, spec.chart);
    if (s > score + 1e-9) {
      best = m;
      score = s;
    }
  }
  return best;
}

std::string plot_svg(const Curve& c, const PlotSpec& spec) {
  spec.validate();
  const Mat3 view = view_transform(c, spec);
  const Curve moved = c.transformed(view);
  const auto nodes = find_nodes(c);

  Chart chart;
  chart.w = static_cast<size_t>(spec.chart);
  chart.a = (chart.w + 1) % 3;
  chart.b = (chart.w + 2) % 3;
  if (chart.a > chart.b) std::swap(chart.a, chart.b);
  for (size_t i = 0; i < 3; ++i)
    for (const auto& v : moved.p[i].coeffs()) chart.coeffs[i].push_back(v.re.get_d());

  auto to_plane = [&](const V3& p, double& x, double& y) {
    if (std::abs(p[chart.w]) < 1e-12) return false;
    x = p[chart.a] / p[chart.w];
    y = p[chart.b] / p[chart.w];
    return std::isfinite(x) && std::isfinite(y);
  };

  const double pi = std::numbers::pi;
  const int n = spec.samples;
  std::vector<V3> coarse;
  for (int k = 0; k <= n; ++k) coarse.push_back(chart.at(pi * k / n));

  std::vector<std::array<double, 2>> dots;
  for (const auto& node : nodes) {
    if (node.kind != NodeKind::Solitary) continue;
    double x, y;
    if (to_plane(map_point(view, approx(node)), x, y)) dots.push_back({x, y});
  }

  double xmin, xmax, ymin, ymax;
  if (spec.window) {
    xmin = (*spec.window)[0].get_d();
    xmax = (*spec.window)[1].get_d();
    ymin = (*spec.window)[2].get_d();
    ymax = (*spec.window)[3].get_d();
  } else {
    std::vector<double> xs, ys;
    for (const auto& p : coarse) {
      double x, y;
      if (to_plane(p, x, y)) {
        xs.push_back(x);
        ys.push_back(y);
      }
    }
    auto quantile = [](std::vector<double> v, double q) {
      if (v.empty()) return 0.0;
      std::sort(v.begin(), v.end());
      return v[static_cast<size_t>(q * static_cast<double>(v.size() - 1))];
    };
    xmin = quantile(xs, 0.05);
    xmax = quantile(xs, 0.95);
    ymin = quantile(ys, 0.05);
    ymax = quantile(ys, 0.95);
    for (const auto& d : dots) {
      xmin = std::min(xmin, d[0]);
      xmax = std::max(xmax, d[0]);
      ymin = std::min(ymin, d[1]);
      ymax = std::max(ymax, d[1]);
    }
    const double span = std::max({xmax - xmin, ymax - ymin, 1e-6}) * 1.3;
    const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
    xmin = cx - span / 2;
    xmax = cx + span / 2;
    ymin = cy - span / 2;
    ymax = cy + span / 2;
  }
  const double sz = spec.size;
  auto px = [&](double x) { return (x - xmin) / (xmax - xmin) * sz; };
  auto py = [&](double y) { return (ymax - y) / (ymax - ymin) * sz; };
  const double far = 4 * sz;
  auto visible = [&](double x, double y) {
    return std::abs(px(x) - sz / 2) < far && std::abs(py(y) - sz / 2) < far;
  };

  // Adaptive refinement between coarse samples; a branch breaks where the
  // chart coordinate changes sign or the point runs far off the canvas.
  std::string path;
  bool pen_down = false;
  auto emit = [&](const V3& p) {
    double x, y;
    if (!to_plane(p, x, y) || !visible(x, y)) {
      pen_down = false;
      return;
    }
    path += (pen_down ? "L" : "M") + num(px(x)) + " " + num(py(y)) + " ";
    pen_down = true;
  };
  std::function<void(double, const V3&, double, const V3&, int)> refine = [&](double p0, const V3& a, double p1,
                                                                                 const V3& b, int depth) {
    if (a[chart.w] * b[chart.w] <= 0) {
      pen_down = false;
      if (depth < 40) {
        const double mid = (p0 + p1) / 2;
        const V3 m = chart.at(mid);
        refine(p0, a, mid, m, depth + 1);
        emit(m);
        refine(mid, m, p1, b, depth + 1);
      }
      return;
    }
    double xa, ya, xb, yb;
    const bool ok = to_plane(a, xa, ya) && to_plane(b, xb, yb);
    const double gap = ok ? std::hypot(px(xa) - px(xb), py(ya) - py(yb)) : 0;
    if (depth < 14 && ok && gap > 2.0 && (visible(xa, ya) || visible(xb, yb))) {
      const double mid = (p0 + p1) / 2;
      const V3 m = chart.at(mid);
      refine(p0, a, mid, m, depth + 1);
      emit(m);
      refine(mid, m, p1, b, depth + 1);
    }
  };
  emit(coarse[0]);
  for (int k = 0; k < n; ++k) {
    refine(pi * k / n, coarse[static_cast<size_t>(k)], pi * (k + 1) / n, coarse[static_cast<size_t>(k) + 1], 0);
    if (coarse[static_cast<size_t>(k)][chart.w] * coarse[static_cast<size_t>(k) + 1][chart.w] <= 0) pen_down = false;
    emit(coarse[static_cast<size_t>(k) + 1]);
  }

  const std::string s = num(sz);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + s + "\" height=\"" + s +
                    "\" viewBox=\"0 0 " + s + " " + s + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <path class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(spec.stroke) +
         "\" stroke-linejoin=\"round\" d=\"" + path + "\"/>\n";
  for (const auto& d : dots)
    out += "  <circle class=\"solitary\" cx=\"" + num(px(d[0])) + "\" cy=\"" + num(py(d[1])) + "\" r=\"" +
           num(spec.dot) + "\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace nodal4
