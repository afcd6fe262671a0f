#include "nodal4/cli.hpp"

#include "nodal4/error.hpp"
#include "nodal4/io.hpp"
#include "nodal4/plot.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace fs = std::filesystem;

namespace nodal4 {

namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotGeneric:
    case ErrorKind::NotSquarefree:
    case ErrorKind::DegenerateNodes:
      return kExitNotGeneric;
    case ErrorKind::ImaginaryNodePresent: return kExitImaginaryNode;
    case ErrorKind::DifferentClass: return kExitDifferentClass;
    case ErrorKind::UnstableResolution:
    case ErrorKind::StillSingular:
    case ErrorKind::ImplicitizationFailure:
    case ErrorKind::PathObstruction:
      return kExitVerification;
    default: return kExitIo;
  }
}

// Writes to `path` atomically, or to `out` when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file_atomic(path, text);
}

Curve load_curve(const std::string& path) { return curve_from_json(read_json_file(path)); }

std::string step_name(size_t k) {
  std::ostringstream os;
  os << "step_" << std::setw(4) << std::setfill('0') << k << ".json";
  return os.str();
}

std::array<Rational, 3> cross(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Json verify_report(const Curve& c, int resolution, const Json* expect) {
  const Classification cl = classify(c);
  const std::string cls = to_string(cl.class_id);
  bool pass = true;
  Json report{{"class", cls}};

  Json lines = Json::array();
  for (size_t a = 0; a < 3; ++a)
    for (size_t b = a + 1; b < 3; ++b) {
      Json entry{{"nodes", Json::array({a, b})}};
      const auto pa = cl.nodes[a].rational_position(), pb = cl.nodes[b].rational_position();
      if (!pa || !pb) {
        entry["skipped"] = "irrational node position";
        lines.push_back(entry);
        continue;
      }
      const auto mult = line_multiplicities(c, cross(*pa, *pb));
      const bool ok = mult == std::vector<int>{1, 1, 1, 1};
      entry["multiplicities"] = mult;
      entry["ok"] = ok;
      pass = pass && ok;
      lines.push_back(entry);
    }
  report["lines"] = lines;

  std::optional<PlacementReport> placement;
  if (cl.class_id.solitary_count > 0) {
    placement = solitary_placement_check(c, resolution);
    const bool ok = placement->stable && placement->shared && placement->all_non_disk &&
                    placement->nested.value_or(true);
    report["placement"] = to_json(*placement);
    report["placement"]["ok"] = ok;
    pass = pass && ok;
  } else {
    report["placement"] = nullptr;
  }

  if (cls == "2-1212|s1") {
    const OvalReport ov = perturb_search(c, resolution);
    Json p = to_json(ov);
    int consistent = 0, plus = -1;
    for (int k = 0; k <= ov.injective_pairs; ++k)
      if (rokhlin_check(ov.l, k, ov.injective_pairs - k, 4)) {
        ++consistent;
        plus = k;
      }
    const bool ok = ov.l == 2 && ov.injective_pairs == 1 && consistent == 1 && plus == 0;
    p["rokhlin_unique"] = consistent == 1 ? Json(Json::array({plus, ov.injective_pairs - plus})) : Json(nullptr);
    p["ok"] = ok;
    report["perturbation"] = p;
    pass = pass && ok;
  } else {
    report["perturbation"] = nullptr;
  }

  if (expect) {
    Json checks = Json::array();
    auto check = [&](const char* key, const Json& actual) {
      if (!expect->contains(key)) return;
      const bool ok = expect->at(key) == actual;
      checks.push_back(Json{{"key", key}, {"expected", expect->at(key)}, {"actual", actual}, {"ok", ok}});
      pass = pass && ok;
    };
    check("class", cls);
    check("solitary_shared", placement ? Json(placement->shared) : Json(nullptr));
    check("solitary_non_disk", placement ? Json(placement->all_non_disk) : Json(nullptr));
    check("component_count", placement ? Json(placement->component_count) : Json(nullptr));
    check("disk_count", placement ? Json(placement->disk_count) : Json(nullptr));
    check("nested", placement && placement->nested ? Json(*placement->nested) : Json(nullptr));
    report["expectations"] = checks;
  }
  report["pass"] = pass;
  return report;
}

PlotSpec plot_spec(const std::string& chart, const std::string& window, int samples, double stroke, double dot,
                   int size, bool raw) {
  PlotSpec spec;
  if (chart == "x0")
    spec.chart = 0;
  else if (chart == "x1")
    spec.chart = 1;
  else if (chart == "x2")
    spec.chart = 2;
  else
    throw Error(ErrorKind::Parse, "chart must be x0, x1 or x2");
  if (!window.empty()) {
    std::array<Rational, 4> w;
    std::stringstream ss(window);
    std::string part;
    size_t k = 0;
    while (std::getline(ss, part, ',')) {
      if (k == 4) throw Error(ErrorKind::Parse, "window takes four values xmin,xmax,ymin,ymax");
      w[k++] = parse_rational(part);
    }
    if (k != 4) throw Error(ErrorKind::Parse, "window takes four values xmin,xmax,ymin,ymax");
    spec.window = w;
  }
  spec.samples = samples;
  spec.stroke = stroke;
  spec.dot = dot;
  spec.size = size;
  spec.generic_view = !raw;
  spec.validate();
  return spec;
}

}  // namespace

int default_resolution() {
  if (const char* env = std::getenv("NODAL4_RESOLUTION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1 << 16) return static_cast<int>(v);
  }
  return 512;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nodal rational quartics: realize, classify, deform and verify."};
  app.require_subcommand(1);
  int resolution = default_resolution();
  app.add_option("--resolution", resolution, "Raster resolution per cube face edge (NODAL4_RESOLUTION)")
      ->check(CLI::Range(8, 1 << 16));

  int chords = -1;
  bool as_json = false;
  auto* enumerate = app.add_subcommand("enumerate", "List the rigid isotopy classes");
  enumerate->add_option("--chords", chords, "Only classes with this many crossing chords")->check(CLI::Range(0, 3));
  enumerate->add_flag("--json", as_json, "JSON output");

  std::string class_name, seed_file, out_file;
  auto* realize = app.add_subcommand("realize", "Write a curve realizing a class or seed");
  auto* class_opt = realize->add_option("--class", class_name, "Class id such as 3-123123|s0");
  auto* seed_opt = realize->add_option("--seed", seed_file, "Seed JSON file");
  class_opt->excludes(seed_opt);
  realize->add_option("-o,--out", out_file, "Output file (stdout when omitted)");

  std::string curve_file;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a curve");
  classify_cmd->add_option("curve", curve_file)->required();
  classify_cmd->add_option("-o,--out", out_file);

  auto* nodes_cmd = app.add_subcommand("nodes", "Report the three nodes of a curve");
  nodes_cmd->add_option("curve", curve_file)->required();
  nodes_cmd->add_option("-o,--out", out_file);

  std::string from_file, to_file, out_dir;
  int steps = 32;
  auto* path_cmd = app.add_subcommand("path", "Certified rigid isotopy between two curves");
  path_cmd->add_option("a", from_file)->required();
  path_cmd->add_option("b", to_file)->required();
  path_cmd->add_option("--steps", steps)->check(CLI::Range(2, 100000));
  path_cmd->add_option("-o,--out", out_dir)->required();

  std::string expect_file;
  auto* verify_cmd = app.add_subcommand("verify", "Bezout, solitary placement and nesting checks");
  verify_cmd->add_option("curve", curve_file)->required();
  verify_cmd->add_option("--expect", expect_file, "JSON file of expected results");
  verify_cmd->add_option("-o,--out", out_file);

  std::string chart = "x2", window, frames_dir;
  int samples = 400, size = 480;
  double stroke = 1.5, dot = 4.0;
  bool raw = false;
  auto* plot_cmd = app.add_subcommand("plot", "Draw a curve (or every frame of a path) as SVG");
  auto* plot_curve = plot_cmd->add_option("curve", curve_file);
  auto* plot_frames = plot_cmd->add_option("--frames", frames_dir, "Path directory; one SVG per frame");
  plot_curve->excludes(plot_frames);
  plot_cmd->add_option("-o,--out", out_file, "SVG file, or directory with --frames");
  plot_cmd->add_option("--chart", chart, "x0, x1 or x2");
  plot_cmd->add_option("--window", window, "xmin,xmax,ymin,ymax as rationals");
  plot_cmd->add_option("--samples", samples);
  plot_cmd->add_option("--stroke", stroke);
  plot_cmd->add_option("--dot", dot);
  plot_cmd->add_option("--size", size);
  plot_cmd->add_flag("--raw", raw, "Plot the coordinates as given, without moving nodes off infinity");

  std::string epsilon, pgm_file;
  auto* perturb_cmd = app.add_subcommand("perturb", "Smooth the curve and count ovals");
  perturb_cmd->add_option("curve", curve_file)->required();
  perturb_cmd->add_option("--epsilon", epsilon, "Fixed rational epsilon (searched when omitted)");
  perturb_cmd->add_option("--pgm", pgm_file, "Write the smoothed curve's raster as PGM");
  perturb_cmd->add_option("-o,--out", out_file);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitIo;
  }

  try {
    if (*enumerate) {
      Json rows = Json::array();
      std::ostringstream text;
      for (const ClassId& id : enumerate_all(3)) {
        if (chords >= 0 && id.chord_count != chords) continue;
        const int crossings = crossing_count(diagram_of(id));
        rows.push_back(Json{{"class", to_string(id)},
                            {"word", id.canonical_word},
                            {"chords", id.chord_count},
                            {"crossings", crossings},
                            {"solitary", id.solitary_count}});
        text << std::left << std::setw(14) << to_string(id) << " chords=" << id.chord_count
             << " crossings=" << crossings << " solitary=" << id.solitary_count << "\n";
      }
      out << (as_json ? dump(rows) : text.str());
      return kExitOk;
    }
    if (*realize) {
      if (class_name.empty() && seed_file.empty()) throw Error(ErrorKind::Parse, "realize needs --class or --seed");
      const Curve c = class_name.empty() ? realize_from_seed(seed_from_json(read_json_file(seed_file)))
                                         : realize_class(parse_class_id(class_name));
      verify_generic(c);
      emit(out_file, dump(to_json(c)), out);
      return kExitOk;
    }
    if (*classify_cmd) {
      emit(out_file, dump(to_json(classify(load_curve(curve_file)))), out);
      return kExitOk;
    }
    if (*nodes_cmd) {
      Json nodes = Json::array();
      for (const auto& n : find_nodes(load_curve(curve_file))) nodes.push_back(to_json(n));
      emit(out_file, dump(nodes), out);
      return kExitOk;
    }
    if (*path_cmd) {
      const Curve a = load_curve(from_file), b = load_curve(to_file);
      const IsotopyPath p = build_path(a, b, steps);
      fs::create_directories(out_dir);
      Json certs = Json::array();
      for (size_t k = 0; k < p.steps.size(); ++k) {
        write_file_atomic((fs::path(out_dir) / step_name(k)).string(), dump(to_json(p.steps[k].curve)));
        Json cert = to_json(p.steps[k].certificate);
        cert["t"] = to_json(p.steps[k].t);
        cert["phase"] = p.steps[k].phase;
        certs.push_back(cert);
      }
      Json manifest{{"class", to_string(p.class_id)},
                    {"steps", p.steps.size()},
                    {"phases", p.phases},
                    {"reflected", p.reflected},
                    {"via_representative", p.via_representative},
                    {"certificates", certs}};
      write_file_atomic((fs::path(out_dir) / "manifest.json").string(), dump(manifest));
      out << "wrote " << p.steps.size() << " frames of " << to_string(p.class_id) << " to " << out_dir << "\n";
      return kExitOk;
    }
    if (*verify_cmd) {
      std::optional<Json> expect;
      if (!expect_file.empty()) expect = read_json_file(expect_file);
      const Json report = verify_report(load_curve(curve_file), resolution, expect ? &*expect : nullptr);
      emit(out_file, dump(report), out);
      return report["pass"].get<bool>() ? kExitOk : kExitVerification;
    }
    if (*plot_cmd) {
      const PlotSpec spec = plot_spec(chart, window, samples, stroke, dot, size, raw);
      if (!frames_dir.empty()) {
        if (out_file.empty()) throw Error(ErrorKind::Parse, "plot --frames needs --out DIR");
        std::vector<fs::path> frames;
        for (const auto& e : fs::directory_iterator(frames_dir)) {
          const std::string name = e.path().filename().string();
          if (name.rfind("step_", 0) == 0 && e.path().extension() == ".json") frames.push_back(e.path());
        }
        std::sort(frames.begin(), frames.end());
        fs::create_directories(out_file);
        for (const auto& f : frames) {
          const Curve c = load_curve(f.string());
          write_file_atomic((fs::path(out_file) / f.stem()).string() + ".svg", plot_svg(c, spec));
        }
        out << "wrote " << frames.size() << " frames to " << out_file << "\n";
        return kExitOk;
      }
      if (curve_file.empty()) throw Error(ErrorKind::Parse, "plot needs a curve file or --frames");
      emit(out_file, plot_svg(load_curve(curve_file), spec), out);
      return kExitOk;
    }
    if (*perturb_cmd) {
      const Curve c = load_curve(curve_file);
      const OvalReport rep = epsilon.empty() ? perturb_search(c, resolution)
                                             : perturb_and_count(c, parse_rational(epsilon), resolution);
      if (!pgm_file.empty()) {
        const TernaryForm f = implicitize(c) + perturbation_term(c).scaled(rep.epsilon);
        write_pgm(raster_at(f, rep.resolution), pgm_file);
      }
      emit(out_file, dump(to_json(rep)), out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}

}  // namespace nodal4
