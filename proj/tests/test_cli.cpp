#include "doctest.h"
#include "nodal4/cli.hpp"
#include "nodal4/io.hpp"
#include "nodal4/plot.hpp"
#include "test_util.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace nodal4;
using namespace nodal4::testing;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const ClassId& id) {
  std::string name = to_string(id);
  std::replace(name.begin(), name.end(), '|', '_');
  return std::string(NODAL4_TEST_DATA) + "/golden/" + name + ".json";
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "nodal4_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

size_t count(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("JSON round trips") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const NodeSeed s = random_seed(rng, trial % 4);
    CHECK(seed_from_json(Json::parse(to_json(s).dump())).pairs == s.pairs);
    const Curve c = realize_from_seed(s);
    const Json j = to_json(c);
    CHECK(curve_from_json(Json::parse(j.dump())) == c);
    for (const auto& form : {"p0", "p1", "p2"})
      for (const auto& v : j[form]) CHECK(v.is_string());
  }
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(to_json(Rational(2)) == "2/1");
  CHECK(gaussian_from_json(Json::parse(R"(["1/2", "-3"])")) == Gaussian(Rational(1, 2), Rational(-3)));
  CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"degree": 3, "p0": [], "p1": [], "p2": []})")), Error);
  CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"degree": 4, "p0": ["1"], "p1": ["1"], "p2": ["1"]})")), Error);
  CHECK_THROWS_AS(rational_from_json(Json::parse("0.5")), Error);
  CHECK_THROWS_AS(point_from_json(Json::parse(R"(["0", "0"])")), Error);
}

TEST_CASE("enumerate") {
  auto count_rows = [](const std::string& text) { return std::count(text.begin(), text.end(), '\n'); };
  Run r = run({"enumerate"});
  CHECK(r.code == kExitOk);
  CHECK(count_rows(r.out) == 9);
  CHECK(count_rows(run({"enumerate", "--chords", "3"}).out) == 5);
  CHECK(count_rows(run({"enumerate", "--chords", "0"}).out) == 1);
  const Json rows = Json::parse(run({"enumerate", "--json"}).out);
  REQUIRE(rows.size() == 9);
  CHECK(rows[0]["class"] == "0-|s3");
  CHECK(run({"enumerate", "--chords", "4"}).code == kExitIo);
  CHECK(run({}).code == kExitIo);
  CHECK(run({"bogus"}).code == kExitIo);
}

TEST_CASE("realize and classify reproduce the golden files") {
  for (const ClassId& id : enumerate_all(3)) {
    const Run realized = run({"realize", "--class", to_string(id)});
    REQUIRE(realized.code == kExitOk);
    CHECK(realized.out == slurp(golden(id)));
    const Run cl = run({"classify", golden(id)});
    REQUIRE(cl.code == kExitOk);
    const Json j = Json::parse(cl.out);
    CHECK(j["class"] == to_string(id));
    CHECK(j["word"] == id.canonical_word);
    CHECK(j["solitary"] == id.solitary_count);
    CHECK(j["nodes"].size() == 3);
    // Byte-identical on a second run.
    CHECK(run({"classify", golden(id)}).out == cl.out);
    const Json nodes = Json::parse(run({"nodes", golden(id)}).out);
    int solitary = 0;
    for (const auto& n : nodes) solitary += n["kind"] == "solitary" ? 1 : 0;
    CHECK(solitary == id.solitary_count);
  }
}

TEST_CASE("realize from a seed file, writing atomically") {
  const fs::path seed = scratch("seed.json");
  std::ofstream(seed) << R"({"pairs": [[["0", "1"], ["2", "1"]], [["1", "1"], ["3", "1"]], [[["0", "1"], "1"], [["0", "-1"], "1"]]]})";
  const fs::path out = scratch("from_seed.json");
  fs::remove(out);
  CHECK(run({"realize", "--seed", seed.string(), "-o", out.string()}).code == kExitOk);
  CHECK_FALSE(fs::exists(out.string() + ".tmp"));
  CHECK(slurp(out) == slurp(golden(parse_class_id("2-1212|s1"))));

  std::ofstream(seed) << R"({"pairs": [[["0", "1"], ["1", "1"]], [["0", "1"], ["2", "1"]], [["3", "1"], ["4", "1"]]]})";
  const Run r = run({"realize", "--seed", seed.string()});
  CHECK(r.code == kExitIo);
  CHECK(r.err.find("DegenerateSeed") != std::string::npos);
  CHECK(run({"realize"}).code == kExitIo);
  CHECK(run({"realize", "--class", "3-1234|s0"}).code == kExitIo);
}

TEST_CASE("classify exit codes") {
  const fs::path bad = scratch("corrupt.json");
  std::ofstream(bad) << R"({"degree": 4, "p0": )";
  CHECK(run({"classify", bad.string()}).code == kExitIo);
  CHECK(run({"classify", scratch("missing.json").string()}).code == kExitIo);

  // q0 = s(s - t), q1 = s(s - 2t) share the root 0.
  const fs::path shared = scratch("shared.json");
  const BinaryForm q0 = BinaryForm::from_rationals({Rational(1), Rational(-1), Rational(0)});
  const BinaryForm q1 = BinaryForm::from_rationals({Rational(1), Rational(-2), Rational(0)});
  const BinaryForm q2 = BinaryForm::from_rationals({Rational(1), Rational(-7), Rational(12)});
  std::ofstream(shared) << to_json(Curve{{q1 * q2, q0 * q2, q0 * q1}}).dump();
  CHECK(run({"classify", shared.string()}).code == kExitNotGeneric);

  // A real curve with a conjugate pair of imaginary nodes.
  const BinaryForm z0 = BinaryForm::linear_vanishing_at(ipt(Rational(0), Rational(1))) *
                        BinaryForm::linear_vanishing_at(ipt(Rational(0), Rational(2)));
  const BinaryForm z1 = z0.conj(), z2 = BinaryForm::from_rationals({Rational(1), Rational(-1), Rational(0)});
  Curve imag{{z1 * z2 + z0 * z2, (z0 * z2 - z1 * z2).scaled(Gaussian::i()), z0 * z1}};
  for (auto& f : imag.p) f = BinaryForm::from_rationals(f.real_coeffs());
  const fs::path im = scratch("imaginary.json");
  std::ofstream(im) << to_json(imag).dump();
  CHECK(run({"classify", im.string()}).code == kExitImaginaryNode);
  CHECK(run({"nodes", im.string()}).code == kExitImaginaryNode);
}

TEST_CASE("path writes frames and a manifest") {
  const fs::path seed = scratch("far_seed.json");
  std::ofstream(seed) << R"({"pairs": [[["0", "1"], ["2", "1"]], [["1", "1"], ["3", "1"]], [[["0", "5"], "1"], [["0", "-5"], "1"]]]})";
  const fs::path b = scratch("far.json");
  REQUIRE(run({"realize", "--seed", seed.string(), "-o", b.string()}).code == kExitOk);
  const fs::path dir = scratch("path");
  fs::remove_all(dir);
  const std::string a = golden(parse_class_id("2-1212|s1"));
  REQUIRE(run({"path", a, b.string(), "--steps", "6", "-o", dir.string()}).code == kExitOk);
  const Json manifest = read_json_file((dir / "manifest.json").string());
  CHECK(manifest["class"] == "2-1212|s1");
  CHECK(manifest["steps"] == 6);
  CHECK(manifest["certificates"].size() == 6);
  CHECK(slurp(dir / "step_0000.json") == slurp(a));
  CHECK(slurp(dir / "step_0005.json") == slurp(b));
  for (int k = 0; k < 6; ++k) {
    CHECK(run({"classify", (dir / ("step_000" + std::to_string(k) + ".json")).string()}).code == kExitOk);
  }

  const fs::path frames = scratch("frames");
  fs::remove_all(frames);
  REQUIRE(run({"plot", "--frames", dir.string(), "-o", frames.string()}).code == kExitOk);
  size_t svgs = 0;
  for (const auto& e : fs::directory_iterator(frames)) svgs += e.path().extension() == ".svg" ? 1 : 0;
  CHECK(svgs == 6);

  CHECK(run({"path", a, golden(parse_class_id("3-123123|s0")), "-o", scratch("nopath").string()}).code ==
        kExitDifferentClass);
}

TEST_CASE("plot draws one dot per solitary node in every chart") {
  for (const ClassId& id : enumerate_all(3)) {
    for (const char* chart : {"x0", "x1", "x2"}) {
      const Run r = run({"plot", golden(id), "--chart", chart});
      REQUIRE(r.code == kExitOk);
      CHECK(count(r.out, "<circle class=\"solitary\"") == static_cast<size_t>(id.solitary_count));
      CHECK(count(r.out, "<path class=\"curve\"") == 1);
      CHECK(r.out.rfind("<svg", 0) == 0);
    }
  }
  const std::string rep = golden(parse_class_id("2-1212|s1"));
  const Run windowed = run({"plot", rep, "--window", "-2,2,-3/2,5/2", "--samples", "200"});
  CHECK(windowed.code == kExitOk);
  CHECK(windowed.out == run({"plot", rep, "--window", "-2,2,-3/2,5/2", "--samples", "200"}).out);
  CHECK(run({"plot", rep, "--samples", "99"}).code == kExitIo);
  CHECK(run({"plot", rep, "--window", "1,1,0,1"}).code == kExitIo);
  CHECK(run({"plot", rep, "--chart", "x3"}).code == kExitIo);
  // Raw coordinates put the representative's solitary node at infinity of x0.
  CHECK(count(run({"plot", rep, "--chart", "x0", "--raw"}).out, "class=\"solitary\"") == 0);
}

TEST_CASE("verify passes on the representatives and fails a wrong expectation") {
  for (const char* name : {"2-1212|s1", "1-11|s2", "0-|s3", "3-123123|s0"}) {
    const Run r = run({"verify", golden(parse_class_id(name))});
    CHECK(r.code == kExitOk);
    const Json rep = Json::parse(r.out);
    CHECK(rep["pass"] == true);
    CHECK(rep["lines"].size() == 3);
    if (std::string(name) == "3-123123|s0") CHECK(rep["placement"].is_null());
  }
  const std::string rep = golden(parse_class_id("2-1212|s1"));
  const Run good = run({"verify", rep});
  const Json report = Json::parse(good.out);
  CHECK(report["placement"]["nested"] == true);
  CHECK(report["perturbation"]["l"] == 2);
  CHECK(report["perturbation"]["injective_pairs"] == 1);
  CHECK(report["perturbation"]["rokhlin_unique"] == Json::array({0, 1}));

  const Run wrong = run({"verify", rep, "--expect", std::string(NODAL4_TEST_DATA) + "/wrong_region.json"});
  CHECK(wrong.code == kExitVerification);
  CHECK(Json::parse(wrong.out)["pass"] == false);
}

TEST_CASE("perturb reports ovals and writes a raster") {
  const std::string rep = golden(parse_class_id("2-1212|s1"));
  const fs::path pgm = scratch("smooth.pgm");
  fs::remove(pgm);
  const Run r = run({"perturb", rep, "--pgm", pgm.string()});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j["l"] == 2);
  CHECK(j["injective_pairs"] == 1);
  CHECK(j["epsilon"].is_string());
  CHECK(fs::exists(pgm));
  CHECK(slurp(pgm).rfind("P5", 0) == 0);

  // Too coarse to see anything stable, or singular: both are verification failures.
  CHECK(run({"perturb", rep, "--epsilon", "0"}).code == kExitVerification);
}

TEST_CASE("resolution comes from the environment unless overridden") {
  ::setenv("NODAL4_RESOLUTION", "256", 1);
  CHECK(default_resolution() == 256);
  const std::string rep = golden(parse_class_id("2-1212|s1"));
  CHECK(Json::parse(run({"perturb", rep, "--epsilon", "-1/1024"}).out)["resolution"] == 256);
  CHECK(Json::parse(run({"--resolution", "512", "perturb", rep, "--epsilon", "-1/1024"}).out)["resolution"] == 512);
  ::setenv("NODAL4_RESOLUTION", "nonsense", 1);
  CHECK(default_resolution() == 512);
  ::unsetenv("NODAL4_RESOLUTION");
  CHECK(default_resolution() == 512);
}
