#include "nodal4/io.hpp"

#include "nodal4/error.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace nodal4 {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

Json point3(const std::array<AlgebraicReal, 3>& p) {
  Json out = Json::array();
  for (const auto& v : p) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const Gaussian& g) {
  if (g.is_real()) return to_json(g.re);
  return Json::array({to_json(g.re), to_json(g.im)});
}

Json to_json(const BinaryForm& f) {
  Json out = Json::array();
  for (const auto& c : f.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const ProjPoint1& p) { return Json::array({to_json(p.a), to_json(p.b)}); }

Json to_json(const AlgebraicReal& a) {
  if (a.is_infinity()) return "inf";
  if (a.is_rational()) return to_json(a.value());
  Json poly = Json::array();
  for (const auto& c : a.defining_poly().coeffs()) poly.push_back(to_json(c));
  const Interval iv = a.enclosure();
  return Json{{"poly", poly}, {"interval", Json::array({to_json(iv.lo), to_json(iv.hi)})}};
}

Json to_json(const Curve& c) {
  return Json{{"degree", 4}, {"p0", to_json(c.p[0])}, {"p1", to_json(c.p[1])}, {"p2", to_json(c.p[2])}};
}

Json to_json(const NodeSeed& s) {
  Json pairs = Json::array();
  for (const auto& [a, b] : s.pairs) pairs.push_back(Json::array({to_json(a), to_json(b)}));
  return Json{{"pairs", pairs}};
}

Json to_json(const Node& n) {
  Json pre = Json::array();
  if (n.kind == NodeKind::Crossing) {
    // Chart values, "inf" for [1:0].
    for (const auto& x : n.real_preimages) pre.push_back(to_json(x));
  } else if (n.gaussian_preimages) {
    pre.push_back(to_json(n.gaussian_preimages->first));
    pre.push_back(to_json(n.gaussian_preimages->second));
  } else {
    pre.push_back(Json{{"quadratic", point3(n.quadratic)}});
  }
  return Json{{"position", point3(n.position)},
              {"preimages", pre},
              {"kind", n.kind == NodeKind::Crossing ? "crossing" : "solitary"}};
}

Json to_json(const Classification& c) {
  Json nodes = Json::array();
  for (const auto& n : c.nodes) nodes.push_back(to_json(n));
  return Json{{"class", to_string(c.class_id)},
              {"word", c.class_id.canonical_word},
              {"solitary", c.class_id.solitary_count},
              {"nodes", nodes}};
}

Json to_json(const GenericityCertificate& c) {
  return Json{{"class", to_string(c.class_id)},
              {"witness_lambda", std::to_string(c.witness_lambda)},
              {"common_root_witness", to_json(c.common_root_witness)},
              {"preimage_form", to_json(c.preimage_form)},
              {"preimage_discriminant", to_json(c.preimage_discriminant)},
              {"crossing_nodes", c.crossing_nodes},
              {"solitary_nodes", c.solitary_nodes}};
}

Json to_json(const OvalReport& r) {
  Json out{{"l", r.l}, {"injective_pairs", r.injective_pairs}};
  out["pi_plus"] = r.pi_plus ? Json(*r.pi_plus) : Json(nullptr);
  out["pi_minus"] = r.pi_minus ? Json(*r.pi_minus) : Json(nullptr);
  out["epsilon"] = to_json(r.epsilon);
  out["resolution"] = r.resolution;
  out["depths"] = r.depths;
  return out;
}

Json to_json(const PlacementReport& r) {
  Json disk = Json::array();
  for (bool d : r.disk) disk.push_back(d);
  Json out{{"components", r.components}, {"disk", disk},
           {"shared", r.shared},         {"all_non_disk", r.all_non_disk},
           {"component_count", r.component_count}, {"disk_count", r.disk_count},
           {"stable", r.stable},         {"resolution", r.resolution}};
  out["nested"] = r.nested ? Json(*r.nested) : Json(nullptr);
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("expected a rational string, got " + j.dump());
}

Gaussian gaussian_from_json(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("a Gaussian value is [re, im]");
    return {rational_from_json(j[0]), rational_from_json(j[1])};
  }
  return Gaussian(rational_from_json(j));
}

BinaryForm form_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("a form is a nonempty coefficient array");
  std::vector<Gaussian> c;
  for (const auto& v : j) c.push_back(gaussian_from_json(v));
  const int degree = static_cast<int>(c.size()) - 1;
  return BinaryForm(degree, std::move(c));
}

ProjPoint1 point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("a projective point is [a, b]");
  const Gaussian a = gaussian_from_json(j[0]), b = gaussian_from_json(j[1]);
  if (a.is_zero() && b.is_zero()) bad("projective point [0, 0]");
  return {a, b};
}

Curve curve_from_json(const Json& j) {
  const Json& deg = field(j, "degree");
  if (!deg.is_number_integer() || deg.get<int>() != 4) bad("only degree 4 curves are supported");
  Curve c;
  const char* names[3] = {"p0", "p1", "p2"};
  for (size_t i = 0; i < 3; ++i) {
    c.p[i] = form_from_json(field(j, names[i]));
    if (c.p[i].degree() != 4) bad(std::string(names[i]) + " must have 5 coefficients");
  }
  return c;
}

NodeSeed seed_from_json(const Json& j) {
  const Json& pairs = field(j, "pairs");
  if (!pairs.is_array() || pairs.size() != 3) bad("a seed has exactly three pairs");
  NodeSeed s;
  for (size_t i = 0; i < 3; ++i) {
    if (!pairs[i].is_array() || pairs[i].size() != 2) bad("each pair holds two points");
    s.pairs[i] = {point_from_json(pairs[i][0]), point_from_json(pairs[i][1])};
  }
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << contents;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace nodal4
