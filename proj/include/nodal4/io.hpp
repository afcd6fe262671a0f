#pragma once

#include "nodal4/isotopy.hpp"
#include "nodal4/topology.hpp"

#include <json.hpp>

#include <string>

namespace nodal4 {

using Json = nlohmann::ordered_json;

// Every number is an exact rational string "num/den". Gaussian values are a
// string when real and [re, im] otherwise.

Json to_json(const Rational& r);
Json to_json(const Gaussian& g);
Json to_json(const BinaryForm& f);
Json to_json(const ProjPoint1& p);
/// Rational values as strings; irrational ones as {"poly", "interval"}.
Json to_json(const AlgebraicReal& a);
Json to_json(const Curve& c);
Json to_json(const NodeSeed& s);
Json to_json(const Node& n);
Json to_json(const Classification& c);
Json to_json(const GenericityCertificate& c);
Json to_json(const OvalReport& r);
Json to_json(const PlacementReport& r);

/// Parsers throw Error(Parse) on anything malformed.
Rational rational_from_json(const Json& j);
Gaussian gaussian_from_json(const Json& j);
BinaryForm form_from_json(const Json& j);
ProjPoint1 point_from_json(const Json& j);
Curve curve_from_json(const Json& j);
NodeSeed seed_from_json(const Json& j);

Json read_json_file(const std::string& path);
/// Writes to path.tmp and renames over path.
void write_file_atomic(const std::string& path, const std::string& contents);
/// Two-space indented dump plus a trailing newline.
std::string dump(const Json& j);

}  // namespace nodal4
