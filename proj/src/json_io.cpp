#include "dqcalc/json_io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "dqcalc/errors.hpp"

namespace dqcalc {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

double number_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw ParseError(std::string("missing or non-numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

Quaternion quaternion_from(const json& j) {
  if (!j.is_object()) throw ParseError("quaternion must be a JSON object");
  return {number_field(j, "w"), number_field(j, "x"), number_field(j, "y"),
          number_field(j, "z")};
}

}  // namespace

std::string format_double(double v) {
  if (v == 0.0 && std::signbit(v)) return "-0.0";  // keep the sign bit through integer-token parsing
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const Quaternion& q) {
  std::string out = "{\"w\":";
  out += format_double(q.w);
  out += ",\"x\":";
  out += format_double(q.x);
  out += ",\"y\":";
  out += format_double(q.y);
  out += ",\"z\":";
  out += format_double(q.z);
  out += "}";
  return out;
}

std::string to_json(const DualQuaternion& dq) {
  return "{\"real\":" + to_json(dq.real) + ",\"dual\":" + to_json(dq.dual) + "}";
}

std::string to_json(DualNumber d) {
  return "{\"a\":" + format_double(d.a) + ",\"b\":" + format_double(d.b) + "}";
}

std::string to_json(const ValidPolynomial& p) {
  std::string out = "{\"terms\":[";
  bool first = true;
  for (const ValidPolynomial::Term& t : p.terms()) {
    if (!first) out += ",";
    first = false;
    out += "{\"m\":" + std::to_string(t.m) + ",\"n\":" + std::to_string(t.n) +
           ",\"r\":" + format_double(t.r) + "}";
  }
  out += "]}";
  return out;
}

Quaternion quaternion_from_json(const std::string& text) {
  return quaternion_from(parse_text(text));
}

DualQuaternion dual_quaternion_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("real") || !j.contains("dual"))
    throw ParseError("dual quaternion needs \"real\" and \"dual\" fields");
  return {quaternion_from(j.at("real")), quaternion_from(j.at("dual"))};
}

ValidPolynomial polynomial_from_json(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw ParseError("polynomial needs a \"terms\" array");
  std::vector<ValidPolynomial::Term> terms;
  for (const json& t : j.at("terms")) {
    if (!t.is_object()) throw ParseError("polynomial term must be an object");
    if (!t.contains("m") || !t.contains("n") || !t.contains("r"))
      throw ParseError("polynomial term needs \"m\", \"n\" and \"r\"");
    if (!t.at("m").is_number_integer() || !t.at("n").is_number_integer())
      throw ParseError("polynomial exponents must be integers");
    const long long m = t.at("m").get<long long>();
    const long long n = t.at("n").get<long long>();
    if (m < 0 || n < 0 || m > 64 || n > 64)
      throw ParseError("polynomial exponents must lie in [0, 64]");
    const double r = number_field(t, "r");
    if (!std::isfinite(r)) throw ParseError("polynomial coefficient must be finite");
    terms.push_back({static_cast<int>(m), static_cast<int>(n), r});
  }
  return ValidPolynomial(terms);
}

}  // namespace dqcalc
