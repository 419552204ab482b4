#pragma once

#include <string>

#include "dqcalc/algebra.hpp"
#include "dqcalc/polynomial.hpp"

namespace dqcalc {

// Encodings:
//   quaternion       {"w":..,"x":..,"y":..,"z":..}
//   dual quaternion  {"real":<quaternion>,"dual":<quaternion>}
//   dual number      {"a":..,"b":..}
//   polynomial       {"terms":[{"m":..,"n":..,"r":..},...]}
// Numbers carry full round-trip precision; parse(print(v)) is bit-exact for
// finite doubles.
std::string to_json(const Quaternion& q);
std::string to_json(const DualQuaternion& dq);
std::string to_json(DualNumber d);
std::string to_json(const ValidPolynomial& p);

// Strict parsers; throw ParseError on malformed input.
Quaternion quaternion_from_json(const std::string& text);
DualQuaternion dual_quaternion_from_json(const std::string& text);
ValidPolynomial polynomial_from_json(const std::string& text);

// %.17g with a negative-zero fix-up; shared by every emitter in the project
// so output stays byte-deterministic.
std::string format_double(double v);

}  // namespace dqcalc
