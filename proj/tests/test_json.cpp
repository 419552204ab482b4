#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "dqcalc/errors.hpp"
#include "dqcalc/json_io.hpp"
#include "dqcalc/random_gen.hpp"

using namespace dqcalc;

namespace {

bool bits_equal(double a, double b) {
  return std::memcmp(&a, &b, sizeof(double)) == 0;
}

bool bits_equal(const Quaternion& a, const Quaternion& b) {
  return bits_equal(a.w, b.w) && bits_equal(a.x, b.x) && bits_equal(a.y, b.y) &&
         bits_equal(a.z, b.z);
}

}  // namespace

TEST_CASE("dual quaternion JSON round-trips bit-exactly") {
  const double specials[] = {0.0,
                             -0.0,
                             0.1,
                             1.0 / 3.0,
                             -1e300,
                             1e-308,
                             5e-324,
                             9007199254740994.0,  // 2^53 + 2
                             9.5e18,
                             1e19,
                             std::numeric_limits<double>::max(),
                             std::numeric_limits<double>::min()};
  for (const double v : specials) {
    const DualQuaternion dq{{v, -v, 1.5, 0.0}, {2.0, v, -0.0, v}};
    const DualQuaternion back = dual_quaternion_from_json(to_json(dq));
    CHECK(bits_equal(back.real, dq.real));
    CHECK(bits_equal(back.dual, dq.dual));
  }

  rng::Stream s(rng::derive_seed(23, "json-roundtrip", 0));
  for (int t = 0; t < 500; ++t) {
    // wide dynamic range via random exponent scaling
    const double scale = std::ldexp(1.0, static_cast<int>(s.symmetric(600.0)));
    const DualQuaternion dq{{s.symmetric(scale), s.symmetric(scale), s.symmetric(scale),
                             s.symmetric(scale)},
                            {s.symmetric(scale), s.symmetric(scale), s.symmetric(scale),
                             s.symmetric(scale)}};
    const DualQuaternion back = dual_quaternion_from_json(to_json(dq));
    CHECK(bits_equal(back.real, dq.real));
    CHECK(bits_equal(back.dual, dq.dual));
  }
}

TEST_CASE("encodings look as documented") {
  CHECK(to_json(Quaternion{1.0, 0.0, -0.5, 2.0}) ==
        R"({"w":1,"x":0,"y":-0.5,"z":2})");
  CHECK(to_json(DualNumber{3.0, 4.0}) == R"({"a":3,"b":4})");
  CHECK(to_json(DualQuaternion{}) ==
        R"({"real":{"w":0,"x":0,"y":0,"z":0},"dual":{"w":0,"x":0,"y":0,"z":0}})");
}

TEST_CASE("polynomial JSON") {
  const ValidPolynomial::Term t[] = {{2, 0, 1.0}, {0, 1, -0.25}};
  const ValidPolynomial p{std::span<const ValidPolynomial::Term>(t)};
  const ValidPolynomial back = polynomial_from_json(to_json(p));
  const auto ta = p.terms();
  const auto tb = back.terms();
  REQUIRE(ta.size() == tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) {
    CHECK(ta[i].m == tb[i].m);
    CHECK(ta[i].n == tb[i].n);
    CHECK(ta[i].r == tb[i].r);
  }
}

TEST_CASE("parsers reject malformed input") {
  CHECK_THROWS_AS(quaternion_from_json("not json"), ParseError);
  CHECK_THROWS_AS(quaternion_from_json(R"({"w":1,"x":2,"y":3})"), ParseError);
  CHECK_THROWS_AS(quaternion_from_json(R"({"w":"a","x":0,"y":0,"z":0})"), ParseError);
  CHECK_THROWS_AS(dual_quaternion_from_json(R"({"real":{"w":1,"x":0,"y":0,"z":0}})"),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[{"m":-1,"n":0,"r":1}]})"),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"terms":[{"m":0.5,"n":0,"r":1}]})"),
                  ParseError);
  CHECK_THROWS_AS(polynomial_from_json(R"({"payload":[]})"), ParseError);
}
