#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "dqcalc/algebra.hpp"
#include "dqcalc/polynomial.hpp"

// Deterministic, platform-independent random inputs for the verification
// suites and tests. Every trial owns its own Stream, seeded from
// (root seed, check tag, trial index), so trials can run in any order or in
// parallel and still reproduce bit-identically.
namespace dqcalc::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }
  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double symmetric(double s) { return uniform(-s, s); }
  bool coin() { return (next_u64() & 1ULL) != 0; }
  int index(int count) { return static_cast<int>(next_u64() % static_cast<std::uint64_t>(count)); }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t root, std::string_view tag,
                                 std::uint64_t index) {
  std::uint64_t h = 1469598103934665603ULL ^ root;
  for (const char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  std::uint64_t s = h ^ (0x9E3779B97F4A7C15ULL * (index + 1));
  return splitmix64(s);
}

inline Vector3 vector_in_ball(Stream& s, double radius) {
  for (;;) {
    const Vector3 v{s.symmetric(1.0), s.symmetric(1.0), s.symmetric(1.0)};
    if (norm_sq(v) <= 1.0) return radius * v;
  }
}

inline Vector3 unit_vector(Stream& s) {
  for (;;) {
    const Vector3 v = vector_in_ball(s, 1.0);
    const double n = norm(v);
    if (n >= 0.1) return (1.0 / n) * v;
  }
}

inline Vector3 unit_perpendicular(Stream& s, const Vector3& axis) {
  const Vector3 u = (1.0 / norm(axis)) * axis;
  for (;;) {
    const Vector3 w = unit_vector(s);
    const Vector3 p = w - dot(w, u) * u;
    const double n = norm(p);
    if (n >= 0.1) return (1.0 / n) * p;
  }
}

inline Quaternion quaternion_in_ball(Stream& s, double radius) {
  for (;;) {
    const Quaternion q{s.symmetric(1.0), s.symmetric(1.0), s.symmetric(1.0),
                       s.symmetric(1.0)};
    if (norm_sq(q) <= 1.0) return radius * q;
  }
}

// |result| uniform in [rmin, rmax], direction uniform on the unit 3-sphere.
inline Quaternion quaternion_shell(Stream& s, double rmin, double rmax) {
  for (;;) {
    const Quaternion q = quaternion_in_ball(s, 1.0);
    const double n = norm(q);
    if (n >= 0.1) return (s.uniform(rmin, rmax) / n) * q;
  }
}

inline DualQuaternion dq_in_balls(Stream& s, double real_radius, double dual_radius) {
  return {quaternion_in_ball(s, real_radius), quaternion_in_ball(s, dual_radius)};
}

// Dense polynomial over all (m, n) with m + n <= max_degree, coefficients
// uniform in [-box, box].
inline ValidPolynomial random_polynomial(Stream& s, int max_degree, double box) {
  std::vector<ValidPolynomial::Term> terms;
  for (int n = 0; n <= max_degree; ++n) {
    for (int m = 0; m + n <= max_degree; ++m) {
      terms.push_back({m, n, s.symmetric(box)});
    }
  }
  return ValidPolynomial(terms);
}

inline std::vector<double> random_real_coeffs(Stream& s, int max_degree, double box) {
  std::vector<double> out(max_degree + 1);
  for (double& c : out) c = s.symmetric(box);
  return out;
}

}  // namespace dqcalc::rng
