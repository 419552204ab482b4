#pragma once

#include <cmath>
#include <ostream>

namespace dqcalc {

// Shared numeric thresholds. Every comparison scales with the operand norms
// so branch selection behaves uniformly across input magnitudes.
namespace tol {
// |a1| <= vector_zero*(1+|A|): the vector part is treated as zero.
inline constexpr double vector_zero = 1e-12;
// |y| <= axis_switch*(1+|x|): h falls back to its on-axis value.
inline constexpr double axis_switch = 1e-8;
// Commutator bound accepted by apply_commuting.
inline constexpr double commuting = 1e-10;
// |A| <= singular*(1+|B|): the real part is not invertible.
inline constexpr double singular = 1e-12;
// Frobenius-scale anticommutation bound for matrix pairs.
inline constexpr double anticommuting = 1e-12;
// Parallel/perpendicular shape checks.
inline constexpr double shape = 1e-12;
}  // namespace tol

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Vector3 operator+(const Vector3& a, const Vector3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Vector3 operator-(const Vector3& a, const Vector3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Vector3 operator-(const Vector3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vector3 operator*(double s, const Vector3& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
  friend constexpr Vector3 operator*(const Vector3& a, double s) { return s * a; }
  friend constexpr bool operator==(const Vector3&, const Vector3&) = default;
};

constexpr double dot(const Vector3& a, const Vector3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
constexpr Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double norm_sq(const Vector3& a) { return dot(a, a); }
inline double norm(const Vector3& a) { return std::sqrt(norm_sq(a)); }

// w + x i + y j + z k with i^2 = j^2 = k^2 = ijk = -1. A 3-vector is
// identified with the pure quaternion (w = 0).
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a) {
    return {-a.w, -a.x, -a.y, -a.z};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
  // Hamilton product.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

constexpr Quaternion pure(const Vector3& v) { return {0.0, v.x, v.y, v.z}; }
constexpr Quaternion from_parts(double scalar, const Vector3& v) {
  return {scalar, v.x, v.y, v.z};
}
constexpr Vector3 vec(const Quaternion& q) { return {q.x, q.y, q.z}; }
constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr double norm_sq(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}
inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }
// q^{-1} = conj(q)/|q|^2. The caller guards against |q| = 0.
constexpr Quaternion inverse(const Quaternion& q) {
  return (1.0 / norm_sq(q)) * conj(q);
}

// a + eps b over the reals, eps^2 = 0.
struct DualNumber {
  double a = 0.0;
  double b = 0.0;

  friend constexpr DualNumber operator+(DualNumber u, DualNumber v) {
    return {u.a + v.a, u.b + v.b};
  }
  friend constexpr DualNumber operator-(DualNumber u, DualNumber v) {
    return {u.a - v.a, u.b - v.b};
  }
  friend constexpr DualNumber operator-(DualNumber u) { return {-u.a, -u.b}; }
  friend constexpr DualNumber operator*(DualNumber u, DualNumber v) {
    return {u.a * v.a, u.a * v.b + u.b * v.a};
  }
  friend constexpr DualNumber operator*(double s, DualNumber u) {
    return {s * u.a, s * u.b};
  }
  friend constexpr DualNumber operator*(DualNumber u, double s) { return s * u; }
  friend constexpr bool operator==(DualNumber, DualNumber) = default;
};

constexpr DualNumber conj(DualNumber d) { return d; }

// A + eps B over the quaternions, eps^2 = 0.
struct DualQuaternion {
  Quaternion real;
  Quaternion dual;

  friend constexpr DualQuaternion operator+(const DualQuaternion& u, const DualQuaternion& v) {
    return {u.real + v.real, u.dual + v.dual};
  }
  friend constexpr DualQuaternion operator-(const DualQuaternion& u, const DualQuaternion& v) {
    return {u.real - v.real, u.dual - v.dual};
  }
  friend constexpr DualQuaternion operator-(const DualQuaternion& u) {
    return {-u.real, -u.dual};
  }
  friend constexpr DualQuaternion operator*(double s, const DualQuaternion& u) {
    return {s * u.real, s * u.dual};
  }
  friend constexpr DualQuaternion operator*(const DualQuaternion& u, double s) { return s * u; }
  // (A + eps B)(C + eps D) = AC + eps(AD + BC); the eps^2 term is dropped.
  friend constexpr DualQuaternion operator*(const DualQuaternion& u, const DualQuaternion& v) {
    return {u.real * v.real, u.real * v.dual + u.dual * v.real};
  }
  friend constexpr bool operator==(const DualQuaternion&, const DualQuaternion&) = default;
};

constexpr DualQuaternion conj(const DualQuaternion& u) {
  return {conj(u.real), conj(u.dual)};
}
inline double norm(const DualQuaternion& u) {
  return std::sqrt(norm_sq(u.real) + norm_sq(u.dual));
}
constexpr DualQuaternion dq_one() { return {{1.0, 0.0, 0.0, 0.0}, {}}; }
constexpr DualQuaternion from_real(const Quaternion& q) { return {q, {}}; }
constexpr DualQuaternion embed(DualNumber d) {
  return {{d.a, 0.0, 0.0, 0.0}, {d.b, 0.0, 0.0, 0.0}};
}

// The geometric split behind the extension formula: A = a0 + a1 and
// B = b0 + b1 + b2 with b1 parallel to a1 and b2 perpendicular to it.
// When a1 vanishes (scalar A commutes with everything) the whole vector
// part of B is classified as b1 and b2 = 0.
struct DecomposedDual {
  double a0 = 0.0;
  Vector3 a1;
  double b0 = 0.0;
  Vector3 b1;
  Vector3 b2;
  Quaternion B1;  // b0 + b1
};

inline DecomposedDual decompose(const DualQuaternion& dq) {
  DecomposedDual d;
  d.a0 = dq.real.w;
  d.a1 = vec(dq.real);
  d.b0 = dq.dual.w;
  const Vector3 bv = vec(dq.dual);
  const double na1 = norm(d.a1);
  if (na1 <= tol::vector_zero * (1.0 + norm(dq.real))) {
    d.b1 = bv;
    d.b2 = {};
  } else {
    d.b1 = (dot(bv, d.a1) / (na1 * na1)) * d.a1;
    d.b2 = bv - d.b1;
  }
  d.B1 = from_parts(d.b0, d.b1);
  return d;
}

inline std::ostream& operator<<(std::ostream& os, const Vector3& v) {
  return os << "(" << v.x << ", " << v.y << ", " << v.z << ")";
}
inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << "(" << q.w << "; " << q.x << ", " << q.y << ", " << q.z << ")";
}
inline std::ostream& operator<<(std::ostream& os, DualNumber d) {
  return os << d.a << " + eps " << d.b;
}
inline std::ostream& operator<<(std::ostream& os, const DualQuaternion& u) {
  return os << u.real << " + eps " << u.dual;
}

}  // namespace dqcalc
