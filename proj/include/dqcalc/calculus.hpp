#pragma once

#include <optional>

#include "dqcalc/algebra.hpp"
#include "dqcalc/valid_function.hpp"

namespace dqcalc {

// Branch selection for log_dq. Defaults pick the principal branch:
// t = atan2(|a1|, a0) in [0, pi] when the real vector part is nonzero, and
// for a scalar real part the winding n = 0 (a0 > 0) or n = 1 (a0 < 0) with
// p = 0 and the k axis as the fallback rotation axis.
struct LogBranch {
  // Polar angle for (a0, |a1|); must satisfy cos t = a0/|A|, sin t = |a1|/|A|.
  std::optional<double> t;
  // Winding for the scalar-real-part case; parity is forced by the sign of a0.
  std::optional<long long> n;
  // Rotation axis used when the dual vector part gives no direction.
  Vector3 axis_fallback{0.0, 0.0, 1.0};
  // Free dual vector, perpendicular to b1; killed by exp when n != 0.
  Vector3 p{};
};

struct LogResult {
  DualQuaternion value;
  double t = 0.0;
  long long n = 0;
  Vector3 axis;
};

// eta = (1 + eps r) * core * (1 - eps r) with core's dual vector part
// parallel to the real vector part.
struct ScrewFactorization {
  Vector3 r;
  DualQuaternion core;
};

// f(a0 + a1) = g(a0 + i|a1|) + h(a0 + i|a1|) a1, or f(a0) for scalar input.
// |f(A)| equals |f(a0 + i|a1|)|. Throws DomainError.
Quaternion apply_quaternion(const ValidFunction& f, const Quaternion& A);

// f(a + eps b) = f(a) + eps f'(a) b, reading f along the real axis.
DualNumber apply_dual_number(const ValidFunction& f, DualNumber d);

// f(A + eps B) = f(A) + eps f_x(A) b0 + eps f_iy(A) b1 for commuting A, B.
// The commutator is checked numerically; throws NonCommuting when it exceeds
// tol::commuting*(1+|A|)(1+|B|).
DualQuaternion apply_commuting(const ValidFunction& f, const DualQuaternion& dq);

// Pure-vector case: f(a + eps b1 + eps b2) = f(a + eps b1) + eps h(a) b2 with
// b1 parallel and b2 perpendicular to a. Throws ShapeMismatch when the
// parallel/perpendicular preconditions fail beyond tolerance.
DualQuaternion apply_anticommute(const ValidFunction& f, const Vector3& a,
                                 const Vector3& b1, const Vector3& b2);

// The general extension,
//
//   f(A + eps B) = f(A) + eps f_x(A) b0 + eps f_iy(A) b1 + eps h(A) b2,
//
// where f(A), f_x(A), f_iy(A) are quaternion-valued through apply_quaternion
// and h(A) is the scalar h(a0 + i|a1|). Agrees with apply_commuting whenever
// b2 = 0 and with direct algebra on polynomials.
DualQuaternion apply(const ValidFunction& f, const DualQuaternion& dq);

// Closed form:
//   e^{a0} ((cos|a1| + sinc|a1| a1)(1 + eps B1) + eps sinc|a1| b2),
// sinc(0) = 1. Entire, no error paths.
DualQuaternion exp_dq(const DualQuaternion& dq);

// Right inverse of exp_dq: exp_dq(log_dq(eta, branch)) = eta for every legal
// branch. Throws SingularInput when the real part vanishes and
// InvalidParameter for inconsistent branch choices.
DualQuaternion log_dq(const DualQuaternion& dq, const LogBranch& branch = {});
LogResult log_dq_detailed(const DualQuaternion& dq, const LogBranch& branch = {});

// Principal-branch power:
//   A^alpha + eps alpha A^(alpha-1) B1 + eps (Im(A^alpha)/Im(A)) b2,
// with the coefficient of b2 replaced by alpha A^(alpha-1) when |a1| is below
// the axis switch. Im(.) is the |a1| coordinate of the complexified value.
// Throws DomainError on the negative real half-line and SingularInput when
// A = 0 with alpha < 1.
DualQuaternion pow_dq(const DualQuaternion& dq, double alpha);

// A^{-1} - eps A^{-1} B A^{-1}; two-sided inverse. Throws SingularInput.
DualQuaternion inv_dq(const DualQuaternion& dq);

// Cayley transform (1 + eta)/(1 - eta). cayley_dq evaluates the split form
// (through the extension formula); cayley_dq_resolvent evaluates
// (1+A)(1-A)^{-1} + 2 eps (1-A)^{-1} B (1-A)^{-1}. The two agree and are
// cross-checked against each other by the verification suite.
// Throw SingularInput when A = 1.
DualQuaternion cayley_dq(const DualQuaternion& dq);
DualQuaternion cayley_dq_resolvent(const DualQuaternion& dq);

// |A + eps B| = |A| + eps Re(A conj(B))/|A|. Throws SingularInput.
DualNumber dq_abs(const DualQuaternion& dq);

// Chasles-style factorization with r = (a1 b - b a1)/(4|a1|^2), b the full
// dual vector part; r = 0 when a1 = 0. The core's dual part commutes with
// the real part.
ScrewFactorization screw_factor(const DualQuaternion& dq);

// Conjugation-equivariant alternative route:
//   (1 + eps r) f(core) (1 - eps r)
// with f(core) through apply_commuting. Equals apply(f, eta).
DualQuaternion apply_via_screw(const ValidFunction& f, const DualQuaternion& dq);

}  // namespace dqcalc
