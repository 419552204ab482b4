#include "dqcalc/calculus.hpp"

#include <cmath>
#include <numbers>

#include "dqcalc/builtins.hpp"
#include "dqcalc/errors.hpp"

namespace dqcalc {

namespace {

double sinc(double y) { return y == 0.0 ? 1.0 : std::sin(y) / y; }

Vector3 normalized(const Vector3& v, const char* what) {
  const double n = norm(v);
  if (n == 0.0) throw InvalidParameter(std::string(what) + ": zero vector");
  return (1.0 / n) * v;
}

}  // namespace

Quaternion apply_quaternion(const ValidFunction& f, const Quaternion& A) {
  const Vector3 a1 = vec(A);
  const double na1 = norm(a1);
  if (na1 <= tol::vector_zero * (1.0 + norm(A))) {
    const Complex z(A.w, 0.0);
    require_domain(f, z);
    return {f.eval(z).real(), 0.0, 0.0, 0.0};
  }
  const Complex z(A.w, na1);
  return from_parts(eval_g(f, z), eval_h(f, z) * a1);
}

DualNumber apply_dual_number(const ValidFunction& f, DualNumber d) {
  const Complex z(d.a, 0.0);
  require_domain(f, z);
  if (!f.fx) throw InvalidParameter(f.name + ": no x-derivative available");
  return {f.eval(z).real(), f.fx(z).real() * d.b};
}

DualQuaternion apply_commuting(const ValidFunction& f, const DualQuaternion& dq) {
  const Quaternion& A = dq.real;
  const Quaternion& B = dq.dual;
  const Quaternion comm = A * B - B * A;
  if (norm(comm) > tol::commuting * (1.0 + norm(A)) * (1.0 + norm(B)))
    throw NonCommuting(f.name + ": real and dual parts do not commute");
  const Quaternion fA = apply_quaternion(f, A);
  const Quaternion fxA = apply_quaternion(derivative_x(f), A);
  const Quaternion fiyA = apply_quaternion(derivative_iy(f), A);
  return {fA, B.w * fxA + fiyA * pure(vec(B))};
}

DualQuaternion apply_anticommute(const ValidFunction& f, const Vector3& a,
                                 const Vector3& b1, const Vector3& b2) {
  const double scale1 = (1.0 + norm(a)) * (1.0 + norm(b1));
  const double scale2 = (1.0 + norm(a)) * (1.0 + norm(b2));
  if (norm(cross(b1, a)) > tol::shape * scale1)
    throw ShapeMismatch(f.name + ": b1 is not parallel to a");
  if (std::abs(dot(b2, a)) > tol::shape * scale2)
    throw ShapeMismatch(f.name + ": b2 is not perpendicular to a");
  const DualQuaternion inner = apply_commuting(f, {pure(a), pure(b1)});
  const double h = eval_h(f, Complex(0.0, norm(a)));
  return {inner.real, inner.dual + h * pure(b2)};
}

DualQuaternion apply(const ValidFunction& f, const DualQuaternion& dq) {
  const DecomposedDual d = decompose(dq);
  const Quaternion& A = dq.real;
  const Quaternion fA = apply_quaternion(f, A);
  const Quaternion fxA = apply_quaternion(derivative_x(f), A);
  const Quaternion fiyA = apply_quaternion(derivative_iy(f), A);
  Quaternion dual = d.b0 * fxA + fiyA * pure(d.b1);
  if (norm_sq(d.b2) > 0.0) {
    const double h = eval_h(f, Complex(d.a0, norm(d.a1)));
    dual = dual + h * pure(d.b2);
  }
  return {fA, dual};
}

DualQuaternion exp_dq(const DualQuaternion& dq) {
  const DecomposedDual d = decompose(dq);
  const double na1 = norm(d.a1);
  const double s = sinc(na1);
  const Quaternion rot = from_parts(std::cos(na1), s * d.a1);
  const double ea = std::exp(d.a0);
  return {ea * rot, ea * (rot * d.B1 + s * pure(d.b2))};
}

LogResult log_dq_detailed(const DualQuaternion& dq, const LogBranch& branch) {
  const double nA = norm(dq.real);
  if (nA <= tol::singular * (1.0 + norm(dq.dual)))
    throw SingularInput("log: real part is zero");
  const DecomposedDual d = decompose(dq);
  const double na1 = norm(d.a1);

  if (na1 > tol::vector_zero * (1.0 + nA)) {
    const double t = branch.t ? *branch.t : std::atan2(na1, d.a0);
    if (std::abs(std::cos(t) - d.a0 / nA) > 1e-8 ||
        std::abs(std::sin(t) - na1 / nA) > 1e-8)
      throw InvalidParameter("log: branch angle does not match (a0, |a1|)");
    const double k = t / na1;
    const Quaternion real = from_parts(std::log(nA), k * d.a1);
    const Quaternion tail = (1.0 / (nA * nA)) * (conj(dq.real) * d.B1);
    const Quaternion dual = tail + pure(k * d.b2);
    return {{real, dual}, t, 0, (1.0 / na1) * d.a1};
  }

  // Scalar real part: t = n pi with parity fixed by the sign of a0.
  const long long n = branch.n ? *branch.n : (d.a0 > 0.0 ? 0 : 1);
  if (((n % 2) != 0) != (d.a0 < 0.0))
    throw InvalidParameter("log: winding parity does not match the sign of a0");
  Vector3 axis{};
  if (n != 0) {
    const double nb1 = norm(d.b1);
    axis = nb1 > tol::vector_zero * (1.0 + norm(dq.dual))
               ? (1.0 / nb1) * d.b1
               : normalized(branch.axis_fallback, "log axis fallback");
  }
  if (n == 0) {
    if (norm_sq(branch.p) != 0.0)
      throw InvalidParameter("log: p must be zero when n = 0");
  } else if (std::abs(dot(branch.p, d.b1)) >
             tol::shape * (1.0 + norm(branch.p)) * (1.0 + norm(d.b1))) {
    throw InvalidParameter("log: p must be perpendicular to b1");
  }
  const Quaternion real =
      from_parts(std::log(std::abs(d.a0)), (static_cast<double>(n) * std::numbers::pi) * axis);
  const Quaternion dual = (1.0 / d.a0) * d.B1 + pure(branch.p);
  return {{real, dual}, static_cast<double>(n) * std::numbers::pi, n, axis};
}

DualQuaternion log_dq(const DualQuaternion& dq, const LogBranch& branch) {
  return log_dq_detailed(dq, branch).value;
}

DualQuaternion pow_dq(const DualQuaternion& dq, double alpha) {
  if (!std::isfinite(alpha)) throw InvalidParameter("pow: exponent must be finite");
  const double nA = norm(dq.real);
  if (nA <= tol::singular * (1.0 + norm(dq.dual))) {
    if (alpha < 1.0) throw SingularInput("pow: zero real part with exponent < 1");
    throw DomainError("pow: zero real part lies on the excluded half-line");
  }
  const DecomposedDual d = decompose(dq);
  const double na1 = norm(d.a1);
  if (d.a0 <= 0.0 && na1 <= tol::vector_zero * (1.0 + nA))
    throw DomainError("pow: real part lies on the negative real half-line");
  const ValidFunction pw = make_pow(alpha);
  const ValidFunction pw1 = make_pow(alpha - 1.0);
  const Quaternion Aa = apply_quaternion(pw, dq.real);
  const Quaternion Aa1 = apply_quaternion(pw1, dq.real);
  Quaternion dual = alpha * (Aa1 * d.B1);
  if (norm_sq(d.b2) > 0.0) {
    if (na1 > tol::axis_switch * (1.0 + nA)) {
      const double c = std::pow(Complex(d.a0, na1), alpha).imag() / na1;
      dual = dual + c * pure(d.b2);
    } else {
      dual = dual + alpha * (Aa1 * pure(d.b2));
    }
  }
  return {Aa, dual};
}

DualQuaternion inv_dq(const DualQuaternion& dq) {
  const double nA = norm(dq.real);
  if (nA <= tol::singular * (1.0 + norm(dq.dual)))
    throw SingularInput("inv: real part is zero");
  const Quaternion ai = inverse(dq.real);
  return {ai, -(ai * dq.dual * ai)};
}

namespace {

void require_cayley_regular(const DualQuaternion& dq) {
  const DecomposedDual d = decompose(dq);
  const double dist = std::hypot(1.0 - d.a0, norm(d.a1));
  if (dist <= tol::singular * (1.0 + norm(dq.real)))
    throw SingularInput("cayley: real part equals 1");
}

}  // namespace

DualQuaternion cayley_dq(const DualQuaternion& dq) {
  require_cayley_regular(dq);
  return apply(make_cayley(), dq);
}

DualQuaternion cayley_dq_resolvent(const DualQuaternion& dq) {
  require_cayley_regular(dq);
  const Quaternion one{1.0, 0.0, 0.0, 0.0};
  const Quaternion ri = inverse(one - dq.real);
  return {(one + dq.real) * ri, 2.0 * (ri * dq.dual * ri)};
}

DualNumber dq_abs(const DualQuaternion& dq) {
  const double nA = norm(dq.real);
  if (nA <= tol::singular * (1.0 + norm(dq.dual)))
    throw SingularInput("abs: real part is zero");
  const Quaternion prod = dq.real * conj(dq.dual);
  return {nA, prod.w / nA};
}

ScrewFactorization screw_factor(const DualQuaternion& dq) {
  const Vector3 a1 = vec(dq.real);
  const Vector3 bv = vec(dq.dual);
  const double na1 = norm(a1);
  Vector3 r{};
  if (na1 > tol::vector_zero * (1.0 + norm(dq.real)))
    r = (1.0 / (2.0 * na1 * na1)) * cross(a1, bv);
  const DualQuaternion plus{{1.0, 0.0, 0.0, 0.0}, pure(r)};
  const DualQuaternion minus{{1.0, 0.0, 0.0, 0.0}, -pure(r)};
  return {r, minus * dq * plus};
}

DualQuaternion apply_via_screw(const ValidFunction& f, const DualQuaternion& dq) {
  const ScrewFactorization s = screw_factor(dq);
  const DualQuaternion fc = apply_commuting(f, s.core);
  const DualQuaternion plus{{1.0, 0.0, 0.0, 0.0}, pure(s.r)};
  const DualQuaternion minus{{1.0, 0.0, 0.0, 0.0}, -pure(s.r)};
  return plus * fc * minus;
}

}  // namespace dqcalc
