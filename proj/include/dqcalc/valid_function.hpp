#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include "dqcalc/algebra.hpp"

namespace dqcalc {

using Complex = std::complex<double>;

// A function f: Omega -> C with a conjugate-symmetric domain and
// f(conj z) = conj(f(z)). Such functions split as
//
//   f(x + iy) = g(x + iy) + iy * h(x + iy)
//
// with g, h real-valued and even in y; h has a removable singularity on the
// real axis filled by the partial derivative f_iy = -i df/dy. These are
// exactly the functions the extension operators in calculus.hpp accept.
//
// Instances are immutable after construction; evaluation is pure and safe to
// share across threads.
struct ValidFunction {
  std::string name;

  // Pointwise evaluation. Required.
  std::function<Complex(Complex)> eval;
  // Partial derivatives df/dx and -i df/dy. Either may be absent for
  // hand-rolled bundles; the builtins always provide them.
  std::function<Complex(Complex)> fx;
  std::function<Complex(Complex)> fiy;
  // Domain membership; absent means the whole plane.
  std::function<bool(Complex)> in_domain;
  // Closed-form h, called with y >= 0. Bypasses the difference quotient and
  // its cancellation trouble near the axis.
  std::function<double(Complex)> h_exact;
  // Analytic derivative bundles, used by the dual-quaternion extension.
  std::shared_ptr<const ValidFunction> dx;
  std::shared_ptr<const ValidFunction> diy;

  bool contains(Complex z) const { return !in_domain || in_domain(z); }
};

// Throws DomainError when z is outside f's domain.
void require_domain(const ValidFunction& f, Complex z);

// g(z) = (f(z) + f(conj z))/2, real part returned, the conjugate-symmetry
// residue discarded. Even in y by construction (evaluated at (x, |y|)).
double eval_g(const ValidFunction& f, Complex z);

// h(z) = (f(z) - f(conj z))/(2iy) away from the axis; at or near the axis
// (|y| <= tol::axis_switch*(1+|x|)) the on-axis value f_iy(x) is used, or a
// clamped quotient if no on-axis derivative is available. h_exact, when
// present, overrides both paths. Even in y by construction.
double eval_h(const ValidFunction& f, Complex z);

// Derivative bundles for f_x and f_iy. Prefers the analytic children;
// otherwise wraps the corresponding evaluator.
ValidFunction derivative_x(const ValidFunction& f);
ValidFunction derivative_iy(const ValidFunction& f);

struct ValidityReport {
  std::size_t samples = 0;
  std::size_t failures = 0;
  double max_defect = 0.0;  // max |f(conj z) - conj f(z)| over the samples
  bool pass = true;
};

// Measures the conjugate-symmetry defect over the samples. A point passes
// when |f(conj z) - conj f(z)| <= 1e-12*(1+|f(z)|); out-of-domain samples are
// counted as failures.
ValidityReport check_valid(const ValidFunction& f, std::span<const Complex> samples);

}  // namespace dqcalc
