#include "dqcalc/valid_function.hpp"

#include <cmath>

#include "dqcalc/errors.hpp"

namespace dqcalc {

void require_domain(const ValidFunction& f, Complex z) {
  if (!f.contains(z)) {
    throw DomainError(f.name.empty() ? "point outside function domain"
                                     : f.name + ": point outside function domain");
  }
}

double eval_g(const ValidFunction& f, Complex z) {
  require_domain(f, z);
  const double x = z.real();
  const double y = std::abs(z.imag());
  if (y == 0.0) return f.eval(Complex(x, 0.0)).real();
  const Complex s = f.eval(Complex(x, y)) + f.eval(Complex(x, -y));
  return 0.5 * s.real();
}

double eval_h(const ValidFunction& f, Complex z) {
  require_domain(f, z);
  const double x = z.real();
  double y = std::abs(z.imag());
  if (f.h_exact) return f.h_exact(Complex(x, y));
  const double cutoff = tol::axis_switch * (1.0 + std::abs(x));
  if (y <= cutoff) {
    if (f.fiy) return f.fiy(Complex(x, 0.0)).real();
    y = cutoff;  // clamped quotient: no on-axis derivative available
  }
  const Complex d = f.eval(Complex(x, y)) - f.eval(Complex(x, -y));
  return (d / Complex(0.0, 2.0 * y)).real();
}

ValidFunction derivative_x(const ValidFunction& f) {
  if (f.dx) return *f.dx;
  if (!f.fx) throw InvalidParameter(f.name + ": no x-derivative available");
  ValidFunction d;
  d.name = f.name + "_x";
  d.eval = f.fx;
  d.in_domain = f.in_domain;
  return d;
}

ValidFunction derivative_iy(const ValidFunction& f) {
  if (f.diy) return *f.diy;
  if (!f.fiy) throw InvalidParameter(f.name + ": no iy-derivative available");
  ValidFunction d;
  d.name = f.name + "_iy";
  d.eval = f.fiy;
  d.in_domain = f.in_domain;
  return d;
}

ValidityReport check_valid(const ValidFunction& f, std::span<const Complex> samples) {
  ValidityReport report;
  for (const Complex z : samples) {
    ++report.samples;
    if (!f.contains(z) || !f.contains(std::conj(z))) {
      ++report.failures;
      report.pass = false;
      continue;
    }
    const Complex fz = f.eval(z);
    const double defect = std::abs(f.eval(std::conj(z)) - std::conj(fz));
    if (defect > report.max_defect) report.max_defect = defect;
    if (!(defect <= 1e-12 * (1.0 + std::abs(fz)))) {
      ++report.failures;
      report.pass = false;
    }
  }
  return report;
}

}  // namespace dqcalc
