#include "dqcalc/builtins.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "dqcalc/errors.hpp"
#include "dqcalc/json_io.hpp"

namespace dqcalc {

namespace {

double sinc(double y) { return y == 0.0 ? 1.0 : std::sin(y) / y; }

ValidFunction exp_core(bool with_children) {
  ValidFunction f;
  f.name = "exp";
  f.eval = [](Complex z) { return std::exp(z); };
  f.fx = f.eval;
  f.fiy = f.eval;
  f.h_exact = [](Complex z) { return std::exp(z.real()) * sinc(z.imag()); };
  if (with_children) {
    auto d = std::make_shared<const ValidFunction>(exp_core(false));
    f.dx = d;
    f.diy = d;
  }
  return f;
}

bool off_negative_axis(Complex z) { return !(z.imag() == 0.0 && z.real() <= 0.0); }

std::string pow_name(double alpha) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "pow:%.17g", alpha);
  return buf;
}

// scale * z^alpha with its closed-form h; children chain through
// scale*alpha * z^(alpha-1).
ValidFunction pow_core(double alpha, double scale, bool with_children) {
  ValidFunction f;
  f.name = pow_name(alpha);
  f.eval = [alpha, scale](Complex z) { return scale * std::pow(z, alpha); };
  f.fx = [alpha, scale](Complex z) { return scale * alpha * std::pow(z, alpha - 1.0); };
  f.fiy = f.fx;
  f.in_domain = off_negative_axis;
  f.h_exact = [alpha, scale](Complex z) {
    const double x = z.real();
    const double y = z.imag();
    if (y > tol::axis_switch * (1.0 + std::abs(x)))
      return scale * std::pow(Complex(x, y), alpha).imag() / y;
    return scale * alpha * std::pow(x, alpha - 1.0);  // x > 0 inside the domain
  };
  if (with_children) {
    auto d = std::make_shared<const ValidFunction>(pow_core(alpha - 1.0, scale * alpha, false));
    f.dx = d;
    f.diy = d;
  }
  return f;
}

ValidFunction cayley_derivative() {
  // 2/(1-z)^2; h = 4(1-x)/|1-z|^4.
  ValidFunction d;
  d.name = "cayley_x";
  d.eval = [](Complex z) {
    const Complex w = 1.0 - z;
    return 2.0 / (w * w);
  };
  d.fx = [](Complex z) {
    const Complex w = 1.0 - z;
    return 4.0 / (w * w * w);
  };
  d.fiy = d.fx;
  d.in_domain = [](Complex z) { return z != Complex(1.0, 0.0); };
  d.h_exact = [](Complex z) {
    const double q = std::norm(Complex(1.0, 0.0) - z);
    return 4.0 * (1.0 - z.real()) / (q * q);
  };
  return d;
}

ValidFunction poly_core(const ValidPolynomial& p, int child_depth) {
  ValidFunction f;
  f.name = "poly";
  auto sp = std::make_shared<const ValidPolynomial>(p);
  auto px = std::make_shared<const ValidPolynomial>(p.partial_x());
  auto py = std::make_shared<const ValidPolynomial>(p.partial_iy());
  f.eval = [sp](Complex z) { return (*sp)(z); };
  f.fx = [px](Complex z) { return (*px)(z); };
  f.fiy = [py](Complex z) { return (*py)(z); };
  f.h_exact = [sp](Complex z) { return sp->h_value(z); };
  if (child_depth > 0) {
    f.dx = std::make_shared<const ValidFunction>(poly_core(*px, child_depth - 1));
    f.diy = std::make_shared<const ValidFunction>(poly_core(*py, child_depth - 1));
  }
  return f;
}

}  // namespace

ValidFunction make_exp() { return exp_core(true); }

ValidFunction make_pow(double alpha) {
  if (!std::isfinite(alpha)) throw InvalidParameter("pow: exponent must be finite");
  return pow_core(alpha, 1.0, true);
}

ValidFunction make_cayley() {
  ValidFunction f;
  f.name = "cayley";
  f.eval = [](Complex z) { return (1.0 + z) / (1.0 - z); };
  f.fx = [](Complex z) {
    const Complex w = 1.0 - z;
    return 2.0 / (w * w);
  };
  f.fiy = f.fx;
  f.in_domain = [](Complex z) { return z != Complex(1.0, 0.0); };
  // Im((1+z)/(1-z)) = 2y/|1-z|^2, so h has no axis branch at all.
  f.h_exact = [](Complex z) { return 2.0 / std::norm(Complex(1.0, 0.0) - z); };
  auto d = std::make_shared<const ValidFunction>(cayley_derivative());
  f.dx = d;
  f.diy = d;
  return f;
}

ValidFunction make_polynomial(const ValidPolynomial& p) { return poly_core(p, 1); }

ValidFunction parse_function_spec(const std::string& spec) {
  if (spec == "exp") return make_exp();
  if (spec == "cayley") return make_cayley();
  if (spec.starts_with("pow:")) {
    const std::string arg = spec.substr(4);
    std::size_t used = 0;
    double alpha = 0.0;
    try {
      alpha = std::stod(arg, &used);
    } catch (const std::exception&) {
      throw ParseError("bad exponent in function spec: " + spec);
    }
    if (used != arg.size()) throw ParseError("bad exponent in function spec: " + spec);
    return make_pow(alpha);
  }
  if (spec.starts_with("poly:@")) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open polynomial file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return make_polynomial(polynomial_from_json(text.str()));
  }
  throw ParseError("unknown function spec: " + spec);
}

}  // namespace dqcalc
