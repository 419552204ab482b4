#include "dqcalc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "dqcalc/builtins.hpp"
#include "dqcalc/calculus.hpp"
#include "dqcalc/errors.hpp"
#include "dqcalc/oracle.hpp"
#include "dqcalc/pauli.hpp"
#include "dqcalc/random_gen.hpp"

namespace dqcalc::verify {

namespace {

using rng::Stream;

double defect(const DualQuaternion& u, const DualQuaternion& v) {
  return norm(u - v) / (1.0 + std::max(norm(u), norm(v)));
}

double defect(const pauli::ComplexMatrix& u, const pauli::ComplexMatrix& v) {
  const double nu = pauli::frobenius_norm(u);
  const double nv = pauli::frobenius_norm(v);
  return pauli::frobenius_norm(u - v) / (1.0 + std::max(nu, nv));
}

// Real part away from the excluded half-line (-inf, 0] of the complexified
// point, with some margin so power branches stay well conditioned.
Quaternion quaternion_off_cut(Stream& s) {
  for (;;) {
    const Quaternion a = rng::quaternion_shell(s, 0.3, 3.0);
    const double margin = 0.1 * (1.0 + norm(a));
    if (a.w > margin || norm(vec(a)) >= margin) return a;
  }
}

DualQuaternion dq_off_cut(Stream& s) {
  return {quaternion_off_cut(s), rng::quaternion_in_ball(s, 2.0)};
}

Quaternion quaternion_off_one(Stream& s) {
  for (;;) {
    const Quaternion a = rng::quaternion_in_ball(s, 2.0);
    if (std::hypot(1.0 - a.w, norm(vec(a))) >= 0.5) return a;
  }
}

// Rotates through the builtin families; used by the norm-preservation and
// screw-path checks. Returns the function together with a matching
// domain-safe real part.
std::pair<ValidFunction, Quaternion> function_and_point(Stream& s, std::size_t kind) {
  switch (kind % 4) {
    case 0:
      return {make_exp(), rng::quaternion_in_ball(s, 2.0)};
    case 1:
      return {make_pow(s.symmetric(2.0)), quaternion_off_cut(s)};
    case 2:
      return {make_cayley(), quaternion_off_one(s)};
    default:
      return {make_polynomial(rng::random_polynomial(s, 8, 1.0)),
              rng::quaternion_in_ball(s, 2.0)};
  }
}

std::pair<pauli::ComplexMatrix, pauli::ComplexMatrix> random_pauli_pair(Stream& s) {
  using pauli::ComplexMatrix;
  for (;;) {
    const Complex a(s.symmetric(1.0), s.symmetric(1.0));
    const Complex b(s.symmetric(1.0), s.symmetric(1.0));
    const double n2 = std::norm(a) + std::norm(b);
    if (n2 < 0.05 || n2 > 1.0) continue;
    const double inv = 1.0 / std::sqrt(n2);
    ComplexMatrix u(2);
    u.at(0, 0) = inv * a;
    u.at(0, 1) = inv * b;
    u.at(1, 0) = -inv * std::conj(b);
    u.at(1, 1) = inv * std::conj(a);
    const ComplexMatrix ud = pauli::adjoint(u);
    const double sa = s.uniform(0.5, 2.0) * (s.coin() ? 1.0 : -1.0);
    const double sb = s.uniform(0.5, 2.0) * (s.coin() ? 1.0 : -1.0);
    return {Complex(sa, 0.0) * (u * pauli::sigma_x() * ud),
            Complex(sb, 0.0) * (u * pauli::sigma_y() * ud)};
  }
}

std::vector<pauli::Complex> random_complex_coeffs(Stream& s, int max_degree) {
  std::vector<pauli::Complex> out(max_degree + 1);
  for (auto& c : out) c = pauli::Complex(s.symmetric(1.0), s.symmetric(1.0));
  return out;
}

template <typename TrialFn>
std::vector<double> run_trials(std::size_t n, bool parallel, const TrialFn& fn) {
  std::vector<double> out(n, 0.0);
  auto body = [&](std::size_t i) {
    double d;
    try {
      d = fn(i);
    } catch (const std::exception&) {
      d = std::numeric_limits<double>::infinity();
    }
    out[i] = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
  };
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      body(static_cast<std::size_t>(i));
    return out;
  }
#else
  (void)parallel;
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
  return out;
}

struct Engine {
  const Options& opt;
  Report report;

  std::size_t full() const { return opt.trials; }
  std::size_t half() const { return std::max<std::size_t>(1, opt.trials / 2); }
  std::size_t twentieth() const { return std::max<std::size_t>(1, opt.trials / 20); }

  template <typename TrialFn>
  void check(const char* suite, const char* name, std::size_t trials, double tol,
             const TrialFn& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<double> defects =
        run_trials(trials, opt.parallel, [&](std::size_t i) {
          Stream s(rng::derive_seed(opt.seed, name, i));
          return fn(s, i);
        });
    // Reduced in trial-index order; independent of execution order.
    double mx = 0.0;
    for (const double d : defects) mx = std::max(mx, d);
    const double tolerance = opt.tol_override.value_or(tol);
    const auto t1 = std::chrono::steady_clock::now();
    report.checks.push_back(
        {suite, name, trials, tolerance, mx, mx <= tolerance,
         std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }
};

void run_oracle(Engine& e) {
  e.check("oracle", "theorem2-vs-direct", e.full(), 1e-8, [](Stream& s, std::size_t) {
    const ValidPolynomial p = rng::random_polynomial(s, 8, 1.0);
    const DualQuaternion eta = rng::dq_in_balls(s, 2.0, 2.0);
    return defect(apply(make_polynomial(p), eta), oracle::poly_eval_dq(p, eta));
  });
  e.check("oracle", "eq7-consistency", e.half(), 1e-10, [](Stream& s, std::size_t) {
    const ValidPolynomial p = rng::random_polynomial(s, 8, 1.0);
    const Quaternion a = rng::quaternion_in_ball(s, 2.0);
    const Quaternion b = rng::quaternion_in_ball(s, 2.0);
    const DualQuaternion direct = oracle::poly_eval_dq(p, {a, b});
    const DualQuaternion derived{oracle::poly_eval_quaternion(p, a),
                                 oracle::nc_derivative(p, a, b)};
    return defect(direct, derived);
  });
  e.check("oracle", "monomial-centrality", e.half(), 1e-13, [](Stream& s, std::size_t) {
    const ValidPolynomial p = rng::random_polynomial(s, 8, 1.0);
    const DualQuaternion eta = rng::dq_in_balls(s, 2.0, 2.0);
    return defect(oracle::poly_eval_dq(p, eta, oracle::MulOrder::scalar_first),
                  oracle::poly_eval_dq(p, eta, oracle::MulOrder::vector_first));
  });
  e.check("oracle", "kl-roundtrip", e.twentieth(), 1e-12, [](Stream& s, std::size_t) {
    const std::vector<double> coeffs = rng::random_real_coeffs(s, 8, 1.0);
    const Complex z(s.symmetric(2.0), s.symmetric(2.0));
    Complex direct = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) direct = direct * z + coeffs[i];
    const auto [k, l] = oracle::kl_split_poly(coeffs);
    const Complex z2 = z * z;
    Complex kz = 0.0, lz = 0.0;
    for (std::size_t i = k.size(); i-- > 0;) kz = kz * z2 + k[i];
    for (std::size_t i = l.size(); i-- > 0;) lz = lz * z2 + l[i];
    const Complex recon = kz + lz * z;
    return std::abs(direct - recon) / (1.0 + std::abs(direct));
  });
}

void run_axioms(Engine& e) {
  const auto sample = [](Stream& s) {
    return std::tuple{rng::random_polynomial(s, 8, 1.0),
                      rng::random_polynomial(s, 8, 1.0),
                      rng::dq_in_balls(s, 1.0, 1.0)};
  };
  e.check("axioms", "additivity", e.half(), 1e-9, [&](Stream& s, std::size_t) {
    const auto [p, q, eta] = sample(s);
    return defect(apply(make_polynomial(p + q), eta),
                  apply(make_polynomial(p), eta) + apply(make_polynomial(q), eta));
  });
  e.check("axioms", "multiplicativity", e.half(), 1e-9, [&](Stream& s, std::size_t) {
    const auto [p, q, eta] = sample(s);
    return defect(apply(make_polynomial(p * q), eta),
                  apply(make_polynomial(p), eta) * apply(make_polynomial(q), eta));
  });
  e.check("axioms", "conjugation", e.half(), 1e-9, [&](Stream& s, std::size_t) {
    const auto [p, q, eta] = sample(s);
    (void)q;
    return defect(apply(make_polynomial(p.conjugated()), eta),
                  conj(apply(make_polynomial(p), eta)));
  });
  e.check("axioms", "homogeneity", e.half(), 1e-9, [&](Stream& s, std::size_t) {
    const auto [p, q, eta] = sample(s);
    (void)q;
    const double a = s.symmetric(3.0);
    return defect(apply(make_polynomial(a * p), eta), a * apply(make_polynomial(p), eta));
  });
  e.check("axioms", "conjugate-function", e.half(), 1e-12, [](Stream& s, std::size_t) {
    // z -> conj(z) as the polynomial x - iy must act as quaternionic conjugation.
    const ValidPolynomial::Term terms[] = {{1, 0, 1.0}, {0, 1, -1.0}};
    const ValidPolynomial cf{std::span<const ValidPolynomial::Term>(terms)};
    const DualQuaternion eta = rng::dq_in_balls(s, 2.0, 2.0);
    return defect(apply(make_polynomial(cf), eta), conj(eta));
  });
}

void run_roundtrip(Engine& e) {
  e.check("roundtrip", "exp-threeway", e.half(), 1e-10, [](Stream& s, std::size_t) {
    const DualQuaternion eta = rng::dq_in_balls(s, std::numbers::sqrt2, std::numbers::sqrt2);
    const DualQuaternion closed = exp_dq(eta);
    const DualQuaternion extended = apply(make_exp(), eta);
    const DualQuaternion series = oracle::taylor_exp(eta, 40);
    return std::max({defect(closed, extended), defect(closed, series),
                     defect(extended, series)});
  });
  e.check("roundtrip", "exp-sinc-pi-edge", e.twentieth(), 1e-12,
          [](Stream& s, std::size_t) {
            const Vector3 axis = rng::unit_vector(s);
            const Vector3 perp = s.uniform(0.5, 2.0) * rng::unit_perpendicular(s, axis);
            const DualQuaternion eta{pure(std::numbers::pi * axis), pure(perp)};
            return defect(exp_dq(eta), -dq_one());
          });
  e.check("roundtrip", "log-exp-random", e.half(), 1e-9, [](Stream& s, std::size_t) {
    const DualQuaternion eta{rng::quaternion_shell(s, 0.1, 10.0),
                             rng::quaternion_in_ball(s, 2.0)};
    return defect(exp_dq(log_dq(eta)), eta);
  });
  e.check("roundtrip", "log-exp-degenerate", e.twentieth(), 1e-9,
          [](Stream& s, std::size_t i) {
            // Scalar real part, both signs of a0, with and without a dual
            // vector part (the latter takes the fallback axis when a0 < 0).
            const double a0 = (i % 2 == 0 ? 1.0 : -1.0) * s.uniform(0.1, 10.0);
            const Quaternion b = (i % 4) < 2 ? rng::quaternion_in_ball(s, 2.0)
                                             : Quaternion{s.symmetric(2.0), 0.0, 0.0, 0.0};
            const DualQuaternion eta{{a0, 0.0, 0.0, 0.0}, b};
            return defect(exp_dq(log_dq(eta)), eta);
          });
  e.check("roundtrip", "norm-preservation", e.half(), 1e-11, [](Stream& s, std::size_t i) {
    const auto [f, a] = function_and_point(s, i);
    const Quaternion fa = apply_quaternion(f, a);
    const Complex fz = f.eval(Complex(a.w, norm(vec(a))));
    return std::abs(norm(fa) - std::abs(fz)) / (1.0 + norm(fa));
  });
  e.check("roundtrip", "inverse-identity", e.half(), 1e-12, [](Stream& s, std::size_t) {
    const DualQuaternion eta{rng::quaternion_shell(s, 0.5, 3.0),
                             rng::quaternion_in_ball(s, 2.0)};
    const DualQuaternion inv = inv_dq(eta);
    return std::max(defect(eta * inv, dq_one()), defect(inv * eta, dq_one()));
  });
  e.check("roundtrip", "pow-square", e.half(), 1e-10, [](Stream& s, std::size_t) {
    const DualQuaternion eta = dq_off_cut(s);
    return defect(pow_dq(eta, 2.0), eta * eta);
  });
  e.check("roundtrip", "pow-inverse", e.half(), 1e-10, [](Stream& s, std::size_t) {
    const DualQuaternion eta = dq_off_cut(s);
    return defect(pow_dq(eta, -1.0), inv_dq(eta));
  });
  e.check("roundtrip", "pow-half-square", e.half(), 1e-9, [](Stream& s, std::size_t) {
    const DualQuaternion eta = dq_off_cut(s);
    const DualQuaternion root = pow_dq(eta, 0.5);
    return defect(root * root, eta);
  });
  e.check("roundtrip", "cayley-two-forms", e.half(), 1e-11, [](Stream& s, std::size_t) {
    const DualQuaternion eta{quaternion_off_one(s), rng::quaternion_in_ball(s, 2.0)};
    return defect(cayley_dq(eta), cayley_dq_resolvent(eta));
  });
  e.check("roundtrip", "cayley-inverse", e.half(), 1e-10, [](Stream& s, std::size_t) {
    // w = (1 + eta)/(1 - eta) inverts to eta = (w - 1)(w + 1)^{-1}
    const DualQuaternion eta{quaternion_off_one(s), rng::quaternion_in_ball(s, 2.0)};
    const DualQuaternion w = cayley_dq(eta);
    return defect((w - dq_one()) * inv_dq(w + dq_one()), eta);
  });
}

void run_screw(Engine& e) {
  e.check("screw", "screw-vs-apply", e.half(), 1e-9, [](Stream& s, std::size_t i) {
    const auto [f, a] = function_and_point(s, i);
    const DualQuaternion eta{a, rng::quaternion_in_ball(s, 2.0)};
    return defect(apply_via_screw(f, eta), apply(f, eta));
  });
  e.check("screw", "screw-reassembly", e.half(), 1e-12, [](Stream& s, std::size_t) {
    const DualQuaternion eta = rng::dq_in_balls(s, 2.0, 2.0);
    const ScrewFactorization sf = screw_factor(eta);
    const DualQuaternion plus{{1.0, 0.0, 0.0, 0.0}, pure(sf.r)};
    const DualQuaternion minus{{1.0, 0.0, 0.0, 0.0}, -pure(sf.r)};
    return defect(plus * sf.core * minus, eta);
  });
}

void run_pauli(Engine& e) {
  e.check("pauli", "anticommuting-pair", e.half(), 1e-10, [](Stream& s, std::size_t) {
    const auto [a, b] = random_pauli_pair(s);
    const auto coeffs = random_complex_coeffs(s, 10);
    return defect(pauli::apply_anticommuting_pair(coeffs, a, b),
                  pauli::horner_eval(coeffs, a + b));
  });
  e.check("pauli", "square-commutes", e.half(), 1e-12, [](Stream& s, std::size_t) {
    const auto [a, b] = random_pauli_pair(s);
    const pauli::ComplexMatrix a2 = a * a;
    const double scale =
        (1.0 + pauli::frobenius_norm(a2)) * (1.0 + pauli::frobenius_norm(b));
    return pauli::frobenius_norm(a2 * b - b * a2) / scale;
  });
  e.check("pauli", "pascal-matrix-match", 9, 0.0, [](Stream&, std::size_t i) {
    const int n = static_cast<int>(i);
    const auto row = pauli::pauli_pascal_row(n);
    const auto probe = pauli::pascal_row_via_matrices(n);
    long long mx = 0;
    for (std::size_t j = 0; j < row.size(); ++j)
      mx = std::max(mx, std::llabs(row[j] - probe[j]));
    return static_cast<double>(mx);
  });
}

}  // namespace

Suite parse_suite(std::string_view name) {
  if (name == "all") return Suite::all;
  if (name == "oracle") return Suite::oracle;
  if (name == "roundtrip") return Suite::roundtrip;
  if (name == "screw") return Suite::screw;
  if (name == "axioms") return Suite::axioms;
  if (name == "pauli") return Suite::pauli;
  throw InvalidParameter("unknown suite: " + std::string(name));
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* Report::find(std::string_view name) const {
  for (const CheckResult& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Report run(const Options& opt) {
  if (opt.trials < 1) throw InvalidParameter("trials must be >= 1");
  if (opt.tol_override && !(*opt.tol_override > 0.0))
    throw InvalidParameter("tolerance must be positive");
  Engine e{opt, {}};
  const Suite which = opt.suite;
  const auto wants = [&](Suite s) { return which == Suite::all || which == s; };
  if (wants(Suite::oracle)) run_oracle(e);
  if (wants(Suite::axioms)) run_axioms(e);
  if (wants(Suite::roundtrip)) run_roundtrip(e);
  if (wants(Suite::screw)) run_screw(e);
  if (wants(Suite::pauli)) run_pauli(e);
  return std::move(e.report);
}

std::string render(const Report& report) {
  std::string out;
  char line[192];
  for (const CheckResult& c : report.checks) {
    std::snprintf(line, sizeof line,
                  "%-9s %-24s trials=%-6zu tol=%-10.3e max_defect=%-24.17g %s\n",
                  c.suite.c_str(), c.name.c_str(), c.trials, c.tolerance, c.max_defect,
                  c.pass ? "PASS" : "FAIL");
    out += line;
  }
  out += report.all_pass() ? "overall PASS\n" : "overall FAIL\n";
  return out;
}

}  // namespace dqcalc::verify
