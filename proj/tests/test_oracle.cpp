#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dqcalc/oracle.hpp"
#include "dqcalc/random_gen.hpp"
#include "helpers.hpp"

using namespace dqcalc;
using namespace dqtest;
using oracle::MulOrder;

namespace {

ValidPolynomial terms(std::initializer_list<ValidPolynomial::Term> list) {
  return ValidPolynomial(std::span<const ValidPolynomial::Term>(list.begin(), list.size()));
}

}  // namespace

TEST_CASE("poly_eval_dq on monomials") {
  rng::Stream s(rng::derive_seed(17, "orc-mono", 0));

  // p = x extracts the central scalar part
  const ValidPolynomial px = terms({{1, 0, 1.0}});
  for (int t = 0; t < 20; ++t) {
    const DualQuaternion eta = rng::dq_in_balls(s, 2.0, 2.0);
    CHECK(rel(oracle::poly_eval_dq(px, eta), embed({eta.real.w, eta.dual.w})) < 1e-15);
  }

  // p = (iy)^2 at i + eps j: V = i + eps j, V^2 = -1
  const ValidPolynomial py2 = terms({{0, 2, 1.0}});
  CHECK(rel(oracle::poly_eval_dq(py2, DualQuaternion{qi, qj}),
            DualQuaternion{-qone, {}}) < 1e-15);

  // z conj(z) = x^2 - (iy)^2 gives S^2 - V^2 = (eta conj(eta) + conj(eta) eta)/2,
  // and x^2 + (iy)^2 gives S^2 + V^2 = (eta^2 + conj(eta)^2)/2.
  const ValidPolynomial pnorm = terms({{2, 0, 1.0}, {0, 2, -1.0}});
  const ValidPolynomial psum = terms({{2, 0, 1.0}, {0, 2, 1.0}});
  for (int t = 0; t < 50; ++t) {
    const DualQuaternion eta = rng::dq_in_balls(s, 2.0, 2.0);
    const DualQuaternion sym = 0.5 * (eta * conj(eta) + conj(eta) * eta);
    CHECK(rel(oracle::poly_eval_dq(pnorm, eta), sym) < 1e-13);
    const DualQuaternion squares = 0.5 * (eta * eta + conj(eta) * conj(eta));
    CHECK(rel(oracle::poly_eval_dq(psum, eta), squares) < 1e-13);
  }
}

TEST_CASE("monomial evaluation order does not matter") {
  rng::Stream s(rng::derive_seed(17, "orc-central", 0));
  for (int t = 0; t < 100; ++t) {
    const ValidPolynomial p = rng::random_polynomial(s, 8, 1.0);
    const DualQuaternion eta = rng::dq_in_balls(s, 2.0, 2.0);
    CHECK(rel(oracle::poly_eval_dq(p, eta, MulOrder::scalar_first),
              oracle::poly_eval_dq(p, eta, MulOrder::vector_first)) < 1e-13);
  }
}

TEST_CASE("nc_derivative") {
  const double c2[] = {0.0, 0.0, 1.0};
  const ValidPolynomial sq = ValidPolynomial::from_univariate(c2);
  rng::Stream s(rng::derive_seed(17, "orc-deriv", 0));
  for (int t = 0; t < 50; ++t) {
    const Quaternion a = rng::quaternion_in_ball(s, 2.0);
    const Quaternion b = rng::quaternion_in_ball(s, 2.0);
    CHECK(rel(oracle::nc_derivative(sq, a, b), a * b + b * a) < 1e-13);
  }

  // z^3 at A = i, B = j: i^2 j + i j i + j i^2 expanded by hand equals -j
  const double c3[] = {0.0, 0.0, 0.0, 1.0};
  const ValidPolynomial cube = ValidPolynomial::from_univariate(c3);
  const Quaternion expanded = qi * qi * qj + qi * qj * qi + qj * qi * qi;
  CHECK(rel(expanded, -qj) == 0.0);
  CHECK(rel(oracle::nc_derivative(cube, qi, qj), expanded) < 1e-15);

  CHECK(oracle::nc_derivative(ValidPolynomial::constant(1.0), qi, qj) == Quaternion{});
}

TEST_CASE("derivative formula matches direct dual evaluation") {
  rng::Stream s(rng::derive_seed(17, "orc-eq7", 0));
  for (int t = 0; t < 200; ++t) {
    const ValidPolynomial p = rng::random_polynomial(s, 8, 1.0);
    const Quaternion a = rng::quaternion_in_ball(s, 2.0);
    const Quaternion b = rng::quaternion_in_ball(s, 2.0);
    const DualQuaternion direct = oracle::poly_eval_dq(p, {a, b});
    const DualQuaternion derived{oracle::poly_eval_quaternion(p, a),
                                 oracle::nc_derivative(p, a, b)};
    CHECK(rel(direct, derived) < 1e-10);
  }
}

TEST_CASE("taylor_exp") {
  CHECK(oracle::taylor_exp(DualQuaternion{}, 40) == dq_one());
  CHECK(rel(oracle::taylor_exp(dq_one(), 40).real.w, std::numbers::e) < 1e-15);
  const DualQuaternion edge{std::numbers::pi * qi, qj};
  CHECK(rel(oracle::taylor_exp(edge, 40), DualQuaternion{-qone, {}}) < 1e-12);
}

TEST_CASE("kl_split_poly") {
  {
    const double c[] = {0.0, 0.0, 1.0};  // z^2
    const auto [k, l] = oracle::kl_split_poly(c);
    CHECK(k == std::vector<double>{0.0, 1.0});
    CHECK(l.empty());
  }
  {
    const double c[] = {0.0, 1.0, 0.0, 1.0};  // z + z^3
    const auto [k, l] = oracle::kl_split_poly(c);
    CHECK(k.empty());
    CHECK(l == std::vector<double>{1.0, 1.0});
  }
  {
    const double c[] = {1.0, 1.0, 1.0, 1.0};
    const auto [k, l] = oracle::kl_split_poly(c);
    CHECK(k == std::vector<double>{1.0, 1.0});
    CHECK(l == std::vector<double>{1.0, 1.0});
  }

  // reconstruction at random complex points
  rng::Stream s(rng::derive_seed(17, "orc-kl", 0));
  for (int t = 0; t < 50; ++t) {
    const auto coeffs = rng::random_real_coeffs(s, 8, 1.0);
    const Complex z(s.symmetric(2.0), s.symmetric(2.0));
    Complex direct = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) direct = direct * z + coeffs[i];
    const auto [k, l] = oracle::kl_split_poly(coeffs);
    const Complex z2 = z * z;
    Complex kz = 0.0, lz = 0.0;
    for (std::size_t i = k.size(); i-- > 0;) kz = kz * z2 + k[i];
    for (std::size_t i = l.size(); i-- > 0;) lz = lz * z2 + l[i];
    CHECK(std::abs(direct - (kz + lz * z)) <= 1e-12 * (1.0 + std::abs(direct)));
  }
}
