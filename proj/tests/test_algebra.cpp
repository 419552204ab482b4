#include <doctest.h>

#include <cmath>

#include "dqcalc/algebra.hpp"
#include "dqcalc/random_gen.hpp"
#include "helpers.hpp"

using namespace dqcalc;
using namespace dqtest;

TEST_CASE("quaternion product follows the defining relations") {
  CHECK(qi * qj == qk);
  CHECK(qj * qk == qi);
  CHECK(qk * qi == qj);
  CHECK(qi * qi == -qone);
  CHECK((qone + qi) * (qone + qj) == Quaternion{1.0, 1.0, 1.0, 1.0});
}

TEST_CASE("quaternion product is norm-multiplicative") {
  const Quaternion p{1.0, 2.0, 3.0, 4.0};
  const Quaternion q{5.0, 6.0, 7.0, 8.0};
  CHECK(rel(norm(p * q), std::sqrt(30.0) * std::sqrt(174.0)) < 1e-14);

  rng::Stream s(rng::derive_seed(7, "alg-norm", 0));
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = rng::quaternion_in_ball(s, 3.0);
    const Quaternion b = rng::quaternion_in_ball(s, 3.0);
    CHECK(rel(norm(a * b), norm(a) * norm(b)) < 1e-12);
  }
}

TEST_CASE("quaternion product is associative to rounding") {
  rng::Stream s(rng::derive_seed(7, "alg-assoc", 0));
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = rng::quaternion_in_ball(s, 3.0);
    const Quaternion b = rng::quaternion_in_ball(s, 3.0);
    const Quaternion c = rng::quaternion_in_ball(s, 3.0);
    CHECK(rel((a * b) * c, a * (b * c)) < 1e-12);
  }
}

TEST_CASE("conjugation laws") {
  rng::Stream s(rng::derive_seed(7, "alg-conj", 0));
  for (int t = 0; t < 100; ++t) {
    const Quaternion a = rng::quaternion_in_ball(s, 3.0);
    CHECK(conj(conj(a)) == a);
    CHECK(rel(norm(conj(a)), norm(a)) == 0.0);
    CHECK(rel(a * conj(a), norm_sq(a) * qone) < 1e-13);
  }
}

TEST_CASE("dual quaternion product drops the eps^2 term") {
  const DualQuaternion epsB{{}, {2.0, 0.5, -1.0, 3.0}};
  const DualQuaternion epsD{{}, {-1.0, 4.0, 0.0, 1.0}};
  CHECK(epsB * epsD == DualQuaternion{});

  const DualQuaternion u{qone, qi};
  const DualQuaternion v{qone, qj};
  CHECK(u * v == DualQuaternion{qone, qi + qj});

  const DualQuaternion eta{qi, qj};
  CHECK(eta * eta == DualQuaternion{-qone, {}});  // ij + ji = 0
}

TEST_CASE("dual quaternion conj is an anti-automorphism") {
  CHECK(conj(DualQuaternion{qi, qj}) == DualQuaternion{-qi, -qj});
  rng::Stream s(rng::derive_seed(7, "alg-dqconj", 0));
  for (int t = 0; t < 100; ++t) {
    const DualQuaternion u = rng::dq_in_balls(s, 2.0, 2.0);
    const DualQuaternion v = rng::dq_in_balls(s, 2.0, 2.0);
    CHECK(rel(conj(u * v), conj(v) * conj(u)) < 1e-13);
    CHECK(rel((u + v) - v, u) < 1e-14);
    CHECK(2.0 * DualQuaternion{qone, qk} == DualQuaternion{2.0 * qone, 2.0 * qk});
  }
}

TEST_CASE("dual number arithmetic") {
  const DualNumber u{2.0, 3.0};
  const DualNumber v{5.0, -1.0};
  CHECK(u * v == DualNumber{10.0, 13.0});
  CHECK(u + v == DualNumber{7.0, 2.0});
  const DualNumber eps{0.0, 1.0};
  CHECK(eps * eps == DualNumber{0.0, 0.0});
}

TEST_CASE("decompose splits the dual part along the real axis") {
  SUBCASE("orthogonal split along i") {
    const DualQuaternion eta{{1.0, 2.0, 0.0, 0.0}, {3.0, 4.0, 5.0, 0.0}};
    const DecomposedDual d = decompose(eta);
    CHECK(d.a0 == 1.0);
    CHECK(d.a1 == Vector3{2.0, 0.0, 0.0});
    CHECK(d.b0 == 3.0);
    CHECK(d.b1 == Vector3{4.0, 0.0, 0.0});
    CHECK(d.b2 == Vector3{0.0, 5.0, 0.0});
    CHECK(d.B1 == Quaternion{3.0, 4.0, 0.0, 0.0});
  }
  SUBCASE("scalar real part keeps the whole vector in b1") {
    const DualQuaternion eta{{7.0, 0.0, 0.0, 0.0}, {1.0, 0.0, 1.0, 0.0}};
    const DecomposedDual d = decompose(eta);
    CHECK(d.a0 == 7.0);
    CHECK(d.a1 == Vector3{});
    CHECK(d.b1 == Vector3{0.0, 1.0, 0.0});
    CHECK(d.b2 == Vector3{});
  }
  SUBCASE("projection formula") {
    const DualQuaternion eta{qi + qj, qi};
    const DecomposedDual d = decompose(eta);
    CHECK(rel(pure(d.b1), 0.5 * (qi + qj)) < 1e-15);
    CHECK(rel(pure(d.b2), 0.5 * (qi - qj)) < 1e-15);
  }
}

TEST_CASE("decompose properties on random inputs") {
  rng::Stream s(rng::derive_seed(7, "alg-decomp", 0));
  for (int t = 0; t < 300; ++t) {
    const DualQuaternion eta = rng::dq_in_balls(s, 3.0, 3.0);
    const DecomposedDual d = decompose(eta);
    const double scale = 1e-12 * (1.0 + norm(eta.real)) * (1.0 + norm(eta.dual));
    // reassembly
    CHECK(rel(from_parts(d.a0, d.a1), eta.real) < 1e-13);
    CHECK(rel(from_parts(d.b0, d.b1 + d.b2), eta.dual) < 1e-13);
    // parallel / perpendicular
    CHECK(norm(cross(d.b1, d.a1)) <= scale);
    CHECK(std::abs(dot(d.b2, d.a1)) <= scale);
  }
}

TEST_CASE("scalar + eps scalar is central") {
  rng::Stream s(rng::derive_seed(7, "alg-central", 0));
  for (int t = 0; t < 200; ++t) {
    const DualQuaternion c = embed({s.symmetric(3.0), s.symmetric(3.0)});
    const DualQuaternion eta = rng::dq_in_balls(s, 3.0, 3.0);
    CHECK(rel(c * eta, eta * c) < 1e-13);
  }
}

TEST_CASE("dq_mul associativity on random inputs") {
  rng::Stream s(rng::derive_seed(7, "alg-dqassoc", 0));
  for (int t = 0; t < 200; ++t) {
    const DualQuaternion a = rng::dq_in_balls(s, 2.0, 2.0);
    const DualQuaternion b = rng::dq_in_balls(s, 2.0, 2.0);
    const DualQuaternion c = rng::dq_in_balls(s, 2.0, 2.0);
    CHECK(rel((a * b) * c, a * (b * c)) < 1e-12);
  }
}

TEST_CASE("pure quaternion product encodes dot and cross") {
  rng::Stream s(rng::derive_seed(7, "alg-purevec", 0));
  for (int t = 0; t < 100; ++t) {
    const Vector3 u = rng::vector_in_ball(s, 2.0);
    const Vector3 v = rng::vector_in_ball(s, 2.0);
    const Quaternion prod = pure(u) * pure(v);
    CHECK(rel(prod, from_parts(-dot(u, v), cross(u, v))) < 1e-14);
  }
}
