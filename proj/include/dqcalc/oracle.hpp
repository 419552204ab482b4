#pragma once

#include <span>
#include <utility>
#include <vector>

#include "dqcalc/algebra.hpp"
#include "dqcalc/polynomial.hpp"

// Brute-force ground truth, kept independent of the closed-form extension
// operators they cross-check. Everything here works by repeated Hamilton /
// dual-quaternion products, never through g and h.
namespace dqcalc::oracle {

// The substitution behind direct evaluation: x -> S = (eta + conj eta)/2
// (scalar + eps scalar, central) and iy -> V = (eta - conj eta)/2 (pure
// vector parts).
struct MonomialExpansion {
  DualQuaternion scalar_part;  // S
  DualQuaternion vector_part;  // V
};

MonomialExpansion monomial_split(const DualQuaternion& dq);

// S is central, so both orders must agree; the verification suite checks it.
enum class MulOrder { scalar_first, vector_first };

// sum r_{m,n} S^m V^n by repeated multiplication.
DualQuaternion poly_eval_dq(const ValidPolynomial& p, const DualQuaternion& dq,
                            MulOrder order = MulOrder::scalar_first);

// d/dr p(A + rB) at r = 0: for every monomial, the sum over positions of the
// product with one factor replaced by the matching part of B. Satisfies
// p(A + eps B) = p(A) + eps nc_derivative(p, A, B).
Quaternion nc_derivative(const ValidPolynomial& p, const Quaternion& A,
                         const Quaternion& B);

// Direct monomial evaluation at a quaternion (x -> a0, iy -> a1).
Quaternion poly_eval_quaternion(const ValidPolynomial& p, const Quaternion& A);

// sum_{k=0}^{terms} eta^k / k!.
DualQuaternion taylor_exp(const DualQuaternion& dq, int terms);

// Even/odd coefficient split of a univariate real polynomial:
// p(z) = k(z^2) + l(z^2) z.
std::pair<std::vector<double>, std::vector<double>> kl_split_poly(
    std::span<const double> coeffs);

}  // namespace dqcalc::oracle
