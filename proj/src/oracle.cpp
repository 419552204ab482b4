#include "dqcalc/oracle.hpp"

#include <algorithm>

namespace dqcalc::oracle {

namespace {

std::vector<DualQuaternion> powers(const DualQuaternion& base, int up_to) {
  std::vector<DualQuaternion> out(up_to + 1, dq_one());
  for (int k = 1; k <= up_to; ++k) out[k] = out[k - 1] * base;
  return out;
}

}  // namespace

MonomialExpansion monomial_split(const DualQuaternion& dq) {
  const DualQuaternion c = conj(dq);
  return {0.5 * (dq + c), 0.5 * (dq - c)};
}

DualQuaternion poly_eval_dq(const ValidPolynomial& p, const DualQuaternion& dq,
                            MulOrder order) {
  const MonomialExpansion mx = monomial_split(dq);
  const auto terms = p.terms();
  int max_m = 0, max_n = 0;
  for (const auto& t : terms) {
    max_m = std::max(max_m, t.m);
    max_n = std::max(max_n, t.n);
  }
  const auto sp = powers(mx.scalar_part, max_m);
  const auto vp = powers(mx.vector_part, max_n);
  DualQuaternion acc{};
  for (const auto& t : terms) {
    const DualQuaternion prod =
        order == MulOrder::scalar_first ? sp[t.m] * vp[t.n] : vp[t.n] * sp[t.m];
    acc = acc + t.r * prod;
  }
  return acc;
}

Quaternion nc_derivative(const ValidPolynomial& p, const Quaternion& A,
                         const Quaternion& B) {
  const Quaternion s{A.w, 0.0, 0.0, 0.0};
  const Quaternion v = pure(vec(A));
  const Quaternion sb{B.w, 0.0, 0.0, 0.0};
  const Quaternion vb = pure(vec(B));
  Quaternion acc{};
  for (const auto& t : p.terms()) {
    const int len = t.m + t.n;
    for (int pos = 0; pos < len; ++pos) {
      Quaternion prod{1.0, 0.0, 0.0, 0.0};
      for (int i = 0; i < len; ++i) {
        const bool scalar_slot = i < t.m;
        const Quaternion& factor =
            i == pos ? (scalar_slot ? sb : vb) : (scalar_slot ? s : v);
        prod = prod * factor;
      }
      acc = acc + t.r * prod;
    }
  }
  return acc;
}

Quaternion poly_eval_quaternion(const ValidPolynomial& p, const Quaternion& A) {
  return poly_eval_dq(p, from_real(A)).real;
}

DualQuaternion taylor_exp(const DualQuaternion& dq, int terms) {
  DualQuaternion acc = dq_one();
  DualQuaternion term = dq_one();
  for (int k = 1; k <= terms; ++k) {
    term = (1.0 / static_cast<double>(k)) * (term * dq);
    acc = acc + term;
  }
  return acc;
}

std::pair<std::vector<double>, std::vector<double>> kl_split_poly(
    std::span<const double> coeffs) {
  std::vector<double> k, l;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    (i % 2 == 0 ? k : l).push_back(coeffs[i]);
  }
  while (!k.empty() && k.back() == 0.0) k.pop_back();
  while (!l.empty() && l.back() == 0.0) l.pop_back();
  return {std::move(k), std::move(l)};
}

}  // namespace dqcalc::oracle
