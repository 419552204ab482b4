#pragma once

#include <algorithm>
#include <cmath>

#include "dqcalc/algebra.hpp"

namespace dqtest {

inline double rel(double a, double b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}
inline double rel(const dqcalc::Quaternion& a, const dqcalc::Quaternion& b) {
  return dqcalc::norm(a - b) / (1.0 + std::max(dqcalc::norm(a), dqcalc::norm(b)));
}
inline double rel(const dqcalc::DualQuaternion& a, const dqcalc::DualQuaternion& b) {
  return dqcalc::norm(a - b) / (1.0 + std::max(dqcalc::norm(a), dqcalc::norm(b)));
}

inline constexpr dqcalc::Quaternion qone{1.0, 0.0, 0.0, 0.0};
inline constexpr dqcalc::Quaternion qi{0.0, 1.0, 0.0, 0.0};
inline constexpr dqcalc::Quaternion qj{0.0, 0.0, 1.0, 0.0};
inline constexpr dqcalc::Quaternion qk{0.0, 0.0, 0.0, 1.0};

inline constexpr dqcalc::Vector3 ex{1.0, 0.0, 0.0};
inline constexpr dqcalc::Vector3 ey{0.0, 1.0, 0.0};
inline constexpr dqcalc::Vector3 ez{0.0, 0.0, 1.0};

}  // namespace dqtest
