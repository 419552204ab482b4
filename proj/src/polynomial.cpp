#include "dqcalc/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "dqcalc/errors.hpp"

namespace dqcalc {

namespace {

double horner(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

}  // namespace

void ValidPolynomial::insert(int m, int n, double r) {
  if (m < 0 || n < 0) throw InvalidParameter("polynomial: negative exponent");
  auto it = std::lower_bound(groups_.begin(), groups_.end(), n,
                             [](const Group& g, int key) { return g.n < key; });
  if (it == groups_.end() || it->n != n) it = groups_.insert(it, Group{n, {}});
  if (it->xcoef.size() <= static_cast<std::size_t>(m)) it->xcoef.resize(m + 1, 0.0);
  it->xcoef[m] += r;
}

void ValidPolynomial::prune() {
  for (Group& g : groups_) {
    while (!g.xcoef.empty() && g.xcoef.back() == 0.0) g.xcoef.pop_back();
  }
  std::erase_if(groups_, [](const Group& g) { return g.xcoef.empty(); });
}

ValidPolynomial::ValidPolynomial(std::span<const Term> terms) {
  for (const Term& t : terms) insert(t.m, t.n, t.r);
  prune();
}

ValidPolynomial ValidPolynomial::constant(double c) {
  const Term t{0, 0, c};
  return ValidPolynomial(std::span<const Term>(&t, 1));
}

ValidPolynomial ValidPolynomial::from_univariate(std::span<const double> coeffs) {
  ValidPolynomial p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    double binom = 1.0;  // C(k, j), updated incrementally
    for (std::size_t j = 0; j <= k; ++j) {
      p.insert(static_cast<int>(k - j), static_cast<int>(j), coeffs[k] * binom);
      binom = binom * static_cast<double>(k - j) / static_cast<double>(j + 1);
    }
  }
  p.prune();
  return p;
}

std::vector<ValidPolynomial::Term> ValidPolynomial::terms() const {
  std::vector<Term> out;
  for (const Group& g : groups_) {
    for (std::size_t m = 0; m < g.xcoef.size(); ++m) {
      if (g.xcoef[m] != 0.0) out.push_back({static_cast<int>(m), g.n, g.xcoef[m]});
    }
  }
  return out;
}

int ValidPolynomial::degree() const {
  int deg = -1;
  for (const Group& g : groups_) {
    for (std::size_t m = 0; m < g.xcoef.size(); ++m) {
      if (g.xcoef[m] != 0.0) deg = std::max(deg, static_cast<int>(m) + g.n);
    }
  }
  return deg;
}

Complex ValidPolynomial::operator()(Complex z) const {
  const double x = z.real();
  const Complex iy(0.0, z.imag());
  Complex acc(0.0, 0.0);
  Complex power(1.0, 0.0);  // (iy)^n, advanced incrementally
  int cur = 0;
  for (const Group& g : groups_) {
    for (; cur < g.n; ++cur) power *= iy;
    acc += horner(g.xcoef, x) * power;
  }
  return acc;
}

double ValidPolynomial::h_value(Complex z) const {
  // Odd-n terms contribute r x^m (iy)^n = iy * r x^m (-1)^((n-1)/2) y^(n-1).
  const double x = z.real();
  const double y = std::abs(z.imag());
  const double y2 = y * y;
  double acc = 0.0;
  double ypow = 1.0;  // y^(n-1) for the current odd n
  int cur = 1;
  for (const Group& g : groups_) {
    if (g.n % 2 == 0) continue;
    for (; cur < g.n; cur += 2) ypow *= y2;
    const double sign = (((g.n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
    acc += sign * horner(g.xcoef, x) * ypow;
  }
  return acc;
}

ValidPolynomial ValidPolynomial::partial_x() const {
  ValidPolynomial out;
  for (const Group& g : groups_) {
    for (std::size_t m = 1; m < g.xcoef.size(); ++m) {
      if (g.xcoef[m] != 0.0)
        out.insert(static_cast<int>(m) - 1, g.n, static_cast<double>(m) * g.xcoef[m]);
    }
  }
  out.prune();
  return out;
}

ValidPolynomial ValidPolynomial::partial_iy() const {
  ValidPolynomial out;
  for (const Group& g : groups_) {
    if (g.n == 0) continue;
    for (std::size_t m = 0; m < g.xcoef.size(); ++m) {
      if (g.xcoef[m] != 0.0)
        out.insert(static_cast<int>(m), g.n - 1, static_cast<double>(g.n) * g.xcoef[m]);
    }
  }
  out.prune();
  return out;
}

ValidPolynomial ValidPolynomial::conjugated() const {
  ValidPolynomial out;
  for (const Group& g : groups_) {
    const double sign = (g.n % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t m = 0; m < g.xcoef.size(); ++m) {
      if (g.xcoef[m] != 0.0) out.insert(static_cast<int>(m), g.n, sign * g.xcoef[m]);
    }
  }
  out.prune();
  return out;
}

ValidPolynomial operator+(const ValidPolynomial& a, const ValidPolynomial& b) {
  ValidPolynomial out = a;
  for (const ValidPolynomial::Group& g : b.groups_) {
    for (std::size_t m = 0; m < g.xcoef.size(); ++m) {
      if (g.xcoef[m] != 0.0) out.insert(static_cast<int>(m), g.n, g.xcoef[m]);
    }
  }
  out.prune();
  return out;
}

ValidPolynomial operator*(const ValidPolynomial& a, const ValidPolynomial& b) {
  ValidPolynomial out;
  for (const ValidPolynomial::Group& ga : a.groups_) {
    for (std::size_t ma = 0; ma < ga.xcoef.size(); ++ma) {
      if (ga.xcoef[ma] == 0.0) continue;
      for (const ValidPolynomial::Group& gb : b.groups_) {
        for (std::size_t mb = 0; mb < gb.xcoef.size(); ++mb) {
          if (gb.xcoef[mb] == 0.0) continue;
          out.insert(static_cast<int>(ma + mb), ga.n + gb.n, ga.xcoef[ma] * gb.xcoef[mb]);
        }
      }
    }
  }
  out.prune();
  return out;
}

ValidPolynomial operator*(double s, const ValidPolynomial& p) {
  ValidPolynomial out;
  for (const ValidPolynomial::Group& g : p.groups_) {
    for (std::size_t m = 0; m < g.xcoef.size(); ++m) {
      if (g.xcoef[m] != 0.0) out.insert(static_cast<int>(m), g.n, s * g.xcoef[m]);
    }
  }
  out.prune();
  return out;
}

std::pair<ValidPolynomial, ValidPolynomial> poly_partials(const ValidPolynomial& p) {
  return {p.partial_x(), p.partial_iy()};
}

}  // namespace dqcalc
