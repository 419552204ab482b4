#pragma once

#include <span>
#include <vector>

#include "dqcalc/valid_function.hpp"

namespace dqcalc {

// Real-coefficient polynomial in x and iy,
//
//   p(x + iy) = sum_{m,n} r_{m,n} x^m (iy)^n.
//
// Real coefficients are exactly the conjugate-symmetry criterion for
// polynomials, so every instance is a valid function by construction.
// Evaluation runs Horner in x for each fixed power of iy, in ascending n,
// so results are bit-stable across calls.
class ValidPolynomial {
 public:
  struct Term {
    int m = 0;
    int n = 0;
    double r = 0.0;
  };

  ValidPolynomial() = default;
  explicit ValidPolynomial(std::span<const Term> terms);

  static ValidPolynomial constant(double c);
  // sum_k c[k] z^k expanded binomially into the (x, iy) basis.
  static ValidPolynomial from_univariate(std::span<const double> coeffs);

  // Canonical term list: ascending (n, m), zero coefficients dropped.
  std::vector<Term> terms() const;
  bool empty() const { return groups_.empty(); }
  int degree() const;  // max m + n, -1 for the zero polynomial

  Complex operator()(Complex z) const;

  // Closed-form h (the odd-in-iy part divided by iy), a polynomial in x and
  // y^2; evaluated at (x, |y|).
  double h_value(Complex z) const;

  // Termwise partials: d/dx and -i d/dy. Both have real coefficients again.
  ValidPolynomial partial_x() const;
  ValidPolynomial partial_iy() const;

  // Coefficients of z -> conj(p(z)): odd iy-powers change sign.
  ValidPolynomial conjugated() const;

  friend ValidPolynomial operator+(const ValidPolynomial& a, const ValidPolynomial& b);
  friend ValidPolynomial operator*(const ValidPolynomial& a, const ValidPolynomial& b);
  friend ValidPolynomial operator*(double s, const ValidPolynomial& p);

 private:
  // Terms grouped by the iy-power n; xcoef is dense in the x-power m.
  struct Group {
    int n = 0;
    std::vector<double> xcoef;
  };
  std::vector<Group> groups_;  // ascending n

  void insert(int m, int n, double r);
  void prune();
};

// The two partials as a pair, in the order (f_x, f_iy).
std::pair<ValidPolynomial, ValidPolynomial> poly_partials(const ValidPolynomial& p);

}  // namespace dqcalc
