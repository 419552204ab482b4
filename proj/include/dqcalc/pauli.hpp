#pragma once

#include <complex>
#include <span>
#include <vector>

namespace dqcalc::pauli {

using Complex = std::complex<double>;

// Small dense complex matrix; just enough ring structure for the
// anti-commuting split calculus (products, sums, Frobenius norm).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Complex& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Complex& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  std::size_t n_ = 0;
  std::vector<Complex> a_;
};

double frobenius_norm(const ComplexMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);

ComplexMatrix sigma_x();
ComplexMatrix sigma_y();
ComplexMatrix sigma_z();

// f(z) = k(z^2) + l(z^2) z: k holds the even coefficients, l the odd ones,
// so l(0) = f'(0).
struct SeriesSplit {
  std::vector<Complex> k;
  std::vector<Complex> l;
};

SeriesSplit split_series(std::span<const Complex> coeffs);

// Horner evaluation of a coefficient list at a matrix argument.
ComplexMatrix horner_eval(std::span<const Complex> coeffs, const ComplexMatrix& m);

// For anti-commuting A, B (AB = -BA):
//
//   f(A + B) = k(A^2 + B^2) + (A + B) l(A^2 + B^2).
//
// Throws ShapeMismatch on unequal dimensions and NotAnticommuting when
// ||AB + BA|| exceeds tol::anticommuting * ||A|| ||B||.
ComplexMatrix apply_anticommuting_pair(std::span<const Complex> coeffs,
                                       const ComplexMatrix& A,
                                       const ComplexMatrix& B);

// Coefficients of A^{n-j} B^j in (A + B)^n for an anti-commuting pair:
// binomial coefficients interleaved with zeros on even rows, duplicated on
// odd rows. n in [0, 32]; throws InvalidParameter otherwise.
std::vector<long long> pauli_pascal_row(int n);

// Independent cross-check for rows n <= 8: expands (sigma_x + t sigma_y)^n by
// plain matrix powers at integer scalings t and recovers the coefficients
// from the parity-class interpolation systems.
std::vector<long long> pascal_row_via_matrices(int n);

}  // namespace dqcalc::pauli
