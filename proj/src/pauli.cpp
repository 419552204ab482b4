#include "dqcalc/pauli.hpp"

#include <cmath>

#include "dqcalc/algebra.hpp"
#include "dqcalc/errors.hpp"

namespace dqcalc::pauli {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw ShapeMismatch("matrix sum: dimension mismatch");
  ComplexMatrix out(a.n_);
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.a_[i] + b.a_[i];
  return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw ShapeMismatch("matrix difference: dimension mismatch");
  ComplexMatrix out(a.n_);
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = a.a_[i] - b.a_[i];
  return out;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n_ != b.n_) throw ShapeMismatch("matrix product: dimension mismatch");
  const std::size_t n = a.n_;
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a.at(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
  ComplexMatrix out(a.n_);
  for (std::size_t i = 0; i < out.a_.size(); ++i) out.a_[i] = s * a.a_[i];
  return out;
}

double frobenius_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) acc += std::norm(m.at(i, j));
  return std::sqrt(acc);
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) out.at(i, j) = std::conj(m.at(j, i));
  return out;
}

Complex trace(const ComplexMatrix& m) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) acc += m.at(i, i);
  return acc;
}

ComplexMatrix sigma_x() {
  ComplexMatrix m(2);
  m.at(0, 1) = 1.0;
  m.at(1, 0) = 1.0;
  return m;
}

ComplexMatrix sigma_y() {
  ComplexMatrix m(2);
  m.at(0, 1) = Complex(0.0, -1.0);
  m.at(1, 0) = Complex(0.0, 1.0);
  return m;
}

ComplexMatrix sigma_z() {
  ComplexMatrix m(2);
  m.at(0, 0) = 1.0;
  m.at(1, 1) = -1.0;
  return m;
}

SeriesSplit split_series(std::span<const Complex> coeffs) {
  SeriesSplit out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    (i % 2 == 0 ? out.k : out.l).push_back(coeffs[i]);
  }
  while (!out.k.empty() && out.k.back() == Complex(0.0, 0.0)) out.k.pop_back();
  while (!out.l.empty() && out.l.back() == Complex(0.0, 0.0)) out.l.pop_back();
  return out;
}

ComplexMatrix horner_eval(std::span<const Complex> coeffs, const ComplexMatrix& m) {
  ComplexMatrix acc(m.dim());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc = acc * m + coeffs[i] * ComplexMatrix::identity(m.dim());
  }
  return acc;
}

ComplexMatrix apply_anticommuting_pair(std::span<const Complex> coeffs,
                                       const ComplexMatrix& A,
                                       const ComplexMatrix& B) {
  if (A.dim() != B.dim())
    throw ShapeMismatch("anticommuting pair: dimension mismatch");
  const double scale = frobenius_norm(A) * frobenius_norm(B);
  if (frobenius_norm(A * B + B * A) > tol::anticommuting * scale)
    throw NotAnticommuting("pair fails the anticommutation check");
  const SeriesSplit ss = split_series(coeffs);
  const ComplexMatrix m = A * A + B * B;
  return horner_eval(ss.k, m) + (A + B) * horner_eval(ss.l, m);
}

std::vector<long long> pauli_pascal_row(int n) {
  if (n < 0 || n > 32) throw InvalidParameter("pascal: n must lie in [0, 32]");
  // f = z^n splits into k = z^{n/2} (n even) or l = z^{(n-1)/2} (n odd); the
  // binomial expansion of (A^2 + B^2)^{floor(n/2)} is legal because squares
  // commute with everything in the pair.
  std::vector<long long> row(n + 1, 0);
  const int m = n / 2;
  long long binom = 1;  // C(m, j)
  for (int j = 0; j <= m; ++j) {
    row[2 * j] = binom;
    if (n % 2 == 1 && 2 * j + 1 <= n) row[2 * j + 1] = binom;
    binom = binom * (m - j) / (j + 1);
  }
  return row;
}

namespace {

// Solves a small Vandermonde system sum_k c_k u_i^k = rhs_i by Gaussian
// elimination with partial pivoting. Sizes stay <= 5.
std::vector<double> solve_vandermonde(const std::vector<double>& nodes,
                                      const std::vector<double>& rhs) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<double>> m(n, std::vector<double>(n + 1, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    double p = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      m[i][k] = p;
      p *= nodes[i];
    }
    m[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0.0) continue;
      const double factor = m[r][col] / m[col][col];
      for (std::size_t k = col; k <= n; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n] / m[i][i];
  return out;
}

}  // namespace

std::vector<long long> pascal_row_via_matrices(int n) {
  if (n < 0 || n > 8)
    throw InvalidParameter("pascal matrix cross-check: n must lie in [0, 8]");
  const ComplexMatrix sx = sigma_x();
  const ComplexMatrix sxy = sigma_x() * sigma_y();
  // Class polynomials: P_even(t) = sum_{j even} c_j t^j and
  // P_odd(t) = sum_{j odd} c_j t^j. For n even they sit on the I and
  // sigma_x sigma_y basis components of (sx + t sy)^n; for n odd on the
  // sigma_x and sigma_y components.
  const int even_cnt = n / 2 + 1;
  const int odd_cnt = (n + 1) / 2;
  const int samples = std::max(even_cnt, odd_cnt);
  std::vector<double> even_nodes, even_rhs, odd_nodes, odd_rhs;
  for (int idx = 0; idx < samples; ++idx) {
    const double t = idx + 1;
    const ComplexMatrix base = sx + Complex(t, 0.0) * sigma_y();
    ComplexMatrix m = ComplexMatrix::identity(2);
    for (int k = 0; k < n; ++k) m = m * base;
    const ComplexMatrix even_basis = n % 2 == 0 ? ComplexMatrix::identity(2) : sx;
    const ComplexMatrix odd_basis = n % 2 == 0 ? sxy : sigma_y();
    const double even_val = (trace(adjoint(even_basis) * m) / 2.0).real();
    const double odd_val = (trace(adjoint(odd_basis) * m) / 2.0).real();
    if (static_cast<int>(even_nodes.size()) < even_cnt) {
      even_nodes.push_back(t * t);
      even_rhs.push_back(even_val);
    }
    if (static_cast<int>(odd_nodes.size()) < odd_cnt) {
      odd_nodes.push_back(t * t);
      odd_rhs.push_back(odd_val / t);  // P_odd(t) = t * sum_k c_{2k+1} (t^2)^k
    }
  }
  std::vector<long long> row(n + 1, 0);
  const std::vector<double> even_c = solve_vandermonde(even_nodes, even_rhs);
  for (int k = 0; k < even_cnt; ++k) row[2 * k] = std::llround(even_c[k]);
  if (odd_cnt > 0) {
    const std::vector<double> odd_c = solve_vandermonde(odd_nodes, odd_rhs);
    for (int k = 0; k < odd_cnt; ++k) row[2 * k + 1] = std::llround(odd_c[k]);
  }
  return row;
}

}  // namespace dqcalc::pauli
