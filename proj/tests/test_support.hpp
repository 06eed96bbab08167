#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// code paths it is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qcascade/numerics.hpp"

namespace qcascade::testing {

inline CMatrix random_matrix(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = Complex(normal(rng), normal(rng));
  }
  return a;
}

// Random matrix shifted so every eigenvalue has real part <= -0.5.
inline CMatrix random_hurwitz(std::mt19937_64& rng, Eigen::Index n) {
  CMatrix a = random_matrix(rng, n, n);
  Eigen::ComplexEigenSolver<CMatrix> es(a, false);
  const double shift = es.eigenvalues().real().maxCoeff() + 0.5;
  return a - shift * CMatrix::Identity(n, n);
}

inline CMatrix random_hermitian_pd(std::mt19937_64& rng, Eigen::Index n) {
  const CMatrix b = random_matrix(rng, n, n);
  CMatrix x = b.adjoint() * b + 0.5 * CMatrix::Identity(n, n);
  return 0.5 * (x + x.adjoint());
}

// Product of Householder reflections I - 2 v v^dagger / (v^dagger v).
inline CMatrix random_unitary(std::mt19937_64& rng, Eigen::Index n, int reflections = 4) {
  CMatrix u = CMatrix::Identity(n, n);
  for (int k = 0; k < reflections; ++k) {
    const CVector v = random_matrix(rng, n, 1);
    u = (CMatrix::Identity(n, n) - 2.0 * v * v.adjoint() / v.squaredNorm()) * u;
  }
  return u;
}

// Kronecker-vectorized Lyapunov solve: (I (x) F + conj(F) (x) I) vec(X) = -vec(Q).
inline CMatrix lyapunov_kronecker(const CMatrix& f, const CMatrix& q) {
  const Eigen::Index n = f.rows();
  CMatrix big = CMatrix::Zero(n * n, n * n);
  const CMatrix eye = CMatrix::Identity(n, n);
  const CMatrix fc = f.conjugate();
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) {
      big.block(a * n, b * n, n, n) += eye(a, b) * f;
      big.block(a * n, b * n, n, n) += fc(a, b) * eye;
    }
  }
  CVector rhs(n * n);
  for (Eigen::Index j = 0; j < n; ++j) rhs.segment(j * n, n) = -q.col(j);
  const CVector x = big.fullPivLu().solve(rhs);
  CMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) out.col(j) = x.segment(j * n, n);
  return out;
}

// Elementary symmetric polynomials e_0..e_k of `p`.
inline std::vector<Complex> elementary_symmetric(const std::vector<Complex>& p) {
  std::vector<Complex> e(p.size() + 1, Complex{});
  e[0] = 1.0;
  for (const Complex& x : p) {
    for (std::size_t q = e.size() - 1; q >= 1; --q) e[q] += x * e[q - 1];
  }
  return e;
}

// omega * C computed from the literal alternating bracket
//   sum_{q=0}^{k-1} (-jw)^{k-1-q} e_q(p)
// times prod(-(p + p^*)) / prod(|p| |p - jw|).
inline double c_term_bracket(const std::vector<Complex>& p, double omega) {
  const std::size_t k = p.size();
  const std::vector<Complex> e = elementary_symmetric(p);
  const Complex mjw{0.0, -omega};
  Complex bracket{};
  for (std::size_t q = 0; q < k; ++q) {
    bracket += std::pow(mjw, static_cast<int>(k - 1 - q)) * e[q];
  }
  double weight = 1.0;
  for (const Complex& x : p) {
    weight *= -2.0 * x.real() / (std::abs(x) * std::abs(x - Complex(0.0, omega)));
  }
  return omega * std::abs(bracket) * weight;
}

// Random pole with Re p in [-10, -0.01] and Im p in [-10, 10].
inline Complex random_stable_pole(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(-10.0, -0.01);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  return {re(rng), im(rng)};
}

}  // namespace qcascade::testing
