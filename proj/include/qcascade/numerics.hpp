#pragma once

// Dense complex linear algebra kernel shared by every other module.
//
// All routines are pure functions of their inputs. Inputs must be finite;
// a NaN or Inf entry raises InvalidArgument before any work is done.

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qcascade {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using CRowVector = Eigen::RowVectorXcd;

inline constexpr Complex kJ{0.0, 1.0};

// Default relative residual tolerance for eig / solve_linear / solve_lyapunov.
inline constexpr double kResidualTol = 1e-9;

// solve_linear rejects A when sigma_min(A) < kSingularRatio * sigma_max(A).
inline constexpr double kSingularRatio = 1e-12;

struct EigenDecomposition {
  std::vector<Complex> values;
  // Column i is the unit-norm right eigenvector paired with values[i].
  CMatrix vectors;
  // 2-norm condition number of the eigenvector matrix (inf if singular).
  double condition_estimate = 0.0;
};

void require_finite(const CMatrix& a, const char* what);

EigenDecomposition eig(const CMatrix& a, double tol = kResidualTol);

// Solves A X = B. Throws SingularMatrixError when A is singular to
// kSingularRatio and NumericalError when the residual check fails.
CMatrix solve_linear(const CMatrix& a, const CMatrix& b, double tol = kResidualTol);

// Largest singular value; 0 for an empty matrix.
double spectral_norm(const CMatrix& a);

// Ratio of extreme singular values; +inf when the smallest is zero.
double condition_number(const CMatrix& a);

// Solves F X + X F^dagger + Q = 0 for Hurwitz F by diagonalising F.
CMatrix solve_lyapunov(const CMatrix& f, const CMatrix& q, double tol = kResidualTol);

// max Re(lambda) <= -1e-12 * ||F||. An empty matrix is Hurwitz.
bool is_hurwitz(const CMatrix& f);

// ||A - A^dagger||.
double hermitian_defect(const CMatrix& a);

// ||A^dagger A - I||.
double unitary_defect(const CMatrix& a);

// Smallest pairwise distance between entries of `values` (+inf for < 2 entries).
double min_pairwise_distance(const std::vector<Complex>& values);

// Phase in (-pi, pi].
double principal_arg(Complex z);

// True when min_{i!=j} |p_i - p_j| > rel_tol * max |p_i|.
bool eigenvalues_distinct(const std::vector<Complex>& values, double rel_tol = 1e-6);

}  // namespace qcascade
