#include "qcascade/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include "qcascade/errors.hpp"

namespace qcascade {

namespace {

void require_square(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw InvalidArgument(std::string(what) + " must be square, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
}

Eigen::VectorXd singular_values(const CMatrix& a) {
  if (a.size() == 0) return Eigen::VectorXd();
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues();
}

}  // namespace

void require_finite(const CMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw InvalidArgument(std::string(what) + " contains a non-finite entry");
  }
}

double spectral_norm(const CMatrix& a) {
  require_finite(a, "spectral_norm input");
  const Eigen::VectorXd s = singular_values(a);
  return s.size() == 0 ? 0.0 : s(0);
}

double condition_number(const CMatrix& a) {
  const Eigen::VectorXd s = singular_values(a);
  if (s.size() == 0) return 1.0;
  const double smin = s(s.size() - 1);
  if (smin == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

EigenDecomposition eig(const CMatrix& a, double tol) {
  require_square(a, "eig input");
  require_finite(a, "eig input");
  EigenDecomposition out;
  const Eigen::Index n = a.rows();
  if (n == 0) {
    out.vectors = CMatrix(0, 0);
    out.condition_estimate = 1.0;
    return out;
  }

  Eigen::ComplexEigenSolver<CMatrix> solver(a, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition failed to converge");
  }
  out.vectors = solver.eigenvectors();
  out.values.resize(static_cast<std::size_t>(n));
  const double a_norm = spectral_norm(a);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    const double len = out.vectors.col(i).norm();
    if (len == 0.0) throw NumericalError("eigensolver returned a zero eigenvector");
    out.vectors.col(i) /= len;
    const double residual =
        (a * out.vectors.col(i) - solver.eigenvalues()(i) * out.vectors.col(i)).norm();
    if (residual > tol * a_norm) {
      throw NumericalError("eigenpair residual " + std::to_string(residual) +
                           " exceeds tolerance; input is ill-conditioned");
    }
  }
  out.condition_estimate = condition_number(out.vectors);
  return out;
}

CMatrix solve_linear(const CMatrix& a, const CMatrix& b, double tol) {
  require_square(a, "solve_linear matrix");
  if (b.rows() != a.rows()) {
    throw InvalidArgument("solve_linear right-hand side has " + std::to_string(b.rows()) +
                          " rows, expected " + std::to_string(a.rows()));
  }
  require_finite(a, "solve_linear matrix");
  require_finite(b, "solve_linear right-hand side");
  if (a.rows() == 0) return CMatrix(0, b.cols());

  const Eigen::VectorXd s = singular_values(a);
  const double smax = s(0);
  const double smin = s(s.size() - 1);
  if (smax == 0.0 || smin < kSingularRatio * smax) {
    throw SingularMatrixError("matrix is singular to tolerance (sigma_min/sigma_max = " +
                              std::to_string(smax == 0.0 ? 0.0 : smin / smax) + ")");
  }

  CMatrix x = a.partialPivLu().solve(b);
  const double residual = spectral_norm(a * x - b);
  if (residual > tol * smax * spectral_norm(x)) {
    throw NumericalError("linear solve residual " + std::to_string(residual) +
                         " exceeds tolerance");
  }
  return x;
}

bool is_hurwitz(const CMatrix& f) {
  require_square(f, "Hurwitz test matrix");
  require_finite(f, "Hurwitz test matrix");
  if (f.rows() == 0) return true;
  Eigen::ComplexEigenSolver<CMatrix> solver(f, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigenvalue computation failed to converge");
  }
  const double threshold = -1e-12 * spectral_norm(f);
  const double max_re = solver.eigenvalues().real().maxCoeff();
  return max_re < 0.0 && max_re <= threshold;
}

CMatrix solve_lyapunov(const CMatrix& f, const CMatrix& q, double tol) {
  require_square(f, "Lyapunov matrix F");
  require_square(q, "Lyapunov matrix Q");
  if (q.rows() != f.rows()) throw InvalidArgument("Lyapunov F and Q dimensions differ");
  require_finite(f, "Lyapunov matrix F");
  require_finite(q, "Lyapunov matrix Q");
  const double q_norm = spectral_norm(q);
  if (hermitian_defect(q) > 1e-9 * std::max(1.0, q_norm)) {
    throw InvalidArgument("Lyapunov right-hand side is not Hermitian");
  }
  if (f.rows() == 0) return CMatrix(0, 0);
  if (!is_hurwitz(f)) {
    throw NumericalError("Lyapunov matrix F is not Hurwitz; solution is not unique");
  }

  // F = V L V^-1, X = V Y V^dagger  =>  L Y + Y L^* = -V^-1 Q V^-dagger.
  const EigenDecomposition ed = eig(f);
  const CMatrix& v = ed.vectors;
  const CMatrix w = solve_linear(v, q);
  const CMatrix q_modal = solve_linear(v, w.adjoint()).adjoint();
  const Eigen::Index n = f.rows();
  CMatrix y(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex denom = ed.values[static_cast<std::size_t>(i)] +
                            std::conj(ed.values[static_cast<std::size_t>(j)]);
      y(i, j) = -q_modal(i, j) / denom;
    }
  }
  CMatrix x = v * y * v.adjoint();
  x = (0.5 * (x + x.adjoint())).eval();

  const double residual = spectral_norm(f * x + x * f.adjoint() + q);
  if (residual > tol * (spectral_norm(f) * spectral_norm(x) + q_norm)) {
    throw NumericalError("Lyapunov residual " + std::to_string(residual) +
                         " exceeds tolerance");
  }
  return x;
}

double hermitian_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return spectral_norm(a - a.adjoint());
}

double unitary_defect(const CMatrix& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return spectral_norm(a.adjoint() * a - CMatrix::Identity(a.rows(), a.cols()));
}

double min_pairwise_distance(const std::vector<Complex>& values) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      best = std::min(best, std::abs(values[i] - values[j]));
    }
  }
  return best;
}

double principal_arg(Complex z) {
  const double a = std::arg(z);
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

bool eigenvalues_distinct(const std::vector<Complex>& values, double rel_tol) {
  if (values.size() < 2) return true;
  double scale = 0.0;
  for (const Complex& v : values) scale = std::max(scale, std::abs(v));
  return min_pairwise_distance(values) > rel_tol * scale;
}

}  // namespace qcascade
