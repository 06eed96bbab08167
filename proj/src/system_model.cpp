#include "qcascade/system_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qcascade/errors.hpp"

namespace qcascade {

namespace {

std::string dims(const CMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_shape(const CMatrix& a, Eigen::Index rows, Eigen::Index cols, const char* name) {
  if (a.rows() != rows || a.cols() != cols) {
    throw InvalidArgument(std::string(name) + " has shape " + dims(a) + ", expected " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
}

double min_hermitian_eigenvalue(const CMatrix& a) {
  if (a.rows() == 0) return std::numeric_limits<double>::infinity();
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigenvalue computation failed");
  }
  return solver.eigenvalues().minCoeff();
}

// Smallest singular value of a (rows x k) matrix relative to the rank k it
// should have; 0 when rows < k.
double rank_margin(const CMatrix& a, Eigen::Index k) {
  if (a.rows() < k) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(a);
  return svd.singularValues()(k - 1);
}

CMatrix orthonormal_basis(const CMatrix& columns) {
  Eigen::HouseholderQR<CMatrix> qr(columns);
  return qr.householderQ() * CMatrix::Identity(columns.rows(), columns.cols());
}

// Groups indices whose eigenvalues lie within rel_tol * max|lambda| of each other.
std::vector<std::vector<Eigen::Index>> cluster_eigenvalues(const std::vector<Complex>& values,
                                                           double rel_tol) {
  const std::size_t n = values.size();
  double scale = 0.0;
  for (const Complex& v : values) scale = std::max(scale, std::abs(v));
  const double radius = rel_tol * scale;

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(values[i] - values[j]) <= radius) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<Eigen::Index>> clusters;
  std::vector<long> slot(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = find(i);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(clusters.size());
      clusters.emplace_back();
    }
    clusters[static_cast<std::size_t>(slot[root])].push_back(static_cast<Eigen::Index>(i));
  }
  return clusters;
}

}  // namespace

void StateSpaceSystem::validate() const {
  if (F.rows() != F.cols()) throw InvalidArgument("F must be square, got " + dims(F));
  if (J.rows() != J.cols()) throw InvalidArgument("J must be square, got " + dims(J));
  require_shape(G, n(), m(), "G");
  require_shape(Hbar, m(), n(), "Hbar");
  require_finite(F, "F");
  require_finite(G, "G");
  require_finite(Hbar, "Hbar");
  require_finite(J, "J");
}

void RealizationParams::validate(double tol) const {
  const Eigen::Index n = Theta.rows();
  const Eigen::Index m = S.rows();
  require_shape(Theta, n, n, "Theta");
  require_shape(M, n, n, "M");
  require_shape(Lambda, m, n, "Lambda");
  require_shape(S, m, m, "S");
  require_finite(Theta, "Theta");
  require_finite(M, "M");
  require_finite(Lambda, "Lambda");
  require_finite(S, "S");
  if (hermitian_defect(Theta) > tol * std::max(1.0, spectral_norm(Theta))) {
    throw InvalidArgument("Theta is not Hermitian");
  }
  if (hermitian_defect(M) > tol * std::max(1.0, spectral_norm(M))) {
    throw InvalidArgument("M is not Hermitian");
  }
  if (n > 0 && min_hermitian_eigenvalue(Theta) <= 0.0) {
    throw InvalidArgument("Theta is not positive definite");
  }
  if (unitary_defect(S) > tol) throw InvalidArgument("S is not unitary");
}

FrequencyGrid::FrequencyGrid(std::vector<double> omegas) : omegas_(std::move(omegas)) {
  for (std::size_t i = 0; i < omegas_.size(); ++i) {
    if (!std::isfinite(omegas_[i]) || omegas_[i] < 0.0) {
      throw InvalidArgument("frequency grid entries must be finite and nonnegative");
    }
    if (i > 0 && !(omegas_[i] > omegas_[i - 1])) {
      throw InvalidArgument("frequency grid must be strictly increasing");
    }
  }
}

FrequencyGrid FrequencyGrid::log_spaced(double wmin, double wmax, int points,
                                        bool prepend_zero) {
  if (!(wmin > 0.0) || !(wmax > wmin) || !std::isfinite(wmax)) {
    throw InvalidArgument("log-spaced grid needs 0 < wmin < wmax < inf");
  }
  if (points < 2) throw InvalidArgument("log-spaced grid needs at least 2 points");
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(points) + 1);
  if (prepend_zero) w.push_back(0.0);
  const double lo = std::log10(wmin);
  const double hi = std::log10(wmax);
  for (int k = 0; k < points; ++k) {
    w.push_back(std::pow(10.0, lo + (hi - lo) * k / (points - 1)));
  }
  w[prepend_zero ? 1 : 0] = wmin;
  w.back() = wmax;
  return FrequencyGrid(std::move(w));
}

FrequencyGrid FrequencyGrid::default_grid() { return log_spaced(1e-3, 1e3, 400, true); }

StateSpaceSystem assemble_from_physical(const RealizationParams& params) {
  params.validate();
  const CMatrix& theta = params.Theta;
  StateSpaceSystem sys;
  sys.F = -theta * (kJ * params.M + 0.5 * params.Lambda.adjoint() * params.Lambda);
  sys.G = -theta * params.Lambda.adjoint() * params.S;
  sys.Hbar = params.Lambda;
  sys.J = params.S;
  return sys;
}

CMatrix transfer_at(const StateSpaceSystem& sys, Complex s) {
  if (sys.n() == 0) return sys.J;
  const CMatrix resolvent_arg = s * CMatrix::Identity(sys.n(), sys.n()) - sys.F;
  return sys.Hbar * solve_linear(resolvent_arg, sys.G) + sys.J;
}

RealizabilityReport check_physical_realizability(const StateSpaceSystem& sys, double tol) {
  sys.validate();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  RealizabilityReport report;
  report.residual_unitary = unitary_defect(sys.J);

  if (sys.n() == 0) {
    report.hurwitz = true;
    report.theta = CMatrix(0, 0);
    report.theta_min_eigenvalue = kInf;
    report.is_realizable = report.residual_unitary <= tol;
    return report;
  }

  report.hurwitz = is_hurwitz(sys.F);
  if (!report.hurwitz) {
    report.residual_lyapunov = kInf;
    report.residual_coupling = kInf;
    report.theta_min_eigenvalue = -kInf;
    return report;
  }

  const CMatrix ggh = sys.G * sys.G.adjoint();
  CMatrix theta;
  try {
    theta = solve_lyapunov(sys.F, ggh);
  } catch (const NumericalError&) {
    report.residual_lyapunov = kInf;
    report.residual_coupling = kInf;
    report.theta_min_eigenvalue = -kInf;
    return report;
  }
  report.residual_lyapunov = spectral_norm(sys.F * theta + theta * sys.F.adjoint() + ggh);
  report.residual_coupling = spectral_norm(sys.G + theta * sys.Hbar.adjoint() * sys.J);
  report.theta_min_eigenvalue = min_hermitian_eigenvalue(theta);
  report.theta = std::move(theta);
  report.is_realizable = report.residual_lyapunov <= tol && report.residual_coupling <= tol &&
                         report.residual_unitary <= tol && report.theta_min_eigenvalue > 0.0;
  return report;
}

RealizationParams extract_physical_params(const StateSpaceSystem& sys, const CMatrix& theta) {
  sys.validate();
  require_shape(theta, sys.n(), sys.n(), "theta");
  require_finite(theta, "theta");
  if (hermitian_defect(theta) > 1e-9 * std::max(1.0, spectral_norm(theta))) {
    throw InvalidArgument("theta is not Hermitian");
  }
  if (sys.n() > 0 && min_hermitian_eigenvalue(theta) <= 0.0) {
    throw InvalidArgument("theta is not positive definite");
  }
  const CMatrix theta_inv_f = solve_linear(theta, sys.F);
  RealizationParams params;
  params.Theta = theta;
  params.M = (0.5 * kJ) * (theta_inv_f - theta_inv_f.adjoint());
  params.Lambda = sys.Hbar;
  params.S = sys.J;
  return params;
}

LosslessReport check_lossless_bounded_real(const StateSpaceSystem& sys,
                                           const FrequencyGrid& grid, double tol) {
  sys.validate();
  LosslessReport report;
  report.hurwitz = is_hurwitz(sys.F);
  const CMatrix eye = CMatrix::Identity(sys.m(), sys.m());
  for (double w : grid) {
    double deviation = std::numeric_limits<double>::infinity();
    try {
      const CMatrix k = transfer_at(sys, Complex(0.0, w));
      deviation = spectral_norm(k.adjoint() * k - eye);
    } catch (const NumericalError&) {
      // Pole on the imaginary axis: leave the deviation infinite.
    }
    if (deviation > report.worst_deviation) {
      report.worst_deviation = deviation;
      report.worst_omega = w;
    }
  }
  report.is_lossless = report.hurwitz && report.worst_deviation <= tol;
  return report;
}

MinimalityReport check_minimality(const StateSpaceSystem& sys, double tol) {
  sys.validate();
  MinimalityReport report;
  report.controllable = true;
  report.observable = true;
  report.worst_controllability = std::numeric_limits<double>::infinity();
  report.worst_observability = std::numeric_limits<double>::infinity();
  if (sys.n() == 0) {
    report.is_minimal = true;
    return report;
  }

  const EigenDecomposition ed = eig(sys.F);
  if (!std::isfinite(ed.condition_estimate) || ed.condition_estimate > 1e12) {
    throw InvalidArgument("F is defective (no complete eigenbasis); minimality test unsupported");
  }
  // Rows of V^-1 are the left eigenvectors of F.
  const CMatrix left = solve_linear(ed.vectors, CMatrix::Identity(sys.n(), sys.n()));
  const double g_norm = spectral_norm(sys.G);
  const double h_norm = spectral_norm(sys.Hbar);

  for (const auto& cluster : cluster_eigenvalues(ed.values, 1e-6)) {
    const Eigen::Index k = static_cast<Eigen::Index>(cluster.size());
    CMatrix right_cols(sys.n(), k);
    CMatrix left_cols(sys.n(), k);
    for (Eigen::Index c = 0; c < k; ++c) {
      right_cols.col(c) = ed.vectors.col(cluster[static_cast<std::size_t>(c)]);
      left_cols.col(c) = left.row(cluster[static_cast<std::size_t>(c)]).adjoint();
    }
    const CMatrix right_basis = orthonormal_basis(right_cols);
    const CMatrix left_basis = orthonormal_basis(left_cols);

    const double ctrb =
        g_norm == 0.0 ? 0.0 : rank_margin(sys.G.adjoint() * left_basis, k) / g_norm;
    const double obsv =
        h_norm == 0.0 ? 0.0 : rank_margin(sys.Hbar * right_basis, k) / h_norm;
    const Complex lambda = ed.values[static_cast<std::size_t>(cluster.front())];

    report.worst_controllability = std::min(report.worst_controllability, ctrb);
    report.worst_observability = std::min(report.worst_observability, obsv);
    const bool fails = ctrb <= tol || obsv <= tol;
    if (ctrb <= tol) report.controllable = false;
    if (obsv <= tol) report.observable = false;
    if (fails && !report.offending_eigenvalue) report.offending_eigenvalue = lambda;
  }
  report.is_minimal = report.controllable && report.observable;
  return report;
}

GeneratedSystem random_physically_realizable(int n, int m, std::uint64_t seed, double scale) {
  if (n < 1 || m < 1) throw InvalidArgument("random system needs n >= 1 and m >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InvalidArgument("random system scale must be positive and finite");
  }
  constexpr double kShift = 0.1;
  constexpr int kAttempts = 16;

  std::mt19937_64 engine(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  auto complex_normal = [&](Eigen::Index rows, Eigen::Index cols) {
    CMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
      for (Eigen::Index j = 0; j < cols; ++j) {
        const double re = normal(engine);
        const double im = normal(engine);
        out(i, j) = Complex(re, im) / std::sqrt(2.0);
      }
    }
    return out;
  };
  const CMatrix eye_n = CMatrix::Identity(n, n);

  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    const CMatrix a = complex_normal(n, n);
    const CMatrix b = complex_normal(n, n);
    GeneratedSystem out;
    out.params.M = a.adjoint() * a + kShift * eye_n;
    out.params.Theta = b.adjoint() * b + kShift * eye_n;
    out.params.Lambda = scale * complex_normal(m, n);
    out.params.S = CMatrix::Identity(m, m);
    // Products of the form A^dagger A are Hermitian only up to rounding.
    out.params.M = (0.5 * (out.params.M + out.params.M.adjoint())).eval();
    out.params.Theta = (0.5 * (out.params.Theta + out.params.Theta.adjoint())).eval();
    out.system = assemble_from_physical(out.params);

    try {
      if (!eigenvalues_distinct(eig(out.system.F).values)) continue;
      if (!check_physical_realizability(out.system).is_realizable) continue;
      if (!check_minimality(out.system).is_minimal) continue;
    } catch (const Error&) {
      continue;
    }
    return out;
  }
  throw NumericalError("could not generate a minimal realizable system with distinct poles in " +
                       std::to_string(kAttempts) + " attempts");
}

}  // namespace qcascade
