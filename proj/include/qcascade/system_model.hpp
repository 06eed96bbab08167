#pragma once

// Passive linear quantum systems in annihilation-operator form
//
//   da = F a dt + G du,   dy = Hbar a dt + J du,   K(s) = Hbar (sI - F)^-1 G + J,
//
// together with the physical-realizability, lossless-bounded-real and
// minimality tests that apply to them.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcascade/numerics.hpp"

namespace qcascade {

struct StateSpaceSystem {
  CMatrix F;     // n x n
  CMatrix G;     // n x m
  CMatrix Hbar;  // m x n
  CMatrix J;     // m x m

  Eigen::Index n() const { return F.rows(); }
  Eigen::Index m() const { return J.rows(); }

  // Throws InvalidArgument on inconsistent dimensions or non-finite entries.
  void validate() const;
};

// Hamiltonian, coupling, commutation and scattering matrices of an open
// quantum harmonic oscillator.
struct RealizationParams {
  CMatrix Theta;   // n x n, Hermitian positive definite
  CMatrix M;       // n x n, Hermitian
  CMatrix Lambda;  // m x n
  CMatrix S;       // m x m, unitary

  void validate(double tol = 1e-9) const;
};

struct RealizabilityReport {
  bool is_realizable = false;
  bool hurwitz = false;
  std::optional<CMatrix> theta;
  double residual_lyapunov = 0.0;  // ||F Theta + Theta F^dagger + G G^dagger||
  double residual_coupling = 0.0;  // ||G + Theta Hbar^dagger J||
  double residual_unitary = 0.0;   // ||J^dagger J - I||
  double theta_min_eigenvalue = 0.0;
};

struct LosslessReport {
  bool is_lossless = false;
  bool hurwitz = false;
  double worst_omega = 0.0;
  double worst_deviation = 0.0;  // max ||K(jw)^dagger K(jw) - I|| over the grid
};

struct MinimalityReport {
  bool is_minimal = false;
  bool controllable = false;
  bool observable = false;
  // Smallest ||a^dagger G|| / ||G|| and ||Hbar a|| / ||Hbar|| over eigenvectors.
  double worst_controllability = 0.0;
  double worst_observability = 0.0;
  std::optional<Complex> offending_eigenvalue;
};

// Strictly increasing, finite, nonnegative angular frequencies.
class FrequencyGrid {
 public:
  explicit FrequencyGrid(std::vector<double> omegas);

  // `points` log-spaced frequencies over [wmin, wmax], optionally preceded by 0.
  static FrequencyGrid log_spaced(double wmin, double wmax, int points, bool prepend_zero);
  // 0 followed by 400 log-spaced points over [1e-3, 1e3].
  static FrequencyGrid default_grid();

  const std::vector<double>& omegas() const { return omegas_; }
  std::size_t size() const { return omegas_.size(); }
  auto begin() const { return omegas_.begin(); }
  auto end() const { return omegas_.end(); }

 private:
  std::vector<double> omegas_;
};

StateSpaceSystem assemble_from_physical(const RealizationParams& params);

// Evaluates K(s). Throws SingularMatrixError when s is numerically at a pole.
CMatrix transfer_at(const StateSpaceSystem& sys, Complex s);

RealizabilityReport check_physical_realizability(const StateSpaceSystem& sys,
                                                 double tol = 1e-8);

// M = (i/2)(Theta^-1 F - F^dagger Theta^-1), Lambda = Hbar, S = J.
RealizationParams extract_physical_params(const StateSpaceSystem& sys, const CMatrix& theta);

LosslessReport check_lossless_bounded_real(const StateSpaceSystem& sys,
                                           const FrequencyGrid& grid, double tol = 1e-8);

// PBH test on the eigenvectors of F. Throws InvalidArgument if F is defective.
MinimalityReport check_minimality(const StateSpaceSystem& sys, double tol = 1e-8);

struct GeneratedSystem {
  StateSpaceSystem system;
  RealizationParams params;
};

// Random physically realizable, minimal system with distinct poles:
// M = A^dagger A + 0.1 I, Theta = B^dagger B + 0.1 I, Lambda = scale * N, S = I,
// where A, B, N have independent complex standard normal entries.
GeneratedSystem random_physically_realizable(int n, int m, std::uint64_t seed,
                                             double scale = 1.0);

}  // namespace qcascade
