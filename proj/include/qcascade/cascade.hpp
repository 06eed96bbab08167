#pragma once

// Cascade realization of a lossless transfer function as a chain of
// single-pole generalized m-mirror cavities,
//
//   K(s) = J Ktilde_n(s) ... Ktilde_1(s),   Ktilde_i(s) = I + H_i H_i^dagger / (p_i - s).

#include <vector>

#include "qcascade/modal.hpp"
#include "qcascade/numerics.hpp"
#include "qcascade/system_model.hpp"

namespace qcascade {

// One cavity: da = p a dt - H^dagger du, dy = H a dt + du, with p + p^* = -H^dagger H.
struct CavityStage {
  Complex p;
  CVector H;
};

// Polar description of a cavity: h_i = sqrt(kappa_i) e^{j theta_i}, p = -gamma/2 + j delta.
struct CavityMirrorParams {
  std::vector<double> kappas;
  std::vector<double> thetas;  // in (-pi, pi]
  double gamma = 0.0;
  double delta = 0.0;
};

struct CascadeRealization {
  std::vector<CavityStage> stages;  // stage i carries modal pole i
  // Lower triangular, t(i,i) = 1/sqrt(alpha_i); maps cascade to modal coordinates.
  CMatrix T;
  std::vector<double> alphas;

  std::size_t order() const { return stages.size(); }
};

struct CascadeResiduals {
  double f_residual = 0.0;  // ||Ftilde - T F T^-1||
  double g_residual = 0.0;  // ||Gtilde - T G||
  double h_residual = 0.0;  // ||Htilde - H T^-1||
  double transfer_mismatch = 0.0;
  double worst_omega = 0.0;

  double max() const;
};

// Thresholds used by cascade_realize.
inline constexpr double kBracketConditionLimit = 1e10;

CascadeRealization cascade_realize(const ModalForm& modal, double tol = 1e-12);

// (F, G, H, I) of the cascade: F lower triangular with F(i,i) = p_i,
// F(i,j) = -H_i^dagger H_j for i > j; G = -[H_1^dagger; ...]; H = [H_1 ... H_n].
StateSpaceSystem cascade_state_space(const std::vector<CavityStage>& stages, Eigen::Index m);
StateSpaceSystem cascade_state_space(const CascadeRealization& casc);

CMatrix stage_transfer_at(const CavityStage& stage, Complex s);

// Ktilde_last(s) ... Ktilde_first(s) over stages[first, last).
CMatrix cascade_product_at(const std::vector<CavityStage>& stages, std::size_t first,
                           std::size_t last, Complex s, Eigen::Index m);

CavityMirrorParams cavity_mirror_params(const CavityStage& stage, double tol = 1e-9);
CavityStage stage_from_mirror_params(const CavityMirrorParams& params);

// Checks Ftilde = T F T^-1, Gtilde = T G, Htilde = H T^-1 and the transfer
// function match over `grid` (default grid when omitted).
CascadeResiduals verify_cascade(const ModalForm& modal, const CascadeRealization& casc);
CascadeResiduals verify_cascade(const ModalForm& modal, const CascadeRealization& casc,
                                const FrequencyGrid& grid);

}  // namespace qcascade
