#include "qcascade/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcascade/errors.hpp"

namespace qcascade {

double CascadeResiduals::max() const {
  return std::max({f_residual, g_residual, h_residual, transfer_mismatch});
}

CascadeRealization cascade_realize(const ModalForm& modal, double tol) {
  const std::size_t n = modal.order();
  const Eigen::Index m = modal.m;
  if (n == 0) throw InvalidArgument("cascade realization needs at least one pole");
  if (modal.Ht.size() != n || modal.Gt.size() != n) {
    throw InvalidArgument("modal form has inconsistent vector counts");
  }

  double largest_ht = 0.0;
  for (const CVector& h : modal.Ht) largest_ht = std::max(largest_ht, h.norm());
  for (std::size_t i = 0; i < n; ++i) {
    if (modal.Ht[i].size() != m) throw InvalidArgument("modal output vector has wrong length");
    if (modal.Ht[i].norm() <= 1e-12 * largest_ht) {
      throw InvalidArgument("modal output vector " + std::to_string(i + 1) +
                            " is numerically zero; system is not minimal");
    }
  }

  const auto& p = modal.poles;
  const auto idx = [](std::size_t i) { return static_cast<Eigen::Index>(i); };
  const CMatrix eye = CMatrix::Identity(m, m);

  CascadeRealization out;
  out.stages.resize(n);
  out.alphas.resize(n);
  out.T = CMatrix::Zero(idx(n), idx(n));
  CMatrix& t = out.T;

  for (std::size_t ii = n; ii-- > 0;) {
    CVector hbar;
    if (ii == n - 1) {
      hbar = modal.Ht[ii];
    } else {
      CMatrix bracket = eye;
      for (std::size_t j = ii + 1; j < n; ++j) {
        CRowVector row = CRowVector::Zero(m);
        for (std::size_t k = ii + 1; k <= j; ++k) {
          row += t(idx(j), idx(k)) * out.stages[k].H.adjoint();
        }
        bracket += (modal.Ht[j] / (p[j] - p[ii])) * row;
      }
      if (condition_number(bracket) > kBracketConditionLimit) {
        throw NumericalError("cascade bracket matrix at stage " + std::to_string(ii + 1) +
                             " is singular to tolerance");
      }
      hbar = solve_linear(bracket, modal.Ht[ii]);
    }

    const double decay = -2.0 * p[ii].real();
    const double alpha = decay > 0.0 ? hbar.squaredNorm() / decay : -1.0;
    if (!(alpha > tol)) {
      throw NumericalError("cascade scaling alpha at stage " + std::to_string(ii + 1) +
                           " is not positive; input is not lossless");
    }
    const double root = std::sqrt(alpha);
    out.alphas[ii] = alpha;
    out.stages[ii] = CavityStage{p[ii], hbar / root};
    t(idx(ii), idx(ii)) = 1.0 / root;

    const CVector& hi = out.stages[ii].H;
    for (std::size_t k = ii + 1; k < n; ++k) {
      Complex acc{0.0, 0.0};
      for (std::size_t j = ii + 1; j <= k; ++j) {
        acc += t(idx(k), idx(j)) * out.stages[j].H.dot(hi);
      }
      t(idx(k), idx(ii)) = acc / (p[ii] - p[k]);
    }
  }
  return out;
}

StateSpaceSystem cascade_state_space(const std::vector<CavityStage>& stages, Eigen::Index m) {
  const auto n = static_cast<Eigen::Index>(stages.size());
  StateSpaceSystem sys;
  sys.F = CMatrix::Zero(n, n);
  sys.G = CMatrix(n, m);
  sys.Hbar = CMatrix(m, n);
  sys.J = CMatrix::Identity(m, m);
  for (Eigen::Index i = 0; i < n; ++i) {
    const CVector& hi = stages[static_cast<std::size_t>(i)].H;
    if (hi.size() != m) throw InvalidArgument("cavity coupling vector has wrong length");
    sys.F(i, i) = stages[static_cast<std::size_t>(i)].p;
    for (Eigen::Index j = 0; j < i; ++j) {
      sys.F(i, j) = -hi.dot(stages[static_cast<std::size_t>(j)].H);
    }
    sys.G.row(i) = -hi.adjoint();
    sys.Hbar.col(i) = hi;
  }
  return sys;
}

StateSpaceSystem cascade_state_space(const CascadeRealization& casc) {
  if (casc.stages.empty()) throw InvalidArgument("cascade has no stages");
  return cascade_state_space(casc.stages, casc.stages.front().H.size());
}

CMatrix stage_transfer_at(const CavityStage& stage, Complex s) {
  const Complex gap = stage.p - s;
  if (std::abs(gap) <= 1e-14 * std::max(1.0, std::abs(stage.p))) {
    throw SingularMatrixError("cavity transfer evaluated at its pole");
  }
  const auto m = stage.H.size();
  return CMatrix::Identity(m, m) + (stage.H * stage.H.adjoint()) / gap;
}

CMatrix cascade_product_at(const std::vector<CavityStage>& stages, std::size_t first,
                           std::size_t last, Complex s, Eigen::Index m) {
  CMatrix acc = CMatrix::Identity(m, m);
  for (std::size_t i = first; i < last; ++i) acc = stage_transfer_at(stages[i], s) * acc;
  return acc;
}

CavityMirrorParams cavity_mirror_params(const CavityStage& stage, double tol) {
  const double hh = stage.H.squaredNorm();
  if (hh == 0.0) throw InvalidArgument("cavity coupling vector is zero");
  const double defect = std::abs(2.0 * stage.p.real() + hh);
  if (defect > tol * std::max(std::abs(stage.p), hh)) {
    throw InvalidArgument("cavity violates p + p^* = -H^dagger H (defect " +
                          std::to_string(defect) + ")");
  }
  CavityMirrorParams out;
  for (Eigen::Index i = 0; i < stage.H.size(); ++i) {
    out.kappas.push_back(std::norm(stage.H(i)));
    out.thetas.push_back(stage.H(i) == Complex{} ? 0.0 : principal_arg(stage.H(i)));
  }
  out.gamma = -2.0 * stage.p.real();
  out.delta = stage.p.imag();
  return out;
}

CavityStage stage_from_mirror_params(const CavityMirrorParams& params) {
  if (params.kappas.size() != params.thetas.size()) {
    throw InvalidArgument("mirror parameter lists differ in length");
  }
  CavityStage stage;
  stage.p = Complex(-0.5 * params.gamma, params.delta);
  stage.H.resize(static_cast<Eigen::Index>(params.kappas.size()));
  for (std::size_t i = 0; i < params.kappas.size(); ++i) {
    if (params.kappas[i] < 0.0) throw InvalidArgument("mirror coupling must be nonnegative");
    stage.H(static_cast<Eigen::Index>(i)) = std::polar(std::sqrt(params.kappas[i]), params.thetas[i]);
  }
  return stage;
}

CascadeResiduals verify_cascade(const ModalForm& modal, const CascadeRealization& casc) {
  return verify_cascade(modal, casc, FrequencyGrid::default_grid());
}

CascadeResiduals verify_cascade(const ModalForm& modal, const CascadeRealization& casc,
                                const FrequencyGrid& grid) {
  const std::size_t n = modal.order();
  if (casc.order() != n || casc.T.rows() != static_cast<Eigen::Index>(n) ||
      casc.T.cols() != static_cast<Eigen::Index>(n)) {
    throw InvalidArgument("modal form and cascade differ in order");
  }
  const Eigen::Index m = modal.m;
  const auto nn = static_cast<Eigen::Index>(n);
  const StateSpaceSystem sys = cascade_state_space(casc.stages, m);
  const CMatrix t_inv = solve_linear(casc.T, CMatrix::Identity(nn, nn));

  CMatrix f_modal = CMatrix::Zero(nn, nn);
  CMatrix g_modal(nn, m);
  CMatrix h_modal(m, nn);
  for (Eigen::Index i = 0; i < nn; ++i) {
    f_modal(i, i) = modal.poles[static_cast<std::size_t>(i)];
    g_modal.row(i) = modal.Gt[static_cast<std::size_t>(i)];
    h_modal.col(i) = modal.Ht[static_cast<std::size_t>(i)];
  }

  CascadeResiduals out;
  out.f_residual = spectral_norm(f_modal - casc.T * sys.F * t_inv);
  out.g_residual = spectral_norm(g_modal - casc.T * sys.G);
  out.h_residual = spectral_norm(h_modal - sys.Hbar * t_inv);
  for (double w : grid) {
    const Complex s{0.0, w};
    const double mismatch =
        spectral_norm(modal.reduced_transfer_at(s) - cascade_product_at(casc.stages, 0, n, s, m));
    if (mismatch > out.transfer_mismatch) {
      out.transfer_mismatch = mismatch;
      out.worst_omega = w;
    }
  }
  return out;
}

}  // namespace qcascade
