#pragma once

#include <vector>

#include "qcascade/numerics.hpp"
#include "qcascade/system_model.hpp"

namespace qcascade {

// Diagonal realization of Ktilde(s) = J^-1 K(s):
//   Ktilde(s) = I + sum_i Ht[i] Gt[i] / (s - poles[i]),
// with |poles[0]| <= |poles[1]| <= ... and K(s) = J Ktilde(s).
struct ModalForm {
  Eigen::Index m = 0;
  std::vector<Complex> poles;
  std::vector<CRowVector> Gt;  // length-m rows
  std::vector<CVector> Ht;     // length-m columns
  CMatrix J;
  // Condition number of the eigenvector matrix used for the transformation.
  double condition_estimate = 1.0;

  std::size_t order() const { return poles.size(); }
  // Ktilde(s), without the J factor.
  CMatrix reduced_transfer_at(Complex s) const;
  // J Ktilde(s).
  CMatrix transfer_at(Complex s) const;
};

// Requires F diagonalisable with distinct eigenvalues and J unitary (to `tol`).
// Ties in |p| are broken by increasing arg(p), then by eigensolver index.
ModalForm to_modal(const StateSpaceSystem& sys, double tol = 1e-9);

}  // namespace qcascade
