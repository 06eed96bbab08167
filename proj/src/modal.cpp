#include "qcascade/modal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcascade/errors.hpp"

namespace qcascade {

namespace {

// Unit norm, first component above the noise floor made real positive.
void fix_gauge(CMatrix& vectors) {
  for (Eigen::Index c = 0; c < vectors.cols(); ++c) {
    auto col = vectors.col(c);
    col /= col.norm();
    const double floor = 1e-10;
    for (Eigen::Index r = 0; r < col.size(); ++r) {
      if (std::abs(col(r)) > floor) {
        col *= std::conj(col(r)) / std::abs(col(r));
        col(r) = Complex(std::abs(col(r)), 0.0);
        break;
      }
    }
  }
}

}  // namespace

CMatrix ModalForm::reduced_transfer_at(Complex s) const {
  CMatrix k = CMatrix::Identity(m, m);
  for (std::size_t i = 0; i < poles.size(); ++i) {
    const Complex gap = s - poles[i];
    if (std::abs(gap) <= 1e-14 * std::max(1.0, std::abs(poles[i]))) {
      throw SingularMatrixError("modal transfer evaluated at a pole");
    }
    k += (Ht[i] * Gt[i]) / gap;
  }
  return k;
}

CMatrix ModalForm::transfer_at(Complex s) const { return J * reduced_transfer_at(s); }

ModalForm to_modal(const StateSpaceSystem& sys, double tol) {
  sys.validate();
  if (unitary_defect(sys.J) > tol) throw InvalidArgument("feedthrough J is not unitary");

  EigenDecomposition ed = eig(sys.F);
  if (!eigenvalues_distinct(ed.values)) {
    throw InvalidArgument("F has repeated eigenvalues; modal form requires distinct poles");
  }
  if (!std::isfinite(ed.condition_estimate) || ed.condition_estimate > 1e12) {
    throw InvalidArgument("F is defective; modal form unsupported");
  }
  fix_gauge(ed.vectors);

  const CMatrix h = solve_linear(sys.J, sys.Hbar);
  const CMatrix gt = solve_linear(ed.vectors, sys.G);
  const CMatrix ht = h * ed.vectors;

  std::vector<std::size_t> order(ed.values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(ed.values[a]);
    const double mb = std::abs(ed.values[b]);
    if (ma != mb) return ma < mb;
    return principal_arg(ed.values[a]) < principal_arg(ed.values[b]);
  });

  ModalForm out;
  out.m = sys.m();
  out.J = sys.J;
  out.condition_estimate = ed.condition_estimate;
  for (std::size_t idx : order) {
    const auto e = static_cast<Eigen::Index>(idx);
    out.poles.push_back(ed.values[idx]);
    out.Gt.emplace_back(gt.row(e));
    out.Ht.emplace_back(ht.col(e));
  }
  return out;
}

}  // namespace qcascade
