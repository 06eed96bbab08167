#include "qcascade/reduction.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qcascade/errors.hpp"

namespace qcascade {

ReducedModel truncate(const CascadeRealization& casc, const CMatrix& J, std::size_t r) {
  const std::size_t n = casc.order();
  if (n == 0) throw InvalidArgument("cannot truncate an empty cascade");
  if (r > n) {
    throw InvalidArgument("truncation order " + std::to_string(r) + " exceeds system order " +
                          std::to_string(n));
  }
  const Eigen::Index m = casc.stages.front().H.size();
  if (J.rows() != m || J.cols() != m) throw InvalidArgument("J has wrong dimensions");
  require_finite(J, "J");
  if (unitary_defect(J) > 1e-9) throw InvalidArgument("J is not unitary");

  const std::vector<CavityStage> head(casc.stages.begin(),
                                      casc.stages.begin() + static_cast<std::ptrdiff_t>(r));
  const std::vector<CavityStage> tail(casc.stages.begin() + static_cast<std::ptrdiff_t>(r),
                                      casc.stages.end());

  // Route 1: DC product of the discarded stages.
  const CMatrix ja_product = J * cascade_product_at(tail, 0, tail.size(), Complex{}, m);

  // Route 2: J (I - H_b F_b^-1 G_b) from the tail block realization.
  CMatrix ja_block = J;
  if (!tail.empty()) {
    const StateSpaceSystem b = cascade_state_space(tail, m);
    ja_block = J * (CMatrix::Identity(m, m) - b.Hbar * solve_linear(b.F, b.G));
  }

  ReducedModel out;
  out.r = r;
  out.Ja = ja_product;
  out.ja_route_mismatch = spectral_norm(ja_product - ja_block);
  if (out.ja_route_mismatch > kJaRouteLimit) {
    throw NumericalError("the two J_a computations disagree by " +
                         std::to_string(out.ja_route_mismatch));
  }
  for (const CavityStage& s : tail) out.tail_poles.push_back(s.p);
  out.kept_stages = head;

  StateSpaceSystem head_sys = cascade_state_space(head, m);
  out.system.F = std::move(head_sys.F);
  out.system.G = std::move(head_sys.G);
  out.system.Hbar = out.Ja * head_sys.Hbar;
  out.system.J = out.Ja;
  return out;
}

double error_norm(const StateSpaceSystem& original, const ReducedModel& reduced, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw InvalidArgument("error_norm needs a finite nonnegative frequency");
  }
  const Complex s{0.0, omega};
  return spectral_norm(transfer_at(original, s) - transfer_at(reduced.system, s));
}

std::size_t suggest_order(const std::vector<Complex>& ordered_poles) {
  const std::size_t n = ordered_poles.size();
  if (n < 2) return n;
  std::size_t best = n;
  double best_ratio = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double lo = std::abs(ordered_poles[i]);
    const double hi = std::abs(ordered_poles[i + 1]);
    const double ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best = i + 1;
    }
  }
  return best;
}

}  // namespace qcascade
