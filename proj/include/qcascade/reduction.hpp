#pragma once

#include <vector>

#include "qcascade/cascade.hpp"
#include "qcascade/system_model.hpp"

namespace qcascade {

// Order-r model obtained by keeping cascade stages 1..r and folding the
// remaining stages into their DC value:
//   K_a(s) = J_a Ktilde_r(s) ... Ktilde_1(s),  J_a = J Ktilde_n(0) ... Ktilde_{r+1}(0).
struct ReducedModel {
  std::size_t r = 0;
  StateSpaceSystem system;  // (Ftilde_a, Gtilde_a, J_a Htilde_a, J_a)
  CMatrix Ja;
  std::vector<Complex> tail_poles;  // p_{r+1}, ..., p_n
  std::vector<CavityStage> kept_stages;
  // ||J Ktilde_n(0)...Ktilde_{r+1}(0) - J (I - H_b F_b^-1 G_b)||.
  double ja_route_mismatch = 0.0;
};

// Hard limit on disagreement between the two J_a computations.
inline constexpr double kJaRouteLimit = 1e-8;

ReducedModel truncate(const CascadeRealization& casc, const CMatrix& J, std::size_t r);

// ||K(jw) - K_a(jw)||.
double error_norm(const StateSpaceSystem& original, const ReducedModel& reduced, double omega);

// Suggests r at the largest ratio |p_{i+1}| / |p_i| between consecutive
// magnitude-ordered poles. Returns n for fewer than two poles.
std::size_t suggest_order(const std::vector<Complex>& ordered_poles);

}  // namespace qcascade
