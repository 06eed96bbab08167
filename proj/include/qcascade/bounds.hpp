#pragma once

// Frequency-dependent bounds on ||K_e(jw)|| = ||K(jw) - K_a(jw)|| for the
// truncated cascade, in terms of the discarded poles only.

#include <optional>
#include <vector>

#include "qcascade/numerics.hpp"
#include "qcascade/reduction.hpp"
#include "qcascade/system_model.hpp"

namespace qcascade {

// Largest tail for which total_bound enumerates every subset.
inline constexpr std::size_t kMaxEnumeratedTail = 20;

// w * C(w) for the pole subset `poles`, evaluated as
//   |prod(p - jw) - prod(p)| * prod(-(p + p^*)) / prod(|p| |p - jw|).
double c_term(const std::vector<Complex>& poles, double omega);

// B_k(w): sum of c_term over all k-subsets of `tail`.
double bound_bk(const std::vector<Complex>& tail, std::size_t k, double omega);

// sum_{k=1}^{|tail|} B_k(w). Throws InvalidArgument when |tail| > kMaxEnumeratedTail.
double total_bound(const std::vector<Complex>& tail, double omega);

// B_1(w) = w sum -(p + p^*) / (|p| |p - jw|).
double b1_bound(const std::vector<Complex>& tail, double omega);

// 2 w sum 1/|p|.
double simple_bound(const std::vector<Complex>& tail, double omega);

struct ErrorBoundProfile {
  std::vector<double> omegas;
  std::vector<double> norm_k;
  std::vector<double> norm_ka;
  std::vector<double> ke_norm;
  // Absent when the tail is too long for exact enumeration.
  std::optional<std::vector<double>> bound_total;
  std::vector<double> bound_b1;
  std::vector<double> bound_simple;
};

ErrorBoundProfile profile(const StateSpaceSystem& original, const ReducedModel& reduced,
                          const FrequencyGrid& grid);

}  // namespace qcascade
