#include "qcascade/bounds.hpp"

#include <cmath>
#include <string>

#include "qcascade/errors.hpp"

namespace qcascade {

namespace {

void require_valid(const std::vector<Complex>& poles, double omega) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) {
    throw InvalidArgument("bound frequency must be finite and nonnegative");
  }
  for (const Complex& p : poles) {
    if (!(p.real() < 0.0) || !std::isfinite(p.imag())) {
      throw InvalidArgument("bound poles must have negative real part");
    }
  }
}

// Running quantities for an ordered pole subset:
//   diff   = prod(p - jw) - prod(p)
//   plain  = prod(p)
//   weight = prod(-(p + p^*) / (|p| |p - jw|))
// Appending q uses diff' = (q - jw) diff - jw plain, which never subtracts
// the two large products from each other.
struct SubsetAccumulator {
  Complex diff{0.0, 0.0};
  Complex plain{1.0, 0.0};
  double weight = 1.0;

  SubsetAccumulator append(const Complex& q, double omega) const {
    const Complex jw{0.0, omega};
    SubsetAccumulator next;
    next.diff = (q - jw) * diff - jw * plain;
    next.plain = plain * q;
    next.weight = weight * (-2.0 * q.real()) / (std::abs(q) * std::abs(q - jw));
    return next;
  }
  double term() const { return std::abs(diff) * weight; }
};

// Sum of term() over subsets of tail[start..] extending `acc`, with exactly
// `remaining` more elements (or any count >= 1 when remaining < 0).
double enumerate(const std::vector<Complex>& tail, std::size_t start, const SubsetAccumulator& acc,
                 long remaining, double omega) {
  double sum = 0.0;
  for (std::size_t i = start; i < tail.size(); ++i) {
    if (remaining > 0 && tail.size() - i < static_cast<std::size_t>(remaining)) break;
    const SubsetAccumulator next = acc.append(tail[i], omega);
    if (remaining < 0) {
      sum += next.term() + enumerate(tail, i + 1, next, remaining, omega);
    } else if (remaining == 1) {
      sum += next.term();
    } else {
      sum += enumerate(tail, i + 1, next, remaining - 1, omega);
    }
  }
  return sum;
}

}  // namespace

double c_term(const std::vector<Complex>& poles, double omega) {
  require_valid(poles, omega);
  SubsetAccumulator acc;
  for (const Complex& p : poles) acc = acc.append(p, omega);
  return poles.empty() ? 0.0 : acc.term();
}

double bound_bk(const std::vector<Complex>& tail, std::size_t k, double omega) {
  require_valid(tail, omega);
  if (k < 1 || k > tail.size()) {
    throw InvalidArgument("bound order k=" + std::to_string(k) + " outside [1, " +
                          std::to_string(tail.size()) + "]");
  }
  return enumerate(tail, 0, SubsetAccumulator{}, static_cast<long>(k), omega);
}

double total_bound(const std::vector<Complex>& tail, double omega) {
  require_valid(tail, omega);
  if (tail.size() > kMaxEnumeratedTail) {
    throw InvalidArgument("tail of " + std::to_string(tail.size()) +
                          " poles is too long for exact bound enumeration");
  }
  return enumerate(tail, 0, SubsetAccumulator{}, -1, omega);
}

double b1_bound(const std::vector<Complex>& tail, double omega) {
  require_valid(tail, omega);
  const Complex jw{0.0, omega};
  double sum = 0.0;
  for (const Complex& p : tail) sum += -2.0 * p.real() / (std::abs(p) * std::abs(p - jw));
  return omega * sum;
}

double simple_bound(const std::vector<Complex>& tail, double omega) {
  require_valid(tail, omega);
  double sum = 0.0;
  for (const Complex& p : tail) sum += 1.0 / std::abs(p);
  return 2.0 * omega * sum;
}

ErrorBoundProfile profile(const StateSpaceSystem& original, const ReducedModel& reduced,
                          const FrequencyGrid& grid) {
  const std::vector<Complex>& tail = reduced.tail_poles;
  const bool enumerable = tail.size() <= kMaxEnumeratedTail;

  ErrorBoundProfile out;
  out.omegas = grid.omegas();
  if (enumerable) out.bound_total.emplace();
  for (double w : grid) {
    const Complex s{0.0, w};
    const CMatrix k = transfer_at(original, s);
    const CMatrix ka = transfer_at(reduced.system, s);
    out.norm_k.push_back(spectral_norm(k));
    out.norm_ka.push_back(spectral_norm(ka));
    out.ke_norm.push_back(spectral_norm(k - ka));
    if (enumerable) out.bound_total->push_back(total_bound(tail, w));
    out.bound_b1.push_back(b1_bound(tail, w));
    out.bound_simple.push_back(simple_bound(tail, w));
  }
  return out;
}

}  // namespace qcascade
