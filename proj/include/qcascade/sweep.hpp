#pragma once

#include <string>

#include "qcascade/bounds.hpp"

namespace qcascade {

inline constexpr const char* kSweepHeader =
    "omega,norm_K,norm_Ka,norm_Ke,bound_total,bound_b1,bound_simple";

// One row per grid frequency in ascending order, 17 significant digits.
// bound_total is left empty when the profile does not carry it.
std::string sweep_csv(const ErrorBoundProfile& profile);

}  // namespace qcascade
