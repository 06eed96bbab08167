#pragma once

#include "qcascade/system_model.hpp"

namespace qcascade {

// Five-mode, two-channel reference system given to four decimals:
// Hermitian M > 0, Theta > 0, coupling Lambda, and S = I.
RealizationParams five_mode_example_params();

// Poles of the assembled F as reported alongside the four-decimal matrices,
// in increasing magnitude.
std::vector<Complex> five_mode_example_reported_poles();

}  // namespace qcascade
