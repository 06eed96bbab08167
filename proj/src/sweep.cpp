#include "qcascade/sweep.hpp"

#include <cstdio>

namespace qcascade {

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string sweep_csv(const ErrorBoundProfile& profile) {
  std::string out = kSweepHeader;
  out += '\n';
  for (std::size_t i = 0; i < profile.omegas.size(); ++i) {
    out += fmt17(profile.omegas[i]);
    out += ',' + fmt17(profile.norm_k[i]);
    out += ',' + fmt17(profile.norm_ka[i]);
    out += ',' + fmt17(profile.ke_norm[i]);
    out += ',';
    if (profile.bound_total) out += fmt17((*profile.bound_total)[i]);
    out += ',' + fmt17(profile.bound_b1[i]);
    out += ',' + fmt17(profile.bound_simple[i]);
    out += '\n';
  }
  return out;
}

}  // namespace qcascade
