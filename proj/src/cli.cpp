#include "qcascade/cli.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcascade/bounds.hpp"
#include "qcascade/cascade.hpp"
#include "qcascade/errors.hpp"
#include "qcascade/five_mode_example.hpp"
#include "qcascade/modal.hpp"
#include "qcascade/reduction.hpp"
#include "qcascade/sweep.hpp"
#include "qcascade/system_file.hpp"

namespace qcascade {

namespace {

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

std::string complex_str(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gj", z.real(), z.imag());
  return buf;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

SystemFile with_params(const StateSpaceSystem& sys, const RealizationParams& params) {
  SystemFile file;
  file.system = sys;
  file.theta = params.Theta;
  file.M = params.M;
  file.Lambda = params.Lambda;
  file.S = params.S;
  return file;
}

struct Pipeline {
  StateSpaceSystem system;
  ModalForm modal;
  CascadeRealization cascade;
};

Pipeline realize_file(const std::string& path) {
  Pipeline p;
  p.system = load_system(path).system;
  p.modal = to_modal(p.system);
  p.cascade = cascade_realize(p.modal);
  return p;
}

int cmd_generate(int n, int m, std::uint64_t seed, double scale, const std::string& out_path,
                 std::ostream& out) {
  const GeneratedSystem g = random_physically_realizable(n, m, seed, scale);
  save_system(out_path, with_params(g.system, g.params));
  out << "wrote " << n << "-mode, " << m << "-channel system to " << out_path << "\n";
  return kExitOk;
}

int cmd_example(const std::string& out_path, std::ostream& out) {
  const RealizationParams params = five_mode_example_params();
  save_system(out_path, with_params(assemble_from_physical(params), params));
  out << "wrote five-mode example system to " << out_path << "\n";
  return kExitOk;
}

int cmd_check(const std::string& in_path, double tol, std::ostream& out) {
  const StateSpaceSystem sys = load_system(in_path).system;
  out << "system: n=" << sys.n() << " m=" << sys.m() << "\n";

  const RealizabilityReport real = check_physical_realizability(sys, tol);
  out << "physically_realizable: " << yes_no(real.is_realizable)
      << " (hurwitz=" << yes_no(real.hurwitz) << ", lyapunov=" << sci(real.residual_lyapunov)
      << ", coupling=" << sci(real.residual_coupling) << ", unitary=" << sci(real.residual_unitary)
      << ", theta_min_eig=" << sci(real.theta_min_eigenvalue) << ")\n";

  const LosslessReport lbr = check_lossless_bounded_real(sys, FrequencyGrid::default_grid(), tol);
  out << "lossless_bounded_real: " << yes_no(lbr.is_lossless)
      << " (hurwitz=" << yes_no(lbr.hurwitz) << ", worst_deviation=" << sci(lbr.worst_deviation)
      << " at omega=" << sci(lbr.worst_omega) << ")\n";

  bool minimal = false;
  try {
    const MinimalityReport mr = check_minimality(sys, tol);
    minimal = mr.is_minimal;
    out << "minimal: " << yes_no(mr.is_minimal) << " (controllable=" << yes_no(mr.controllable)
        << ", observable=" << yes_no(mr.observable)
        << ", controllability_margin=" << sci(mr.worst_controllability)
        << ", observability_margin=" << sci(mr.worst_observability);
    if (mr.offending_eigenvalue) out << ", eigenvalue=" << complex_str(*mr.offending_eigenvalue);
    out << ")\n";
  } catch (const InvalidArgument& e) {
    out << "minimal: unsupported (" << e.what() << ")\n";
  }

  const bool ok = real.is_realizable && lbr.is_lossless && minimal;
  return ok ? kExitOk : kExitVerdictFailed;
}

int cmd_realize(const std::string& in_path, const std::string& out_path, std::ostream& out) {
  const Pipeline p = realize_file(in_path);
  const CascadeResiduals res = verify_cascade(p.modal, p.cascade);
  out << "stages: " << p.cascade.order() << "\n";
  out << "stage,pole,abs_pole,gamma,delta,kappa\n";
  for (std::size_t i = 0; i < p.cascade.order(); ++i) {
    const CavityStage& stage = p.cascade.stages[i];
    const CavityMirrorParams mp = cavity_mirror_params(stage);
    out << i + 1 << "," << complex_str(stage.p) << "," << sci(std::abs(stage.p)) << ","
        << sci(mp.gamma) << "," << sci(mp.delta) << ",";
    for (std::size_t c = 0; c < mp.kappas.size(); ++c) out << (c ? " " : "") << sci(mp.kappas[c]);
    out << "\n";
  }
  out << "residual_F: " << sci(res.f_residual) << "\n";
  out << "residual_G: " << sci(res.g_residual) << "\n";
  out << "residual_H: " << sci(res.h_residual) << "\n";
  out << "transfer_mismatch: " << sci(res.transfer_mismatch) << "\n";
  out << "suggested_order: " << suggest_order(p.modal.poles) << "\n";
  if (!out_path.empty()) {
    write_text_file(out_path, serialize_cascade(p.cascade, p.system.J, res));
    out << "wrote cascade to " << out_path << "\n";
  }
  return kExitOk;
}

void require_order(std::size_t r, const Pipeline& p) {
  if (r > p.cascade.order()) {
    throw InvalidArgument("--r " + std::to_string(r) + " exceeds system order " +
                          std::to_string(p.cascade.order()));
  }
}

int cmd_reduce(const std::string& in_path, std::size_t r, const std::string& out_path,
               std::ostream& out) {
  const Pipeline p = realize_file(in_path);
  require_order(r, p);
  const ReducedModel reduced = truncate(p.cascade, p.system.J, r);
  SystemFile file;
  file.system = reduced.system;
  save_system(out_path, file);
  out << "reduced order: " << r << " (from " << p.cascade.order() << ")\n";
  out << "dc_match_residual: " << sci(error_norm(p.system, reduced, 0.0)) << "\n";
  out << "ja_unitary_residual: " << sci(unitary_defect(reduced.Ja)) << "\n";
  out << "ja_route_mismatch: " << sci(reduced.ja_route_mismatch) << "\n";
  out << "wrote reduced system to " << out_path << "\n";
  return kExitOk;
}

int cmd_sweep(const std::string& in_path, const std::string& reduced_path,
              std::optional<std::size_t> r, double wmin, double wmax, int points,
              const std::string& out_path, std::ostream& out) {
  const Pipeline p = realize_file(in_path);
  ReducedModel reduced;
  if (r) {
    require_order(*r, p);
    reduced = truncate(p.cascade, p.system.J, *r);
  } else {
    const StateSpaceSystem red = load_system(reduced_path).system;
    if (red.m() != p.system.m()) throw InvalidArgument("reduced system has a different channel count");
    const auto order = static_cast<std::size_t>(red.n());
    require_order(order, p);
    reduced.r = order;
    reduced.system = red;
    reduced.Ja = red.J;
    reduced.tail_poles.assign(p.modal.poles.begin() + static_cast<std::ptrdiff_t>(order),
                              p.modal.poles.end());
  }
  const FrequencyGrid grid = FrequencyGrid::log_spaced(wmin, wmax, points, true);
  const std::string csv = sweep_csv(profile(p.system, reduced, grid));
  if (out_path.empty()) {
    out << csv;
  } else {
    write_text_file(out_path, csv);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cascade realization and low-frequency reduction of passive linear quantum systems",
               "qcascade"};
  app.require_subcommand(1);

  int gen_n = 0;
  int gen_m = 0;
  std::uint64_t gen_seed = 0;
  double gen_scale = 1.0;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a random physically realizable system");
  generate->add_option("--n", gen_n, "Number of modes")->required()->check(CLI::PositiveNumber);
  generate->add_option("--m", gen_m, "Number of channels")->required()->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen_seed, "Generator seed")->required();
  generate->add_option("--scale", gen_scale, "Coupling scale")->check(CLI::PositiveNumber);
  generate->add_option("--out", gen_out, "Output system file")->required();

  std::string ex_out;
  auto* example = app.add_subcommand("example", "Write the five-mode reference system");
  example->add_option("--out", ex_out, "Output system file")->required();

  std::string check_in;
  double check_tol = 1e-8;
  auto* check = app.add_subcommand("check", "Realizability, lossless-bounded-real and minimality");
  check->add_option("--in", check_in, "System file")->required();
  check->add_option("--tol", check_tol, "Verdict tolerance")->check(CLI::PositiveNumber);

  std::string realize_in;
  std::string realize_out;
  auto* realize = app.add_subcommand("realize", "Cascade cavity realization");
  realize->add_option("--in", realize_in, "System file")->required();
  realize->add_option("--out", realize_out, "Output cascade file");

  std::string reduce_in;
  std::size_t reduce_r = 0;
  std::string reduce_out;
  auto* reduce = app.add_subcommand("reduce", "Truncate the cascade to order r");
  reduce->add_option("--in", reduce_in, "System file")->required();
  reduce->add_option("--r", reduce_r, "Retained order")->required();
  reduce->add_option("--out", reduce_out, "Output reduced system file")->required();

  std::string sweep_in;
  std::string sweep_reduced;
  std::size_t sweep_r = 0;
  double wmin = 1e-3;
  double wmax = 1e3;
  int points = 400;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Frequency sweep of the error and its bounds (CSV)");
  sweep->add_option("--in", sweep_in, "Original system file")->required();
  auto* reduced_opt = sweep->add_option("--reduced", sweep_reduced, "Reduced system file");
  auto* r_opt = sweep->add_option("--r", sweep_r, "Retained order");
  reduced_opt->excludes(r_opt);
  sweep->add_option("--wmin", wmin, "Lowest nonzero frequency")->check(CLI::PositiveNumber);
  sweep->add_option("--wmax", wmax, "Highest frequency")->check(CLI::PositiveNumber);
  sweep->add_option("--points", points, "Log-spaced points")->check(CLI::Range(2, 1000000));
  sweep->add_option("--out", sweep_out, "Output CSV (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(gen_n, gen_m, gen_seed, gen_scale, gen_out, out);
    if (*example) return cmd_example(ex_out, out);
    if (*check) return cmd_check(check_in, check_tol, out);
    if (*realize) return cmd_realize(realize_in, realize_out, out);
    if (*reduce) return cmd_reduce(reduce_in, reduce_r, reduce_out, out);
    if (*sweep) {
      if (reduced_opt->count() == 0 && r_opt->count() == 0) {
        err << "sweep: one of --reduced or --r is required\n";
        return kExitUsage;
      }
      std::optional<std::size_t> r;
      if (r_opt->count() > 0) r = sweep_r;
      return cmd_sweep(sweep_in, sweep_reduced, r, wmin, wmax, points, sweep_out, out);
    }
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qcascade
