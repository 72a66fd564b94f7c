#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "stokes/config.hpp"
#include "stokes/correlation_spectra.hpp"
#include "stokes/errors.hpp"
#include "stokes/phase_optimizer.hpp"
#include "stokes/sweep.hpp"
#include "stokes/version.hpp"

namespace stokes::cli {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Writes to `path`, or to `out` when path is empty or "-".
int emit(const std::string& path, const std::string& text, std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return ok;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open '" << path << "' for writing\n";
    return io;
  }
  file << text;
  file.flush();
  if (!file) {
    err << "error: failed writing '" << path << "'\n";
    return io;
  }
  return ok;
}

int run_study_to(const sweep::RunConfig& cfg, const std::string& path, std::ostream& out,
                 std::ostream& err) {
  const sweep::StudyResult result = sweep::run_study(cfg);
  for (const std::string& line : result.diagnostics()) err << line << '\n';
  return emit(path, sweep::csv_text(cfg, result), out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Polarization squeezing of two pulses in an electronic Kerr medium", tool_name};
  app.set_version_flag("--version", version_string);
  app.require_subcommand(1);

  std::string preset_name;
  double step = sweep::default_step;
  std::string preset_out;
  std::string emit_config;
  auto* preset = app.add_subcommand("preset", "Regenerate a figure's data as CSV");
  preset->add_option("name", preset_name, "fig1 .. fig5")->required();
  preset->add_option("--step", step, "Grid step of the sweep axis")->check(CLI::PositiveNumber);
  preset->add_option("--out", preset_out, "Output CSV path (default: stdout)");
  preset->add_option("--emit-config", emit_config, "Also write the equivalent run config");

  std::string config_path;
  std::string run_out;
  auto* run_cmd = app.add_subcommand("run", "Run a sweep described by a config file");
  run_cmd->add_option("--config", config_path, "INI config path")->required();
  run_cmd->add_option("--out", run_out, "Output CSV path (overrides output.path)");

  MediumParams medium;
  double n1 = 0.0;
  double n2 = 0.0;
  double omega = 0.0;
  double omega0 = 0.0;
  double t = 0.0;
  auto* point = app.add_subcommand("point", "Print S and S* at one frequency with the phase optimized at omega0");
  point->add_option("--gamma1", medium.gamma1)->required();
  point->add_option("--gamma2", medium.gamma2)->required();
  point->add_option("--gamma-xpm", medium.gamma_xpm)->required();
  point->add_option("--n1", n1)->required();
  point->add_option("--n2", n2)->required();
  point->add_option("--omega", omega)->required();
  point->add_option("--omega0", omega0)->required();
  point->add_option("--tau-r", medium.tau_r, "Relaxation time (default 1)");
  point->add_option("--t", t, "Slow time (default 0)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForVersion&) {
    out << version_string << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return usage;
  }

  try {
    if (*preset) {
      const sweep::RunConfig cfg = sweep::find_preset(preset_name).to_run_config(step);
      if (!emit_config.empty()) {
        std::ofstream f(emit_config, std::ios::binary);
        if (!f || !(f << to_config_text(cfg))) {
          err << "error: cannot write '" << emit_config << "'\n";
          return io;
        }
      }
      return run_study_to(cfg, preset_out, out, err);
    }

    if (*run_cmd) {
      std::ifstream in(config_path);
      if (!in) {
        err << "error: cannot open config '" << config_path << "'\n";
        return io;
      }
      const sweep::RunConfig cfg = parse_config(in, config_path);
      return run_study_to(cfg, run_out.empty() ? cfg.output_path : run_out, out, err);
    }

    medium.validate();
    if (!(n1 > 0.0)) throw DomainError("n1 must be positive");
    if (!(n2 >= 0.0)) throw DomainError("n2 must be non-negative");
    if (!medium.within_approximation())
      err << "warning: a nonlinear coefficient exceeds 0.1; the closed forms assume gamma << 1\n";
    PulseParams p1;
    p1.n_bar0 = n1;
    PulseParams p2;
    p2.n_bar0 = n2;
    const Optimum opt = optimal_phase(p1, p2, medium, t, omega0);
    const auto [q1, q2] = with_phase_difference(p1, p2, opt.delta_phi_opt);
    const double s = spectrum_s2(q1, q2, medium, t, omega);
    out << "delta_phi_opt=" << num(opt.delta_phi_opt) << " S=" << num(s)
        << " S*=" << num(normalized_variance(q1, q2, medium, t, omega)) << '\n';
    return ok;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace stokes::cli
