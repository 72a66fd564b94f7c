#include "stokes/sweep.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include "stokes/errors.hpp"
#include "stokes/phase_optimizer.hpp"
#include "stokes/version.hpp"

namespace stokes::sweep {

namespace {

constexpr double approximation_threshold = 0.1;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  // Avoid "-0" in byte-stable output.
  if (std::string_view(buf) == "-0") return "0";
  return buf;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw DomainError(message);
}

std::vector<Preset> make_presets() {
  const std::vector<CurveVariant> intensity_curves = {
      {"a", 0.25, 4.0}, {"b", 0.5, 4.0}, {"c", 1.0, 4.0}, {"d", 3.0, 4.0}};
  std::vector<CurveVariant> gamma_curves;
  const std::array<const char*, 6> labels = {"a", "b", "c", "d", "e", "f"};
  for (int k = 2; k <= 7; ++k) gamma_curves.push_back({labels[k - 2], 1.0, static_cast<double>(k)});

  std::vector<Preset> out;
  out.push_back({"fig1", SweepVariable::phi01, 2.0, 0.0, 0.0, 0.5, intensity_curves});
  out.push_back({"fig2", SweepVariable::phi01, 2.0, 0.0, 1.0, 0.5, intensity_curves});
  out.push_back({"fig3", SweepVariable::omega, 2.0, 0.0, 0.0, 0.5, intensity_curves});
  out.push_back({"fig4", SweepVariable::omega, 2.0, 0.0, 0.0, 0.5, gamma_curves});
  out.push_back({"fig5", SweepVariable::omega, 2.0, 0.0, 1.0, 0.5, gamma_curves});
  return out;
}

}  // namespace

const char* to_string(SweepVariable v) noexcept {
  return v == SweepVariable::phi01 ? "phi01" : "omega";
}

std::vector<double> SweepAxis::points() const {
  validate();
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  return out;
}

void SweepAxis::validate() const {
  require(std::isfinite(step) && step > 0.0, "sweep.step must be positive");
  require(std::isfinite(start) && std::isfinite(stop), "sweep.start/sweep.stop must be finite");
  require(start < stop, "sweep.start must be less than sweep.stop");
  if (variable == SweepVariable::phi01) require(start > 0.0, "sweep.start must be positive for a phi01 sweep");
}

void RunConfig::validate() const {
  sweep.validate();
  require(!curves.empty(), "curves: at least one curve is required");
  require(std::isfinite(omega), "sweep.omega must be finite");
  require(std::isfinite(omega0), "sweep.omega0 must be finite");
  require(std::isfinite(t), "sweep.t must be finite");
  for (const CurveSpec& c : curves) {
    const std::string prefix = "curve " + c.label + ": ";
    require(!c.label.empty(), "curve label must not be empty");
    try {
      c.medium.validate();
    } catch (const DomainError& e) {
      throw DomainError(prefix + e.what());
    }
    require(c.pulse1.n_bar0 >= 0.0 && std::isfinite(c.pulse1.n_bar0), prefix + "pulse1.n_bar0 must be finite and non-negative");
    require(c.pulse2.n_bar0 >= 0.0 && std::isfinite(c.pulse2.n_bar0), prefix + "pulse2.n_bar0 must be finite and non-negative");
    if (emit_kind == SpectrumKind::normalized)
      require(c.pulse1.photon_number(t) > 0.0, prefix + "pulse1.n_bar0 must be positive for normalized output");
    if (sweep.variable == SweepVariable::phi01) {
      require(c.medium.gamma1 > 0.0, prefix + "medium.gamma1 must be positive for a phi01 sweep");
      require(c.pulse1.n_bar0 > 0.0, prefix + "pulse1.n_bar0 must be positive for a phi01 sweep");
    }
  }
}

MediumParams scaled_medium(const CurveSpec& curve, double phi01) {
  MediumParams m = curve.medium;
  const double gamma1 = phi01 / (2.0 * curve.pulse1.n_bar0);
  m.gamma2 = gamma1 * (curve.medium.gamma2 / curve.medium.gamma1);
  m.gamma_xpm = gamma1 * (curve.medium.gamma_xpm / curve.medium.gamma1);
  m.gamma1 = gamma1;
  return m;
}

StudyResult run_study(const RunConfig& config) {
  config.validate();
  StudyResult result;
  result.axis = config.sweep.points();

  for (const CurveSpec& curve : config.curves) {
    CurveResult cr;
    cr.label = curve.label;
    const double n1 = curve.pulse1.photon_number(config.t);

    const auto record = [&](double s) {
      if (s < 0.0) cr.negative_spectrum = true;
      if (n1 > 0.0 && (s - 1.0) / n1 < -1.0) cr.below_normalized_bound = true;
      cr.values.push_back(config.emit_kind == SpectrumKind::raw ? s : (s - 1.0) / n1);
    };

    if (config.sweep.variable == SweepVariable::phi01) {
      for (double phi01 : result.axis) {
        const MediumParams m = scaled_medium(curve, phi01);
        if (!m.within_approximation(approximation_threshold)) cr.outside_approximation = true;
        const Optimum opt = optimal_phase(curve.pulse1, curve.pulse2, m, config.t, config.omega0);
        const auto [q1, q2] = with_phase_difference(curve.pulse1, curve.pulse2, opt.delta_phi_opt);
        cr.delta_phi_opt.push_back(opt.delta_phi_opt);
        record(spectrum_s2(q1, q2, m, config.t, config.omega));
      }
    } else {
      const MediumParams& m = curve.medium;
      cr.outside_approximation = !m.within_approximation(approximation_threshold);
      const Optimum opt = optimal_phase(curve.pulse1, curve.pulse2, m, config.t, config.omega0);
      const auto [q1, q2] = with_phase_difference(curve.pulse1, curve.pulse2, opt.delta_phi_opt);
      cr.delta_phi_opt.push_back(opt.delta_phi_opt);
      const SpectrumCurve raw = spectrum_curve(q1, q2, m, config.t, result.axis, SpectrumKind::raw);
      for (double s : raw.values) record(s);
    }
    result.curves.push_back(std::move(cr));
  }
  return result;
}

std::vector<std::string> StudyResult::diagnostics() const {
  std::vector<std::string> out;
  for (const CurveResult& c : curves) {
    if (c.outside_approximation)
      out.push_back("warning: curve " + c.label +
                    ": a nonlinear coefficient exceeds 0.1; the closed forms assume gamma << 1");
    if (c.negative_spectrum)
      out.push_back("note: curve " + c.label + ": raw spectral density S_S2 < 0 at some grid points");
    if (c.below_normalized_bound)
      out.push_back("note: curve " + c.label + ": normalized variance S* < -1 at some grid points");
  }
  return out;
}

void write_csv(std::ostream& out, const RunConfig& config, const StudyResult& result) {
  const bool normalized = config.emit_kind == SpectrumKind::normalized;
  out << "# " << tool_name << ' ' << version_string << '\n';
  out << "# study: " << config.name << '\n';
  out << "# quantity: " << (normalized ? "S*_S2 = (S_S2 - 1) / n1" : "S_S2") << '\n';
  out << "# sweep: variable=" << to_string(config.sweep.variable) << " start=" << num(config.sweep.start)
      << " stop=" << num(config.sweep.stop) << " step=" << num(config.sweep.step) << '\n';
  if (config.sweep.variable == SweepVariable::phi01) out << "# omega: " << num(config.omega) << '\n';
  out << "# omega0: " << num(config.omega0) << '\n';
  out << "# t: " << num(config.t) << '\n';
  for (std::size_t i = 0; i < config.curves.size(); ++i) {
    const CurveSpec& c = config.curves[i];
    out << "# curve " << c.label << ": tau_r=" << num(c.medium.tau_r) << " gamma1=" << num(c.medium.gamma1)
        << " gamma2=" << num(c.medium.gamma2) << " gamma_xpm=" << num(c.medium.gamma_xpm)
        << " n1=" << num(c.pulse1.n_bar0) << " n2=" << num(c.pulse2.n_bar0)
        << " envelope1=" << c.pulse1.envelope.describe() << " envelope2=" << c.pulse2.envelope.describe()
        << '\n';
    out << "# curve " << c.label << ": delta_phi_opt=";
    if (config.sweep.variable == SweepVariable::phi01)
      out << "per-point (gamma ratios held, gamma1 = phi01 / (2 n1))";
    else if (i < result.curves.size() && !result.curves[i].delta_phi_opt.empty())
      out << num(result.curves[i].delta_phi_opt.front());
    out << '\n';
  }

  out << to_string(config.sweep.variable);
  for (const CurveSpec& c : config.curves) out << ',' << c.label;
  out << '\n';
  for (std::size_t row = 0; row < result.axis.size(); ++row) {
    out << num(result.axis[row]);
    for (const CurveResult& c : result.curves) out << ',' << num(c.values[row]);
    out << '\n';
  }
}

std::string csv_text(const RunConfig& config, const StudyResult& result) {
  std::ostringstream os;
  write_csv(os, config, result);
  return os.str();
}

RunConfig Preset::to_run_config(std::optional<double> step) const {
  const double s = step.value_or(default_step);
  RunConfig cfg;
  cfg.name = name;
  cfg.sweep.variable = axis;
  cfg.sweep.step = s;
  if (axis == SweepVariable::phi01) {
    cfg.sweep.start = s;
    cfg.sweep.stop = phi01_stop;
  } else {
    cfg.sweep.start = 0.0;
    cfg.sweep.stop = omega_stop;
  }
  cfg.omega = omega;
  cfg.omega0 = omega0;
  cfg.emit_kind = SpectrumKind::normalized;

  const double gamma1 = phi01 / (2.0 * preset_n_bar0);
  for (const CurveVariant& v : curves) {
    CurveSpec c;
    c.label = v.label;
    c.medium.tau_r = 1.0;
    c.medium.gamma1 = gamma1;
    c.medium.gamma2 = v.gamma2_over_gamma1 * gamma1;
    c.medium.gamma_xpm = xpm_over_gamma1 * gamma1;
    c.pulse1.n_bar0 = preset_n_bar0;
    c.pulse2.n_bar0 = v.n2_over_n1 * preset_n_bar0;
    cfg.curves.push_back(std::move(c));
  }
  return cfg;
}

std::span<const Preset> presets() {
  static const std::vector<Preset> all = make_presets();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const Preset& p : presets())
    if (p.name == name) return p;
  throw DomainError("unknown preset '" + std::string(name) + "' (expected fig1..fig5)");
}

}  // namespace stokes::sweep
