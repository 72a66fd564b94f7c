#pragma once

// Parameter sweeps over phi_0,1 or Omega, the figure presets, and the CSV
// writer the CLI emits.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stokes/correlation_spectra.hpp"
#include "stokes/kerr_params.hpp"

namespace stokes::sweep {

enum class SweepVariable { phi01, omega };

const char* to_string(SweepVariable v) noexcept;

struct SweepAxis {
  SweepVariable variable = SweepVariable::omega;
  double start = 0.0;
  double stop = 5.0;
  double step = 0.05;

  // start + i * step for i = 0 .. floor((stop - start) / step), with a 1e-9 slack on the count.
  std::vector<double> points() const;
  void validate() const;
};

struct CurveSpec {
  std::string label;
  MediumParams medium;
  PulseParams pulse1;
  PulseParams pulse2;
};

struct RunConfig {
  std::string name = "custom";
  std::vector<CurveSpec> curves;
  SweepAxis sweep;
  double omega = 0.0;   // observation frequency of a phi01 sweep
  double omega0 = 0.0;  // frequency the phase difference is optimized for
  double t = 0.0;
  SpectrumKind emit_kind = SpectrumKind::normalized;
  std::string output_path;

  // Throws DomainError whose message starts with the offending field name.
  void validate() const;
};

// Medium at a given phi_0,1: gamma1 = phi01 / (2 n_bar0,1), gamma2 and
// gamma_xpm keep their ratios to gamma1.
MediumParams scaled_medium(const CurveSpec& curve, double phi01);

struct CurveResult {
  std::string label;
  std::vector<double> values;
  // One entry for an Omega sweep, one per point for a phi01 sweep.
  std::vector<double> delta_phi_opt;
  bool negative_spectrum = false;
  bool outside_approximation = false;
  bool below_normalized_bound = false;  // S* < -1 somewhere
};

struct StudyResult {
  std::vector<double> axis;
  std::vector<CurveResult> curves;

  std::vector<std::string> diagnostics() const;
};

StudyResult run_study(const RunConfig& config);

// Byte-stable: '%.12g' numbers, '\n' line endings, '#' header comments.
void write_csv(std::ostream& out, const RunConfig& config, const StudyResult& result);
std::string csv_text(const RunConfig& config, const StudyResult& result);

// ---- presets -------------------------------------------------------------

struct CurveVariant {
  std::string label;
  double n2_over_n1 = 1.0;
  double gamma2_over_gamma1 = 4.0;
};

struct Preset {
  std::string name;
  SweepVariable axis = SweepVariable::omega;
  double phi01 = 2.0;          // fixed phi_0,1 of an Omega sweep
  double omega = 0.0;          // fixed Omega of a phi01 sweep
  double omega0 = 0.0;
  double xpm_over_gamma1 = 0.5;
  std::vector<CurveVariant> curves;

  // Realized with n_bar0,1 = preset_n_bar0 and gamma1 = phi01 / (2 n_bar0,1).
  RunConfig to_run_config(std::optional<double> step = std::nullopt) const;
};

inline constexpr double preset_n_bar0 = 1e6;
inline constexpr double default_step = 0.05;
inline constexpr double phi01_stop = 4.0;
inline constexpr double omega_stop = 5.0;

std::span<const Preset> presets();
// Throws DomainError for unknown names.
const Preset& find_preset(std::string_view name);

}  // namespace stokes::sweep
