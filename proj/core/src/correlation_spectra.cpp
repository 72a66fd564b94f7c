#include "stokes/correlation_spectra.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "stokes/errors.hpp"

namespace stokes {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double component_phase(const SpectralCoefficients& c, StokesComponent which) noexcept {
  return which == StokesComponent::s2 ? c.x : c.x + std::numbers::pi / 2.0;
}

double spectrum_of(const PulseParams& p1, const PulseParams& p2, const MediumParams& m, double t,
                   double omega_reduced, StokesComponent which) {
  const SpectralCoefficients c = spectral_coefficients(p1, p2, m, t);
  return spectrum_from_phase(c.a, c.b, component_phase(c, which), lorentzian(omega_reduced));
}

CorrelationSample correlation_of(const PulseParams& p1, const PulseParams& p2,
                                 const MediumParams& m, double t, StokesComponent which) {
  m.validate();
  const CorrelationWeights w = correlation_weights(spectral_coefficients(p1, p2, m, t), which);
  const double tau_r = m.tau_r;
  CorrelationSample sample;
  sample.delta_weight = 1.0;
  sample.tau_r = tau_r;
  sample.weights = w;
  sample.smooth = [w, tau_r](double tau) {
    return w.h_weight * response_h(tau, tau_r) + w.g_weight * correlator_g(tau, tau_r);
  };
  return sample;
}

}  // namespace

SpectralCoefficients spectral_coefficients(const PulseParams& p1, const PulseParams& p2,
                                           const MediumParams& m, double t) {
  const double n1 = p1.photon_number(t);
  const double n2 = p2.photon_number(t);
  const DerivedPhases d1 = derived_phases(p1, m, Pulse::first, t);
  const DerivedPhases d2 = derived_phases(p2, m, Pulse::second, t);

  SpectralCoefficients c;
  c.a = n1 * d2.phi - n2 * d1.phi;
  c.b = n1 * (d2.phi * d2.phi + d2.phi_x * d2.phi_x) + n2 * (d1.phi * d1.phi + d1.phi_x * d1.phi_x);
  c.x = d1.phi_total - d2.phi_total;
  c.nonlinear_offset = d1.phi - d2.phi - d1.phi_x + d2.phi_x;
  return c;
}

CorrelationWeights correlation_weights(const SpectralCoefficients& c,
                                       StokesComponent which) noexcept {
  const double x = component_phase(c, which);
  const double s = std::sin(x);
  return {c.a * std::sin(2.0 * x), c.b * s * s};
}

double spectrum_from_phase(double a, double b, double x, double lorentz) noexcept {
  const double s = std::sin(x);
  return 1.0 + 2.0 * lorentz * a * std::sin(2.0 * x) + 4.0 * lorentz * lorentz * b * s * s;
}

CorrelationSample correlation_s2(const PulseParams& p1, const PulseParams& p2,
                                 const MediumParams& m, double t) {
  return correlation_of(p1, p2, m, t, StokesComponent::s2);
}

CorrelationSample correlation_s3(const PulseParams& p1, const PulseParams& p2,
                                 const MediumParams& m, double t) {
  return correlation_of(p1, p2, m, t, StokesComponent::s3);
}

double spectrum_s2(const PulseParams& p1, const PulseParams& p2, const MediumParams& m, double t,
                   double omega_reduced) {
  return spectrum_of(p1, p2, m, t, omega_reduced, StokesComponent::s2);
}

double spectrum_s3(const PulseParams& p1, const PulseParams& p2, const MediumParams& m, double t,
                   double omega_reduced) {
  return spectrum_of(p1, p2, m, t, omega_reduced, StokesComponent::s3);
}

double normalized_variance(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                           double t, double omega_reduced, StokesComponent which) {
  const double n1 = p1.photon_number(t);
  if (!(n1 > 0.0)) throw DomainError("normalized variance needs a non-empty pulse 1");
  return (spectrum_of(p1, p2, m, t, omega_reduced, which) - 1.0) / n1;
}

const char* to_string(SpectrumKind kind) noexcept {
  return kind == SpectrumKind::raw ? "raw" : "normalized";
}

SpectrumCurve spectrum_curve(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                             double t, std::vector<double> omega_grid, SpectrumKind kind,
                             StokesComponent which) {
  if (omega_grid.empty()) throw DomainError("omega grid is empty");
  for (std::size_t i = 1; i < omega_grid.size(); ++i)
    if (!(omega_grid[i] > omega_grid[i - 1])) throw DomainError("omega grid must be strictly ascending");
  m.validate();
  p1.validate();
  p2.validate();

  const SpectralCoefficients c = spectral_coefficients(p1, p2, m, t);
  const double x = component_phase(c, which);
  const double n1 = p1.photon_number(t);
  if (kind == SpectrumKind::normalized && !(n1 > 0.0))
    throw DomainError("normalized variance needs a non-empty pulse 1");

  SpectrumCurve curve;
  curve.kind = kind;
  curve.component = which;
  curve.values.reserve(omega_grid.size());
  for (double omega : omega_grid) {
    const double s = spectrum_from_phase(c.a, c.b, x, lorentzian(omega));
    if (s < 0.0) curve.negative_spectrum = true;
    curve.values.push_back(kind == SpectrumKind::raw ? s : (s - 1.0) / n1);
  }
  curve.omega_grid = std::move(omega_grid);

  curve.params_digest = {
      {"component", which == StokesComponent::s2 ? "S2" : "S3"},
      {"kind", to_string(kind)},
      {"t", fmt(t)},
      {"tau_r", fmt(m.tau_r)},
      {"gamma1", fmt(m.gamma1)},
      {"gamma2", fmt(m.gamma2)},
      {"gamma_xpm", fmt(m.gamma_xpm)},
      {"pulse1.n_bar0", fmt(p1.n_bar0)},
      {"pulse1.envelope", p1.envelope.describe()},
      {"pulse1.linear_phase", p1.linear_phase.describe()},
      {"pulse2.n_bar0", fmt(p2.n_bar0)},
      {"pulse2.envelope", p2.envelope.describe()},
      {"pulse2.linear_phase", p2.linear_phase.describe()},
  };
  return curve;
}

}  // namespace stokes
