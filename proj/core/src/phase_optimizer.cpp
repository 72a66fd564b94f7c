#include "stokes/phase_optimizer.hpp"

#include <cmath>
#include <numbers>

#include "stokes/correlation_spectra.hpp"
#include "stokes/golden_section.hpp"

namespace stokes {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr int grid_points = 4096;
constexpr double phase_tol = 1e-10;

double wrap_phase(double phi) {
  double w = std::fmod(phi, two_pi);
  if (w < 0.0) w += two_pi;
  if (w >= two_pi) w = 0.0;
  return w;
}

}  // namespace

double minimum_spectrum(double a, double b, double lorentz) noexcept {
  const double lb = lorentz * b;
  return 1.0 + 2.0 * lorentz * lb - 2.0 * lorentz * std::hypot(a, lb);
}

std::pair<PulseParams, PulseParams> with_phase_difference(const PulseParams& p1,
                                                          const PulseParams& p2,
                                                          double delta_phi) {
  PulseParams q2 = p2;
  q2.linear_phase = p1.linear_phase.shifted(delta_phi);
  return {p1, std::move(q2)};
}

Optimum optimal_phase(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                      double t, double omega0_reduced) {
  m.validate();
  const SpectralCoefficients c = spectral_coefficients(p1, p2, m, t);
  const double lorentz = lorentzian(omega0_reduced);

  Optimum best;
  if (c.a == 0.0 && c.b == 0.0) {
    best.degenerate = true;
    return best;
  }

  // atan2 equals atan(a / (L b)) for b > 0 and stays finite when b underflows.
  const double half_angle = std::atan2(c.a, lorentz * c.b) / 2.0;
  double best_value = 0.0;
  for (int k = 0; k < 4; ++k) {
    const double dphi = half_angle + k * std::numbers::pi / 2.0 + c.nonlinear_offset;
    const double value = spectrum_from_phase(c.a, c.b, c.nonlinear_offset - dphi, lorentz);
    if (k == 0 || value < best_value) {
      best_value = value;
      best.branch_index = k;
      best.delta_phi_opt = dphi;
    }
  }
  best.delta_phi_opt = wrap_phase(best.delta_phi_opt);
  best.s_min = minimum_spectrum(c.a, c.b, lorentz);
  return best;
}

NumericMinimum numeric_minimum(const PulseParams& p1, const PulseParams& p2,
                               const MediumParams& m, double t, double omega0_reduced) {
  const auto objective = [&](double dphi) {
    const auto [q1, q2] = with_phase_difference(p1, p2, dphi);
    return spectrum_s2(q1, q2, m, t, omega0_reduced);
  };

  const double step = two_pi / grid_points;
  int best_i = 0;
  double best_value = objective(0.0);
  for (int i = 1; i < grid_points; ++i) {
    const double v = objective(i * step);
    if (v < best_value) {
      best_value = v;
      best_i = i;
    }
  }

  const double centre = best_i * step;
  const ScalarMinimum refined =
      golden_section_minimize(objective, centre - step, centre + step, phase_tol);
  if (refined.value < best_value) return {wrap_phase(refined.x), refined.value};
  return {centre, best_value};
}

}  // namespace stokes
