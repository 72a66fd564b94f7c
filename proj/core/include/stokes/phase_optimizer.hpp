#pragma once

// Optimal linear phase difference between the pulses for suppressing S2
// fluctuations at a target reduced frequency Omega0.
//
// The phase difference is delta_phi = phi2_lin - phi1_lin. With it,
// x = Phi1 - Phi2 = nonlinear_offset - delta_phi, and
//   delta_phi_opt = atan(a / (L0 b)) / 2 + phi1 - phi2 - phix1 + phix2  (mod pi)
//   S_min         = 1 + 2 L0^2 b - 2 L0 sqrt(a^2 + L0^2 b^2).

#include <utility>

#include "stokes/kerr_params.hpp"

namespace stokes {

struct Optimum {
  double delta_phi_opt = 0.0;  // in [0, 2 pi)
  double s_min = 1.0;
  int branch_index = 0;  // k of the candidate x0/2 + k pi/2 + offset that won
  bool degenerate = false;  // a == b == 0: the spectrum does not depend on the phase
};

// 1 + 2 L^2 b - 2 L sqrt(a^2 + L^2 b^2)
double minimum_spectrum(double a, double b, double lorentz) noexcept;

// Pulse 2 takes pulse 1's linear phase shifted by delta_phi.
std::pair<PulseParams, PulseParams> with_phase_difference(const PulseParams& p1,
                                                          const PulseParams& p2,
                                                          double delta_phi);

Optimum optimal_phase(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                      double t, double omega0_reduced);

struct NumericMinimum {
  double delta_phi = 0.0;
  double s_value = 1.0;
};

// Brute force: 4096-point grid over [0, 2 pi), then golden-section refinement
// around the best grid point down to 1e-10 rad.
NumericMinimum numeric_minimum(const PulseParams& p1, const PulseParams& p2,
                               const MediumParams& m, double t, double omega0_reduced);

}  // namespace stokes
