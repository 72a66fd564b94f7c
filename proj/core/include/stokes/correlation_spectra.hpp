#pragma once

// Correlation functions and fluctuation spectra of the Stokes operators S2
// and S3, valid to leading order in the nonlinear coefficients.
//
// Both share the structure
//   R(tau)   = delta(tau) + A h(tau) + B g(tau)
//   S(Omega) = 1 + 2 L(Omega) A + 4 L(Omega)^2 B
// with
//   A = (n1 phi2 - n2 phi1) sin 2x
//   B = [n1 (phi2^2 + phix2^2) + n2 (phi1^2 + phix1^2)] sin^2 x
// and x = Phi1 - Phi2 for S2, x + pi/2 for S3.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "stokes/kerr_params.hpp"

namespace stokes {

enum class StokesComponent { s2, s3 };

// Phase-independent part of the spectral coefficients plus the current
// phase difference x = Phi1 - Phi2.
struct SpectralCoefficients {
  double a = 0.0;  // n1 phi2 - n2 phi1
  double b = 0.0;  // n1 (phi2^2 + phix2^2) + n2 (phi1^2 + phix1^2), always >= 0
  double x = 0.0;  // Phi1 - Phi2
  // phi1 - phi2 - phix1 + phix2, i.e. x minus the linear phase difference.
  double nonlinear_offset = 0.0;
};

SpectralCoefficients spectral_coefficients(const PulseParams& p1, const PulseParams& p2,
                                           const MediumParams& m, double t);

// Weights of the h- and g-shaped terms of R for the given component.
struct CorrelationWeights {
  double h_weight = 0.0;  // A
  double g_weight = 0.0;  // B
};

CorrelationWeights correlation_weights(const SpectralCoefficients& c,
                                       StokesComponent which = StokesComponent::s2) noexcept;

// 1 + 2 L a sin 2x + 4 L^2 b sin^2 x
double spectrum_from_phase(double a, double b, double x, double lorentz) noexcept;

struct CorrelationSample {
  double delta_weight = 1.0;
  std::function<double(double)> smooth;
  double tau_r = 1.0;
  // Set by correlation_s2/s3; zero for hand-built samples.
  CorrelationWeights weights;
};

CorrelationSample correlation_s2(const PulseParams& p1, const PulseParams& p2,
                                 const MediumParams& m, double t);
CorrelationSample correlation_s3(const PulseParams& p1, const PulseParams& p2,
                                 const MediumParams& m, double t);

double spectrum_s2(const PulseParams& p1, const PulseParams& p2, const MediumParams& m, double t,
                   double omega_reduced);

// S2 spectrum with the phase difference advanced by pi/2.
double spectrum_s3(const PulseParams& p1, const PulseParams& p2, const MediumParams& m, double t,
                   double omega_reduced);

// (S - 1) / n1(t); DomainError if pulse 1 is empty at t.
double normalized_variance(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                           double t, double omega_reduced,
                           StokesComponent which = StokesComponent::s2);

enum class SpectrumKind { raw, normalized };

const char* to_string(SpectrumKind kind) noexcept;

struct SpectrumCurve {
  std::vector<double> omega_grid;
  std::vector<double> values;
  SpectrumKind kind = SpectrumKind::raw;
  StokesComponent component = StokesComponent::s2;
  // key/value record of every generating input, in insertion order
  std::vector<std::pair<std::string, std::string>> params_digest;
  // Raised when some raw S(Omega) < 0 (outside the perturbative regime).
  bool negative_spectrum = false;
};

// Element-wise evaluation over a strictly ascending, non-empty grid.
SpectrumCurve spectrum_curve(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                             double t, std::vector<double> omega_grid, SpectrumKind kind,
                             StokesComponent which = StokesComponent::s2);

}  // namespace stokes
