#pragma once

// Quadrature-based reference transforms. These never call the closed-form
// spectra, so they can be used to check them.

#include "stokes/correlation_spectra.hpp"

namespace stokes {

struct QuadratureSpec {
  double window = 40.0;   // half-width of the integration range, in units of tau_r
  double rel_tol = 1e-9;  // relative to the L1 norm of the integrand
  unsigned max_subdivisions = 1u << 15;

  void validate() const;
};

/// delta_weight + 2 * int_0^{window tau_r} smooth(tau) cos(omega tau) dtau,
/// with omega = omega_reduced / tau_r.
///
/// The smooth part must be even; this is probed at 8 points and an odd or
/// asymmetric sample is rejected with DomainError. Throws ConvergenceError
/// (carrying the best estimate) when the tolerance is not met.
double wiener_khintchine(const CorrelationSample& corr, double omega_reduced,
                         const QuadratureSpec& spec = {});

// Closed-form Fourier transforms of h and g: 2 L(Omega) and 4 L(Omega)^2.
double transform_h(double omega_reduced) noexcept;
double transform_g(double omega_reduced) noexcept;

}  // namespace stokes
