#pragma once

#include "stokes/kerr_params.hpp"

namespace stokes {

// Mean quantum Stokes parameters at the medium output; same scale as n_bar0.
struct StokesMeans {
  double s0 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;
  double s3 = 0.0;
};

struct S0S1 {
  double s0 = 0.0;
  double s1 = 0.0;
};

struct S2S3 {
  double s2 = 0.0;
  double s3 = 0.0;
};

// Conserved by the lossless, dispersionless medium; independent of the nonlinearity.
S0S1 mean_s0_s1(const PulseParams& p1, const PulseParams& p2, double t);

// 2 sqrt(n1 n2) exp(-(D1 + D2)) (cos, sin)(Phi2 - Phi1)
S2S3 mean_s2_s3(const PulseParams& p1, const PulseParams& p2, const MediumParams& m, double t);

StokesMeans stokes_means(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                         double t);

/// Quantum polarization degree
///   P = sqrt(1 - 4 n1 n2 (n1 + n2)^-2 (1 - exp(-2 (D1 + D2)))).
/// Vacuum input (n1 + n2 == 0) has no polarization and is a DomainError.
double polarization_degree(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                           double t);

}  // namespace stokes
