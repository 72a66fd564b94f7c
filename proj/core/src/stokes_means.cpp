#include "stokes/stokes_means.hpp"

#include <algorithm>
#include <cmath>

#include "stokes/errors.hpp"

namespace stokes {

S0S1 mean_s0_s1(const PulseParams& p1, const PulseParams& p2, double t) {
  const double n1 = p1.photon_number(t);
  const double n2 = p2.photon_number(t);
  return {n1 + n2, n1 - n2};
}

S2S3 mean_s2_s3(const PulseParams& p1, const PulseParams& p2, const MediumParams& m, double t) {
  const double n1 = p1.photon_number(t);
  const double n2 = p2.photon_number(t);
  const DerivedPhases d1 = derived_phases(p1, m, Pulse::first, t);
  const DerivedPhases d2 = derived_phases(p2, m, Pulse::second, t);

  const double amplitude = 2.0 * std::sqrt(n1 * n2) * std::exp(-(d1.delta + d2.delta));
  const double angle = d2.phi_total - d1.phi_total;
  return {amplitude * std::cos(angle), amplitude * std::sin(angle)};
}

StokesMeans stokes_means(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                         double t) {
  const S0S1 a = mean_s0_s1(p1, p2, t);
  const S2S3 b = mean_s2_s3(p1, p2, m, t);
  return {a.s0, a.s1, b.s2, b.s3};
}

double polarization_degree(const PulseParams& p1, const PulseParams& p2, const MediumParams& m,
                           double t) {
  const double n1 = p1.photon_number(t);
  const double n2 = p2.photon_number(t);
  const double total = n1 + n2;
  if (!(total > 0.0)) throw DomainError("polarization degree undefined for vacuum input");

  const DerivedPhases d1 = derived_phases(p1, m, Pulse::first, t);
  const DerivedPhases d2 = derived_phases(p2, m, Pulse::second, t);
  // 1 - 4 n1 n2 / (n1 + n2)^2 == (n1 - n2)^2 / (n1 + n2)^2; this form avoids
  // cancellation when the polarization degree is small.
  const double diff = n1 - n2;
  const double radicand =
      (diff * diff + 4.0 * n1 * n2 * std::exp(-2.0 * (d1.delta + d2.delta))) / (total * total);
  return std::sqrt(std::max(radicand, 0.0));
}

}  // namespace stokes
