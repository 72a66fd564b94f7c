#pragma once

// Test-only reference evaluations. Everything here re-derives the closed
// forms from raw inputs in 50-digit arithmetic and does not call into the
// library's formula code, so it can serve as an independent check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "stokes/kerr_params.hpp"

namespace stokes::testing {

using Big = boost::multiprecision::cpp_bin_float_50;

struct RawInputs {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double gamma_xpm = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double lin1 = 0.0;
  double lin2 = 0.0;
  double tau_r = 1.0;

  MediumParams medium() const { return {tau_r, gamma1, gamma2, gamma_xpm}; }
  PulseParams pulse1() const { return {n1, Envelope::constant(), LinearPhase(lin1)}; }
  PulseParams pulse2() const { return {n2, Envelope::constant(), LinearPhase(lin2)}; }
};

struct ReferenceValues {
  Big s2, s3;
  Big a_coeff, b_coeff;  // phase-independent a, b
  Big h_weight, g_weight;
  Big x;  // Phi1 - Phi2
  Big decay_sum;
};

inline ReferenceValues reference(const RawInputs& in) {
  const Big g1 = in.gamma1, g2 = in.gamma2, gx = in.gamma_xpm;
  const Big n1 = in.n1, n2 = in.n2;
  const Big phi1 = 2 * g1 * n1, phi2 = 2 * g2 * n2;
  const Big px1 = 2 * gx * n1, px2 = 2 * gx * n2;
  const Big d1 = g1 * g1 * n1 / 2 + gx * gx * n1 / 2;
  const Big d2 = g2 * g2 * n2 / 2 + gx * gx * n2 / 2;
  const Big big1 = phi1 - px1 + Big(in.lin1);
  const Big big2 = phi2 - px2 + Big(in.lin2);

  ReferenceValues r;
  r.decay_sum = d1 + d2;
  const Big amp = 2 * sqrt(n1 * n2) * exp(-(d1 + d2));
  r.s2 = amp * cos(big2 - big1);
  r.s3 = amp * sin(big2 - big1);
  r.a_coeff = n1 * phi2 - n2 * phi1;
  r.b_coeff = n1 * (phi2 * phi2 + px2 * px2) + n2 * (phi1 * phi1 + px1 * px1);
  r.x = big1 - big2;
  r.h_weight = r.a_coeff * sin(2 * r.x);
  r.g_weight = r.b_coeff * sin(r.x) * sin(r.x);
  return r;
}

// Eq.-(16)-shaped spectrum from the reference weights at reduced frequency omega.
inline Big reference_spectrum(const ReferenceValues& r, double omega) {
  const Big l = Big(1) / (1 + Big(omega) * Big(omega));
  return 1 + 2 * l * r.h_weight + 4 * l * l * r.g_weight;
}

inline double rel_diff(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

// Draws inside the perturbative domain: gamma in (0, gmax], n in [nmin, nmax], phases in [0, 2 pi).
class Drawer {
public:
  explicit Drawer(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  RawInputs draw(double gmax = 0.01, double nmin = 1.0, double nmax = 200.0) {
    RawInputs in;
    in.gamma1 = uniform(1e-6, gmax);
    in.gamma2 = uniform(1e-6, gmax);
    in.gamma_xpm = uniform(1e-6, gmax);
    in.n1 = uniform(nmin, nmax);
    in.n2 = uniform(nmin, nmax);
    in.lin1 = uniform(0.0, 6.283185307179586);
    in.lin2 = uniform(0.0, 6.283185307179586);
    return in;
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace stokes::testing
