#include "stokes/kerr_params.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "stokes/errors.hpp"

namespace stokes {

namespace {

void require_positive_tau(double tau_r) {
  if (!(tau_r > 0.0) || !std::isfinite(tau_r)) throw DomainError("tau_r must be positive");
}

void require_nonnegative(double value, const char* field) {
  if (!(value >= 0.0) || !std::isfinite(value))
    throw DomainError(std::string(field) + " must be finite and non-negative");
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void MediumParams::validate() const {
  if (!(tau_r > 0.0) || !std::isfinite(tau_r)) throw DomainError("medium.tau_r must be positive");
  require_nonnegative(gamma1, "medium.gamma1");
  require_nonnegative(gamma2, "medium.gamma2");
  require_nonnegative(gamma_xpm, "medium.gamma_xpm");
}

bool MediumParams::within_approximation(double threshold) const noexcept {
  return gamma1 <= threshold && gamma2 <= threshold && gamma_xpm <= threshold;
}

Envelope Envelope::constant() { return Envelope{}; }

Envelope Envelope::gaussian(double tau_p) {
  if (!(tau_p > 0.0) || !std::isfinite(tau_p)) throw DomainError("envelope tau_p must be positive");
  Envelope e;
  e.kind_ = Kind::gaussian;
  e.tau_p_ = tau_p;
  return e;
}

Envelope Envelope::custom(std::function<double(double)> fn, std::string label) {
  if (!fn) throw DomainError("envelope function is empty");
  if (fn(0.0) != 1.0) throw DomainError("envelope must satisfy r(0) = 1");
  Envelope e;
  e.kind_ = Kind::custom;
  e.fn_ = std::move(fn);
  e.label_ = std::move(label);
  return e;
}

double Envelope::operator()(double t) const {
  switch (kind_) {
    case Kind::constant:
      return 1.0;
    case Kind::gaussian:
      return std::exp(-t * t / (2.0 * tau_p_ * tau_p_));
    case Kind::custom: {
      const double r = fn_(t);
      if (!(r >= 0.0)) throw DomainError("envelope returned a negative value");
      return r;
    }
  }
  return 1.0;
}

std::string Envelope::describe() const {
  switch (kind_) {
    case Kind::constant:
      return "constant";
    case Kind::gaussian:
      return "gaussian(tau_p=" + format_double(tau_p_) + ")";
    case Kind::custom:
      return label_;
  }
  return "constant";
}

LinearPhase LinearPhase::custom(std::function<double(double)> fn, std::string label) {
  if (!fn) throw DomainError("linear phase function is empty");
  LinearPhase p;
  p.fn_ = std::move(fn);
  p.label_ = std::move(label);
  return p;
}

LinearPhase LinearPhase::shifted(double delta) const {
  LinearPhase p = *this;
  p.offset_ += delta;
  return p;
}

std::string LinearPhase::describe() const {
  if (is_constant()) return format_double(offset_);
  return label_ + "+" + format_double(offset_);
}

void PulseParams::validate() const { require_nonnegative(n_bar0, "n_bar0"); }

double PulseParams::photon_number(double t) const {
  const double r = envelope(t);
  return n_bar0 * r * r;
}

double response_h(double t, double tau_r) {
  require_positive_tau(tau_r);
  return std::exp(-std::abs(t) / tau_r) / tau_r;
}

double correlator_g(double tau, double tau_r) {
  require_positive_tau(tau_r);
  const double s = std::abs(tau) / tau_r;
  return (1.0 + s) * std::exp(-s) / tau_r;
}

double lorentzian(double omega_reduced) noexcept { return 1.0 / (1.0 + omega_reduced * omega_reduced); }

DerivedPhases derived_phases(const PulseParams& pulse, const MediumParams& medium, Pulse which,
                             double t) {
  const double gamma = medium.gamma(which);
  const double gx = medium.gamma_xpm;
  const double n = pulse.photon_number(t);

  DerivedPhases d;
  d.phi = 2.0 * gamma * n;
  d.mu = gamma * gamma * n / 2.0;
  // XPM terms use this pulse's own intensity.
  d.phi_x = 2.0 * gx * n;
  d.mu_x = gx * gx * n / 2.0;
  d.delta = d.mu + d.mu_x;
  d.phi_total = d.phi - d.phi_x + pulse.linear_phase(t);
  return d;
}

DerivedPhases derived_phases(const PulseParams& pulse, const MediumParams& medium, int which,
                             double t) {
  if (which != 1 && which != 2) throw DomainError("pulse index must be 1 or 2");
  return derived_phases(pulse, medium, static_cast<Pulse>(which), t);
}

}  // namespace stokes
