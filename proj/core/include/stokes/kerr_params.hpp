#pragma once

// Input parameters of the two-pulse Kerr problem and the scalar building
// blocks shared by every other module: the electronic response h(t), the
// temporal correlator g(tau), the Lorentzian L(Omega) and the per-pulse
// SPM/XPM phase and damping parameters.

#include <functional>
#include <string>

namespace stokes {

enum class Pulse { first = 1, second = 2 };

struct MediumParams {
  double tau_r = 1.0;      // relaxation time of the electronic nonlinearity
  double gamma1 = 0.0;     // SPM coefficient of pulse 1 (gamma_1 = beta_1 z)
  double gamma2 = 0.0;     // SPM coefficient of pulse 2
  double gamma_xpm = 0.0;  // XPM coupling (gamma~ = beta~ z)

  // Throws DomainError naming the offending field.
  void validate() const;

  // The closed forms are perturbative in the nonlinear coefficients.
  bool within_approximation(double threshold = 0.1) const noexcept;

  double gamma(Pulse which) const noexcept { return which == Pulse::first ? gamma1 : gamma2; }
};

/// Temporal envelope r(t) of a pulse's amplitude, normalized so that r(0) = 1.
class Envelope {
public:
  enum class Kind { constant, gaussian, custom };

  Envelope() = default;

  static Envelope constant();
  /// exp(-t^2 / (2 tau_p^2)); tau_p > 0.
  static Envelope gaussian(double tau_p);
  /// Arbitrary shape; rejected unless fn(0) == 1 exactly.
  static Envelope custom(std::function<double(double)> fn, std::string label = "custom");

  double operator()(double t) const;

  Kind kind() const noexcept { return kind_; }
  double tau_p() const noexcept { return tau_p_; }
  std::string describe() const;

private:
  Kind kind_ = Kind::constant;
  double tau_p_ = 0.0;
  std::function<double(double)> fn_;
  std::string label_;
};

/// Linear phase of a pulse as a function of time (radians).
class LinearPhase {
public:
  LinearPhase() = default;
  LinearPhase(double value) : offset_(value) {}  // NOLINT: constants are the common case

  static LinearPhase custom(std::function<double(double)> fn, std::string label = "custom");

  double operator()(double t) const { return fn_ ? fn_(t) + offset_ : offset_; }

  bool is_constant() const noexcept { return !fn_; }
  // Same shape, constant offset added.
  LinearPhase shifted(double delta) const;
  std::string describe() const;

private:
  double offset_ = 0.0;
  std::function<double(double)> fn_;
  std::string label_;
};

struct PulseParams {
  double n_bar0 = 0.0;  // mean photon number density at t = 0
  Envelope envelope;
  LinearPhase linear_phase;

  void validate() const;

  // n_bar0 * r(t)^2
  double photon_number(double t) const;
};

struct DerivedPhases {
  double phi = 0.0;        // SPM phase addition
  double mu = 0.0;         // SPM damping
  double phi_x = 0.0;      // XPM phase addition
  double mu_x = 0.0;       // XPM damping
  double delta = 0.0;      // mu + mu_x
  double phi_total = 0.0;  // phi - phi_x + linear phase
};

// h(t) = (1/tau_r) exp(-|t|/tau_r)
double response_h(double t, double tau_r);

// g(tau) = (1 + |tau|/tau_r) h(tau)
double correlator_g(double tau, double tau_r);

// L(Omega) = 1 / (1 + Omega^2)
double lorentzian(double omega_reduced) noexcept;

DerivedPhases derived_phases(const PulseParams& pulse, const MediumParams& medium, Pulse which,
                             double t);

// Integer overload for callers holding the pulse number; anything but 1 or 2 is a DomainError.
DerivedPhases derived_phases(const PulseParams& pulse, const MediumParams& medium, int which,
                             double t);

}  // namespace stokes
