#include "stokes/numeric_oracle.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "stokes/errors.hpp"

namespace stokes {

void QuadratureSpec::validate() const {
  if (!(window > 0.0)) throw DomainError("quadrature window must be positive");
  if (!(rel_tol > 0.0)) throw DomainError("quadrature rel_tol must be positive");
  if (max_subdivisions == 0) throw DomainError("quadrature max_subdivisions must be positive");
}

namespace {

void require_even(const CorrelationSample& corr) {
  static constexpr std::array<double, 8> probes = {0.03, 0.17, 0.5, 0.91, 1.7, 3.1, 6.4, 12.5};
  for (double p : probes) {
    const double tau = p * corr.tau_r;
    const double fwd = corr.smooth(tau);
    const double back = corr.smooth(-tau);
    const double scale = std::max({std::abs(fwd), std::abs(back), 1e-300});
    if (std::abs(fwd - back) > 1e-10 * scale)
      throw DomainError("correlation smooth part is not even in tau");
  }
}

}  // namespace

double wiener_khintchine(const CorrelationSample& corr, double omega_reduced,
                         const QuadratureSpec& spec) {
  spec.validate();
  if (!(corr.tau_r > 0.0)) throw DomainError("tau_r must be positive");
  if (!corr.smooth) return corr.delta_weight;
  require_even(corr);

  const double omega = omega_reduced / corr.tau_r;
  const double upper = spec.window * corr.tau_r;
  const auto integrand = [&](double tau) { return corr.smooth(tau) * std::cos(omega * tau); };

  const auto depth = static_cast<unsigned>(std::bit_width(spec.max_subdivisions - 1));
  double error = 0.0;
  double l1 = 0.0;
  const double half = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      integrand, 0.0, upper, depth, spec.rel_tol, &error, &l1);

  const double estimate = corr.delta_weight + 2.0 * half;
  if (error > spec.rel_tol * l1 && error > 0.0) {
    throw ConvergenceError("Wiener-Khintchine quadrature did not converge (error " +
                               std::to_string(error) + ")",
                           estimate, 2.0 * error);
  }
  return estimate;
}

double transform_h(double omega_reduced) noexcept { return 2.0 * lorentzian(omega_reduced); }

double transform_g(double omega_reduced) noexcept {
  const double l = lorentzian(omega_reduced);
  return 4.0 * l * l;
}

}  // namespace stokes
