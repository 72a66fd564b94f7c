// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "reference.hpp"
#include "stokes/correlation_spectra.hpp"
#include "stokes/numeric_oracle.hpp"
#include "stokes/phase_optimizer.hpp"
#include "stokes/stokes_means.hpp"
#include "stokes/sweep.hpp"

using namespace stokes;
using stokes::testing::Drawer;
using stokes::testing::RawInputs;
using stokes::testing::rel_diff;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  const char* name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

Outcome coherent_floor() {
  Outcome out;
  const MediumParams linear{1.0, 0.0, 0.0, 0.0};
  const PulseParams p1{1000.0, Envelope::constant(), LinearPhase(0.3)};
  const PulseParams p2{250.0, Envelope::constant(), LinearPhase(1.1)};
  for (int i = 0; i < 50; ++i) {
    const double om = 0.2 * i;
    const double s = spectrum_s2(p1, p2, linear, 0.0, om);
    const double v = normalized_variance(p1, p2, linear, 0.0, om);
    if (std::abs(s - 1.0) > 1e-12) out.fail(fmt("S(%g) = %.17g", om, s));
    if (std::abs(v) > 1e-12) out.fail(fmt("S*(%g) = %.17g", om, v));
  }
  return out;
}

Outcome wk_link() {
  Outcome out;
  Drawer draw(101);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const RawInputs in = draw.draw(0.01);
    const auto c = correlation_s2(in.pulse1(), in.pulse2(), in.medium(), 0.0);
    for (double om : {0.0, 0.5, 1.0, 2.0, 5.0}) {
      const double closed = spectrum_s2(in.pulse1(), in.pulse2(), in.medium(), 0.0, om);
      const double quad = wiener_khintchine(c, om);
      const double d = rel_diff(quad, closed);
      worst = std::max(worst, d);
      if (d > 1e-6) out.fail(fmt("draw at Omega=%g: relative %.3e", om, d));
    }
  }
  CorrelationSample h, g;
  h.tau_r = g.tau_r = 1.0;
  h.smooth = [](double t) { return response_h(t, 1.0); };
  g.smooth = [](double t) { return correlator_g(t, 1.0); };
  for (int i = 0; i <= 20; ++i) {
    const double om = 0.25 * i;
    const double dh = std::abs(wiener_khintchine(h, om) - 1.0 - 2.0 * lorentzian(om));
    const double dg = std::abs(wiener_khintchine(g, om) - 1.0 - 4.0 * lorentzian(om) * lorentzian(om));
    if (dh > 1e-8) out.fail(fmt("FT h at %g off by %.3e", om, dh));
    if (dg > 1e-8) out.fail(fmt("FT g at %g off by %.3e", om, dg));
  }
  if (out.ok) out.detail = fmt("worst relative %.2e", worst);
  return out;
}

Outcome optimum_certificate() {
  Outcome out;
  Drawer draw(202);
  double worst_value = 0.0, worst_eq18 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const RawInputs in = draw.draw(0.01);
    for (double om0 : {0.0, 1.0}) {
      const Optimum opt = optimal_phase(in.pulse1(), in.pulse2(), in.medium(), 0.0, om0);
      const NumericMinimum nm = numeric_minimum(in.pulse1(), in.pulse2(), in.medium(), 0.0, om0);
      const double dv = std::abs(opt.s_min - nm.s_value);
      worst_value = std::max(worst_value, dv);
      if (dv > 1e-8) out.fail(fmt("closed vs numeric differ by %.3e at Omega0=%g", dv, om0));

      const auto [q1, q2] = with_phase_difference(in.pulse1(), in.pulse2(), opt.delta_phi_opt);
      const double at = spectrum_s2(q1, q2, in.medium(), 0.0, om0);
      const auto c = spectral_coefficients(in.pulse1(), in.pulse2(), in.medium(), 0.0);
      const double l = lorentzian(om0);
      // Eq. (18) evaluated independently in 50 digits.
      const stokes::testing::Big A = c.a, B = c.b, L = l;
      const double eq18 = (1 + 2 * L * L * B - 2 * L * sqrt(A * A + L * L * B * B)).convert_to<double>();
      const double d18 = rel_diff(at, eq18);
      worst_eq18 = std::max(worst_eq18, d18);
      if (d18 > 1e-10) out.fail(fmt("S(dphi_opt) vs Eq. 18 relative %.3e at Omega0=%g", d18, om0));
    }
  }
  if (out.ok) out.detail = fmt("worst |closed - numeric| %.2e, worst Eq.18 relative %.2e", worst_value, worst_eq18);
  return out;
}

Outcome mean_identity() {
  Outcome out;
  Drawer draw(303);
  for (int i = 0; i < 1000; ++i) {
    const RawInputs in = draw.draw(0.05, 0.0, 1e4);
    const StokesMeans s = stokes_means(in.pulse1(), in.pulse2(), in.medium(), 0.0);
    const auto ref = stokes::testing::reference(in);
    const double want = 4.0 * in.n1 * in.n2 * std::exp(-2.0 * ref.decay_sum.convert_to<double>());
    const double d1 = rel_diff(s.s2 * s.s2 + s.s3 * s.s3, want);
    const double radius = std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) / s.s0;
    const double d2 = rel_diff(polarization_degree(in.pulse1(), in.pulse2(), in.medium(), 0.0), radius);
    if (d1 > 1e-12) out.fail(fmt("s2^2+s3^2 relative %.3e", d1));
    if (d2 > 1e-12) out.fail(fmt("polarization degree relative %.3e", d2));
  }
  return out;
}

sweep::StudyResult preset_result(const char* name) {
  return sweep::run_study(sweep::find_preset(name).to_run_config());
}

std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

Outcome figure_shapes() {
  Outcome out;
  const double step = sweep::default_step;

  const auto fig3 = preset_result("fig3");
  for (const auto& c : fig3.curves)
    if (fig3.axis[argmin(c.values)] != 0.0) out.fail("fig3 curve " + c.label + " minimum not at Omega=0");

  const auto fig5 = preset_result("fig5");
  for (const auto& c : fig5.curves) {
    const double at = fig5.axis[argmin(c.values)];
    if (std::abs(at - 1.0) > step + 1e-12) out.fail("fig5 curve " + c.label + fmt(" minimum at Omega=%g", at));
  }

  const auto fig1 = preset_result("fig1");
  for (std::size_t i = 0; i < fig1.axis.size(); ++i) {
    if (!(fig1.axis[i] > 1.0)) continue;
    for (std::size_t k = 1; k < fig1.curves.size(); ++k)
      if (!(fig1.curves[k].values[i] < fig1.curves[k - 1].values[i]))
        out.fail(fmt("fig1 not decreasing a->d at phi01=%g (curve index %g)", fig1.axis[i], static_cast<double>(k)));
  }

  const auto fig4 = preset_result("fig4");
  if (fig4.axis.front() != 0.0) out.fail("fig4 grid does not start at Omega=0");
  for (std::size_t k = 1; k < fig4.curves.size(); ++k)
    if (!(fig4.curves[k].values[0] < fig4.curves[k - 1].values[0]))
      out.fail("fig4 S*(0) not decreasing at curve " + fig4.curves[k].label);
  return out;
}

Outcome squeezing_existence() {
  Outcome out;
  const auto fig3 = preset_result("fig3");
  const auto& d = fig3.curves.at(3);
  if (!(fig3.axis[0] == 0.0 && d.values[0] < 0.0)) out.fail(fmt("fig3 (d) S*(0) = %.6g", d.values[0]));
  for (const sweep::Preset& p : sweep::presets()) {
    const sweep::RunConfig cfg = p.to_run_config();
    const auto r = sweep::run_study(cfg);
    for (std::size_t k = 0; k < r.curves.size(); ++k) {
      if (r.curves[k].outside_approximation) continue;  // bound only claimed inside the guard
      for (double v : r.curves[k].values)
        if (v < -1.0) out.fail(p.name + " curve " + r.curves[k].label + fmt(" S* = %.6g < -1", v));
    }
  }
  if (out.ok) out.detail = fmt("fig3 (d) S*(0) = %.6f", d.values[0]);
  return out;
}

Outcome determinism() {
  Outcome out;
  for (const sweep::Preset& p : sweep::presets()) {
    const sweep::RunConfig cfg = p.to_run_config();
    const std::string first = sweep::csv_text(cfg, sweep::run_study(cfg));
    const std::string second = sweep::csv_text(cfg, sweep::run_study(cfg));
    if (first != second) out.fail(p.name + " CSV differs between runs");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"coherent floor", 1.0, coherent_floor},
      {"correlation -> spectrum link (quadrature)", 30.0, wk_link},
      {"optimal phase certificate", 60.0, optimum_certificate},
      {"Pythagorean mean identity", 5.0, mean_identity},
      {"figure-shape reproduction", 30.0, figure_shapes},
      {"squeezing existence and S* >= -1", 10.0, squeezing_existence},
      {"determinism", 30.0, determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) out.fail(fmt("runtime %.2f s exceeds %.0f s", secs, c.budget_seconds));
    std::printf("[%s] %-45s %7.3f s  %s\n", out.ok ? "PASS" : "FAIL", c.name, secs, out.detail.c_str());
    if (!out.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
