#pragma once

#include <functional>
#include <limits>
#include <vector>

// Numerical integration engine: adaptive Gauss-Kronrod, principal values
// with pole subtraction, damped oscillatory moments in closed form.
namespace rindler::quad {

using Integrand = std::function<double(double)>;

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  // Initial damping rate for conditionally convergent tails, in units of
  // 1/frequency. Zero picks one from the problem's time scale.
  double eta = 0.0;
  // Explicit damping schedule (strictly decreasing, positive). Overrides eta.
  std::vector<double> eta_schedule;
  // Maximum number of interval bisections per adaptive integral.
  int max_depth = 4000;

  // Reads RINDLER_RESONANCE_TOL into rel_tol when set. UsageError on a
  // malformed or non-positive value.
  static QuadratureSpec from_environment();

  // first, first*ratio, ... (count terms); ratio in (0, 1)
  static std::vector<double> geometric_schedule(double first, double ratio, int count);

  // UsageError when an invariant is broken.
  void validate() const;
};

struct Bounds {
  double lower = 0.0;
  double upper = 1.0; // may be +infinity
};

struct IntegrationResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

// Globally adaptive 21-point Gauss-Kronrod. An infinite upper bound is mapped
// through x = a + t/(1-t). The subdivision order depends only on the inputs.
// QuadratureError (naming the worst interval) when max_depth bisections do
// not meet max(abs_tol, rel_tol |I|).
IntegrationResult adaptive_integral(const Integrand &f, Bounds bounds,
                                    const QuadratureSpec &spec);

// PV int_0^inf density(w) [1/(w + w0) + 1/(w - w0)] dw.
// The pole is removed by subtraction on [w0/2, 3w0/2]. The oscillatory tail is
// damped by e^{-eta w}: by default the damped tail is sampled on a circle of
// complex eta and continued analytically to eta = 0; an explicit eta or
// eta_schedule switches to real-eta polynomial extrapolation instead.
// `time_scale` is the dominant oscillation time of the density (S for sin(wS));
// it sets the damping scale and panel width of the tail. Zero means 1/w0.
double pv_resonance_kernel(const Integrand &density, double omega0,
                           const QuadratureSpec &spec, double time_scale = 0.0);

enum class Trig { Sin, Cos };

// int_0^inf w^k trig_u(w u) trig_S(w S) e^{-eta w} dw, k <= 2, in closed form.
double damped_trig_moment(int k, Trig trig_u, Trig trig_s, double u, double s,
                          double eta);

struct Extrapolation {
  double value = 0.0;
  double error = std::numeric_limits<double>::infinity(); // |last - previous|
};

// Neville polynomial extrapolation of samples f(h_i) to h = 0.
Extrapolation extrapolate_to_zero(const std::vector<double> &h,
                                  const std::vector<double> &f);

} // namespace rindler::quad
