#include "rindler/quad.hpp"
#include "rindler/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <cstring>
#include <numbers>
#include <queue>
#include <sstream>
#include <string>

namespace rindler::quad {

namespace {

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600388104870, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd Kronrod nodes kXgk[1], kXgk[3], ..., kXgk[9].
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Piece {
  double a, b;
  double value, error;
  bool roundoff_limited;
};

// Worst error first; ties broken by position so the order is reproducible.
struct WorseFirst {
  bool operator()(const Piece &x, const Piece &y) const {
    if (x.error != y.error)
      return x.error < y.error;
    return x.a > y.a;
  }
};

template <typename F> Piece gk21(const F &f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double resabs = std::abs(kronrod);
  double fv1[10], fv2[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv1[j] = f(centre - dx);
    fv2[j] = f(centre + dx);
    const double sum = fv1[j] + fv2[j];
    kronrod += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
    if (j % 2 == 1)
      gauss += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * kronrod;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));

  kronrod *= half;
  gauss *= half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);

  double err = std::abs(kronrod - gauss);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double roundoff = 50.0 * kEps * resabs;
  bool limited = false;
  if (err <= roundoff) {
    err = roundoff;
    limited = true;
  }
  if (!std::isfinite(kronrod))
    throw QuadratureError("integrand is not finite on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  return {a, b, kronrod, err, limited};
}

template <typename F>
IntegrationResult integrate_finite(const F &f, double lo, double hi,
                                   const QuadratureSpec &spec, double report_scale_lo,
                                   bool mapped) {
  IntegrationResult r;
  if (lo == hi)
    return r;
  std::priority_queue<Piece, std::vector<Piece>, WorseFirst> heap;
  Piece first = gk21(f, lo, hi);
  r.evaluations = 21;
  double total = first.value;
  double total_err = first.error;
  heap.push(first);

  int bisections = 0;
  while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    const Piece worst = heap.top();
    if (worst.roundoff_limited)
      break; // nothing left to gain at double precision
    const double mid = 0.5 * (worst.a + worst.b);
    if (bisections >= spec.max_depth || mid <= worst.a || mid >= worst.b) {
      auto to_x = [&](double t) {
        return mapped ? report_scale_lo + t / (1.0 - t) : t;
      };
      std::ostringstream msg;
      msg << "adaptive_integral: no convergence after " << bisections
          << " bisections; estimate " << total << " +- " << total_err
          << "; worst interval [" << to_x(worst.a) << ", " << to_x(worst.b)
          << "] with error " << worst.error;
      throw QuadratureError(msg.str());
    }
    heap.pop();
    const Piece left = gk21(f, worst.a, mid);
    const Piece right = gk21(f, mid, worst.b);
    r.evaluations += 42;
    ++bisections;
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum to remove drift from the incremental updates. Summation order is
  // fixed by sorting on position.
  std::vector<Piece> pieces;
  pieces.reserve(heap.size());
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece &x, const Piece &y) { return x.a < y.a; });
  r.value = 0.0;
  r.abs_error = 0.0;
  for (const auto &p : pieces) {
    r.value += p.value;
    r.abs_error += p.error;
  }
  r.intervals = static_cast<int>(pieces.size());
  return r;
}

// Fixed Gauss-Kronrod grid for the tail [start, inf). The weighted density
// values are stored once and reused for every damping rate.
struct TailGrid {
  std::vector<double> nodes;
  std::vector<double> kronrod; // weight * density * kernel
  std::vector<double> gauss;   // same with the embedded Gauss weights (0 off-grid)
  std::vector<std::size_t> panel_start;
};

TailGrid build_tail_grid(const Integrand &density, double omega0, double start,
                         double panel, double min_eta) {
  TailGrid g;
  double a = start;
  for (;;) {
    g.panel_start.push_back(g.nodes.size());
    // Near the pole the kernel varies on the scale (w - w0); grade up to the
    // oscillation panel from there.
    const double width = std::min(panel, a - omega0);
    const double half = 0.5 * width, centre = a + half;
    auto push = [&](double w, double wk, double wg) {
      const double h = density(w) * (1.0 / (w + omega0) + 1.0 / (w - omega0));
      g.nodes.push_back(w);
      g.kronrod.push_back(half * wk * h);
      g.gauss.push_back(half * wg * h);
    };
    push(centre, kWgk[10], 0.0);
    for (int j = 0; j < 10; ++j) {
      const double wg = j % 2 == 1 ? kWg[j / 2] : 0.0;
      push(centre - half * kXgk[j], kWgk[j], wg);
      push(centre + half * kXgk[j], kWgk[j], wg);
    }
    a += width;
    // e^{-eta w} has crushed any polynomial growth of the density
    if (min_eta * a > 45.0 + 3.0 * std::log(std::max(1.0, a / omega0)))
      break;
  }
  return g;
}

// Damped tail sum_i w_i h_i e^{-eta w_i}, the summed per-panel Kronrod-Gauss
// discrepancy (error indicator) and sum |w_i h_i e^{-eta w_i}| (roundoff scale).
template <typename T> struct TailSum {
  T value{};
  double discrepancy = 0.0;
  double magnitude = 0.0;
};

template <typename T> TailSum<T> damped_tail(const TailGrid &g, T eta) {
  TailSum<T> out;
  const std::size_t panels = g.panel_start.size();
  for (std::size_t p = 0; p < panels; ++p) {
    const std::size_t lo = g.panel_start[p];
    const std::size_t hi = p + 1 < panels ? g.panel_start[p + 1] : g.nodes.size();
    T k{}, gs{};
    for (std::size_t i = lo; i < hi; ++i) {
      const T term = g.kronrod[i] * std::exp(-eta * g.nodes[i]);
      k += term;
      gs += g.gauss[i] * std::exp(-eta * g.nodes[i]);
      out.magnitude += std::abs(term);
    }
    out.value += k;
    out.discrepancy += std::abs(k - gs);
  }
  return out;
}

double require_finite(double v, const char *what) {
  if (!std::isfinite(v))
    throw UsageError(std::string(what) + " must be finite");
  return v;
}

} // namespace

//******************************************************************************
QuadratureSpec QuadratureSpec::from_environment() {
  QuadratureSpec spec;
  const char *env = std::getenv("RINDLER_RESONANCE_TOL");
  if (env == nullptr || *env == '\0')
    return spec;
  double tol = 0.0;
  const char *end = env + std::strlen(env);
  const auto [ptr, ec] = std::from_chars(env, end, tol);
  if (ec != std::errc() || ptr != end || !(tol > 0.0) || !std::isfinite(tol))
    throw UsageError(std::string("RINDLER_RESONANCE_TOL must be a positive number, got '") +
                     env + "'");
  spec.rel_tol = tol;
  return spec;
}

std::vector<double> QuadratureSpec::geometric_schedule(double first, double ratio, int count) {
  if (!(first > 0.0) || !(ratio > 0.0 && ratio < 1.0) || count < 1)
    throw UsageError("geometric_schedule needs first > 0, 0 < ratio < 1, count >= 1");
  std::vector<double> s(static_cast<std::size_t>(count));
  double v = first;
  for (auto &x : s) {
    x = v;
    v *= ratio;
  }
  return s;
}

void QuadratureSpec::validate() const {
  require_finite(rel_tol, "rel_tol");
  require_finite(abs_tol, "abs_tol");
  if (!(rel_tol > 0.0))
    throw UsageError("rel_tol must be > 0");
  if (abs_tol < 0.0)
    throw UsageError("abs_tol must be >= 0");
  if (!(eta >= 0.0) || !std::isfinite(eta))
    throw UsageError("eta must be finite and >= 0");
  if (max_depth < 1)
    throw UsageError("max_depth must be >= 1");
  for (std::size_t i = 0; i < eta_schedule.size(); ++i) {
    if (!(eta_schedule[i] > 0.0) || !std::isfinite(eta_schedule[i]))
      throw UsageError("eta_schedule entries must be finite and > 0");
    if (i > 0 && !(eta_schedule[i] < eta_schedule[i - 1]))
      throw UsageError("eta_schedule must be strictly decreasing");
  }
}

//******************************************************************************
IntegrationResult adaptive_integral(const Integrand &f, Bounds bounds,
                                    const QuadratureSpec &spec) {
  spec.validate();
  const double lo = bounds.lower, hi = bounds.upper;
  if (!std::isfinite(lo) || std::isnan(hi))
    throw UsageError("adaptive_integral: lower bound must be finite");
  if (hi < lo)
    throw UsageError("adaptive_integral: upper bound must be >= lower bound");
  if (std::isinf(hi)) {
    auto g = [&](double t) {
      const double s = 1.0 - t;
      return f(lo + t / s) / (s * s);
    };
    return integrate_finite(g, 0.0, 1.0, spec, lo, true);
  }
  return integrate_finite(f, lo, hi, spec, 0.0, false);
}

double pv_resonance_kernel(const Integrand &density, double omega0,
                           const QuadratureSpec &spec, double time_scale) {
  spec.validate();
  if (!(omega0 > 0.0) || !std::isfinite(omega0))
    throw DomainError("pv_resonance_kernel: omega0 must be > 0");
  if (!(time_scale >= 0.0) || !std::isfinite(time_scale))
    throw DomainError("pv_resonance_kernel: time_scale must be finite and >= 0");
  const double t = time_scale > 0.0 ? time_scale : 1.0 / omega0;

  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(spec.rel_tol * 1e-3, 1e-14);
  inner.abs_tol = spec.abs_tol * 1e-3;

  auto kernel = [&](double w) {
    return density(w) * (1.0 / (w + omega0) + 1.0 / (w - omega0));
  };
  const double low = integrate_finite(kernel, 0.0, 0.5 * omega0, inner, 0.0, false).value;

  // Pole subtraction on [w0/2, 3w0/2]. The symmetric window makes the
  // analytic remainder d(w0) ln((3w0/2 - w0)/(w0 - w0/2)) vanish, and the split
  // at w0 keeps every node off the pole.
  const double d0 = density(omega0);
  auto subtracted = [&](double w) {
    return (density(w) - d0) / (w - omega0) + density(w) / (w + omega0);
  };
  const double mid =
      integrate_finite(subtracted, 0.5 * omega0, omega0, inner, 0.0, false).value +
      integrate_finite(subtracted, omega0, 1.5 * omega0, inner, 0.0, false).value;
  const double head = low + mid;

  const double tail_start = 1.5 * omega0;
  const double size_floor = std::abs(head);
  auto converged = [&](double delta, double value) {
    const double size = std::max({std::abs(head + value), size_floor, std::abs(value)});
    return delta <= std::max(spec.abs_tol, spec.rel_tol * size);
  };

  // Explicit damping rates: real-eta Richardson (Neville) extrapolation.
  std::vector<double> schedule = spec.eta_schedule;
  if (schedule.empty() && spec.eta > 0.0)
    schedule = QuadratureSpec::geometric_schedule(spec.eta, 0.5, 10);
  if (!schedule.empty()) {
    const TailGrid grid = build_tail_grid(density, omega0, tail_start,
                                          std::numbers::pi / t, schedule.back());
    std::vector<double> etas, tails;
    for (double eta : schedule) {
      etas.push_back(eta);
      tails.push_back(damped_tail(grid, eta).value);
    }
    const Extrapolation e = extrapolate_to_zero(etas, tails);
    if (etas.size() >= 3 && !converged(e.error, e.value)) {
      std::ostringstream msg;
      msg << "pv_resonance_kernel: eta -> 0 extrapolation did not settle ("
          << etas.size() << " rates, last change " << e.error << ", omega0 = " << omega0
          << ")";
      throw QuadratureError(msg.str());
    }
    return head + e.value;
  }

  // Default: the damped tail T(eta) is analytic for |eta| < t and for
  // Re eta > 0. Sample it on a circle in the right half plane, recover the
  // Taylor series about the centre and sum it at eta = 0. Every sample keeps
  // Re eta >= 0.05 t, so no sample needs the ill-conditioned small-eta sums.
  constexpr int kSamples = 72;
  constexpr int kTerms = 36, kCheckTerms = 28;
  const double centre = 0.35 * t, radius = 0.3 * t;

  double panel = std::numbers::pi / t;
  for (int refine = 0; refine < 5; ++refine, panel *= 0.5) {
    const TailGrid grid =
        build_tail_grid(density, omega0, tail_start, panel, centre - radius);
    std::array<std::complex<double>, kSamples> samples;
    double discrepancy = 0.0, magnitude = 0.0;
    for (int k = 0; k < kSamples; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / kSamples;
      const auto sum = damped_tail(grid, centre + std::polar(radius, phi));
      samples[k] = sum.value;
      discrepancy = std::max(discrepancy, sum.discrepancy);
      magnitude = std::max(magnitude, sum.magnitude);
    }
    // Roundoff in the samples, amplified by re-expanding about eta = 0.
    const double roundoff =
        16.0 * kEps * magnitude * std::pow(centre / radius, kTerms);
    // T(0) = sum_n a_n (-centre)^n, a_n rho^n = (1/M) sum_k T_k e^{-i n phi_k}
    double partial = 0.0, check = 0.0, ratio_pow = 1.0;
    for (int n = 0; n < kTerms; ++n) {
      std::complex<double> an{};
      for (int k = 0; k < kSamples; ++k)
        an += samples[k] * std::polar(1.0, -2.0 * std::numbers::pi * n * k / kSamples);
      partial += ratio_pow * an.real() / kSamples;
      if (n + 1 == kCheckTerms)
        check = partial;
      ratio_pow *= -centre / radius;
    }
    if (!converged(discrepancy, partial) && discrepancy > 16.0 * kEps * magnitude)
      continue; // panel rule not resolving the density; refine the grid
    if (!converged(std::abs(partial - check), partial) &&
        std::abs(partial - check) > roundoff) {
      std::ostringstream msg;
      msg << "pv_resonance_kernel: analytic continuation of the damped tail did not "
             "settle (change "
          << std::abs(partial - check) << ", omega0 = " << omega0 << ", time scale = " << t
          << ")";
      throw QuadratureError(msg.str());
    }
    return head + partial;
  }
  std::ostringstream msg;
  msg << "pv_resonance_kernel: tail panels not resolved after refinement (omega0 = "
      << omega0 << ", time scale = " << t << ")";
  throw QuadratureError(msg.str());
}

//******************************************************************************
double damped_trig_moment(int k, Trig trig_u, Trig trig_s, double u, double s,
                          double eta) {
  if (k < 0 || k > 2)
    throw UsageError("damped_trig_moment: only orders k = 0, 1, 2 are supported (got " +
                     std::to_string(k) + ")");
  if (!(eta > 0.0) || !std::isfinite(eta))
    throw DomainError("damped_trig_moment: eta must be finite and > 0");
  if (!std::isfinite(u) || !std::isfinite(s))
    throw DomainError("damped_trig_moment: u and S must be finite");

  const double nu_minus = u - s, nu_plus = u + s;
  const double scale = std::max({std::abs(u), std::abs(s), 1e-300});
  if (eta <= 1e-10 * scale &&
      std::min(std::abs(nu_minus), std::abs(nu_plus)) <= 1e-10 * scale)
    throw SingularityError("damped_trig_moment: u = +-S light-cone pole with eta -> 0");

  const double factorial = k == 2 ? 2.0 : 1.0;
  // int_0^inf w^k e^{-eta w} e^{i nu w} dw = k! / (eta - i nu)^{k+1}
  auto laplace = [&](double nu) {
    return factorial / std::pow(std::complex<double>(eta, -nu), k + 1);
  };
  const auto lm = laplace(nu_minus), lp = laplace(nu_plus);

  if (trig_u == Trig::Sin && trig_s == Trig::Sin)
    return 0.5 * (lm.real() - lp.real());
  if (trig_u == Trig::Cos && trig_s == Trig::Cos)
    return 0.5 * (lm.real() + lp.real());
  if (trig_u == Trig::Sin)
    return 0.5 * (lp.imag() + lm.imag());
  return 0.5 * (lp.imag() - lm.imag());
}

Extrapolation extrapolate_to_zero(const std::vector<double> &h,
                                  const std::vector<double> &f) {
  if (h.size() != f.size() || h.empty())
    throw UsageError("extrapolate_to_zero: need matching, non-empty samples");
  const std::size_t n = h.size();
  // Neville tableau evaluated at 0; p[i] holds the interpolant through
  // samples i..i+level.
  std::vector<double> p = f;
  double without_last = f.front();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double hi = h[i], hj = h[i + level];
      if (hi == hj)
        throw UsageError("extrapolate_to_zero: abscissae must be distinct");
      p[i] = (hj * p[i] - hi * p[i + 1]) / (hj - hi);
    }
    if (level == n - 2)
      without_last = p[0];
  }
  Extrapolation e;
  e.value = p[0];
  if (n >= 2)
    e.error = std::abs(p[0] - without_last);
  return e;
}

} // namespace rindler::quad
