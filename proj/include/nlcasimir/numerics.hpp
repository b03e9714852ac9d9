#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "nlcasimir/error.hpp"

namespace nlcasimir {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  // Floor for the error target; keeps the budget from being spent on
  // integrals whose true value underflows.
  double abs_tol = 1e-300;
  int max_subdivisions = 200;

  void validate() const;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
  int subdivisions = 0;
  int evaluations = 0;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]. Nodes are
// listed from the outermost pair inwards; the last node is the centre.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5) and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

template <class F>
double checked_call(F& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw IntegrandError("integrand returned a non-finite value at x = " + std::to_string(x), x);
  }
  return y;
}

template <class F>
Panel gauss_kronrod_15(F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked_call(f, centre);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double pair = checked_call(f, centre - dx) + checked_call(f, centre + dx);
    kronrod += kKronrodWeights[j] * pair;
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

// Globally adaptive G7/K15 quadrature over the panels between consecutive
// `breakpoints`. The panel with the largest error estimate is bisected until
// the summed error meets the target or the subdivision budget runs out (then
// `converged` is false). Summation runs in panel order, so the result is
// independent of the refinement history.
template <class F>
QuadratureResult integrate_panels(F& f, const std::vector<double>& breakpoints, const QuadratureConfig& cfg) {
  QuadratureResult result;
  std::vector<Panel> panels;
  panels.reserve(breakpoints.size() + static_cast<std::size_t>(cfg.max_subdivisions));
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    panels.push_back(gauss_kronrod_15(f, breakpoints[i - 1], breakpoints[i]));
    result.evaluations += 15;
  }

  auto totals = [&panels]() {
    std::sort(panels.begin(), panels.end(), [](const Panel& l, const Panel& r) { return l.a < r.a; });
    double value = 0.0;
    double error = 0.0;
    for (const auto& p : panels) {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  for (;;) {
    const auto [value, error] = totals();
    result.value = value;
    result.error = error;
    if (error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(value))) break;
    if (result.subdivisions >= cfg.max_subdivisions) {
      result.converged = false;
      break;
    }
    // Leftmost panel wins ties, keeping the refinement sequence deterministic.
    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const Panel& l, const Panel& r) { return l.error < r.error; });
    const double lo = worst->a;
    const double hi = worst->b;
    const double mid = 0.5 * (lo + hi);
    if (!(lo < mid && mid < hi)) {
      // Panel cannot be split further in floating point.
      result.converged = false;
      break;
    }
    *worst = gauss_kronrod_15(f, lo, mid);
    panels.push_back(gauss_kronrod_15(f, mid, hi));
    result.evaluations += 30;
    ++result.subdivisions;
  }
  return result;
}

}  // namespace detail

template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw ConfigError("integrate: finite interval bounds required");
  }
  if (a == b) return {};
  return detail::integrate_panels(f, {a, b}, cfg);
}

// Integral over [lower, inf). With t in [-1, 0], x = lower - scale * t covers
// [lower, lower + scale]; with t in (0, 1], x = lower + scale / t covers the
// tail. Both x = lower and x = inf sit at t = 0, where doubles are densest,
// so endpoint singularities and slow tails resolve to full precision.
// `scale` should match the width of the integrand's main feature.
template <class F>
QuadratureResult integrate_half_line(F&& f, double lower, double scale, const QuadratureConfig& cfg) {
  cfg.validate();
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ConfigError("integrate_half_line: mapping scale must be positive and finite");
  }
  if (!std::isfinite(lower)) throw ConfigError("integrate_half_line: finite lower bound required");
  auto mapped = [&f, lower, scale](double t) {
    const double x = t <= 0.0 ? lower - scale * t : lower + scale / t;
    // Only reachable for t below ~1e-300, whose share of the tail is nil.
    if (std::isinf(x)) return 0.0;
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw IntegrandError("integrand returned a non-finite value at x = " + std::to_string(x), x);
    }
    if (t <= 0.0 || y == 0.0) return y * scale;
    return y * (scale / t) / t;
  };
  return detail::integrate_panels(mapped, {-1.0, 0.0, 1.0}, cfg);
}

// Geometric progression from `min` to `max` with both endpoints exact.
std::vector<double> log_grid(double min, double max, std::size_t n);

}  // namespace nlcasimir
