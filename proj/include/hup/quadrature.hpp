#pragma once

// Quadrature on finite unions of intervals.  Two entry points:
//   integrate_adaptive   - plain adaptive Gauss-Kronrod, for smooth or mildly
//                          oscillating integrands (used for norms and checks);
//   oscillatory_integral - panels sized from a bound on the phase speed so
//                          that the phase advances at most max_advance per
//                          panel, then G7/K15 per panel with local bisection.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "hup/config.hpp"

namespace hup {

struct QuadResult {
  cplx value{0.0};
  double error = 0.0;
};

using Interval = std::pair<double, double>;

/// Sorted, merged union of intervals (empty ones dropped).
inline std::vector<Interval> merge_intervals(std::vector<Interval> iv) {
  std::erase_if(iv, [](const Interval& i) { return !(i.second > i.first); });
  std::sort(iv.begin(), iv.end());
  std::vector<Interval> out;
  for (const auto& i : iv) {
    if (!out.empty() && i.first <= out.back().second)
      out.back().second = std::max(out.back().second, i.second);
    else
      out.push_back(i);
  }
  return out;
}

/// Adaptive G7/K15 over each interval.  `rel_tol` is relative to the L1 norm
/// of the integrand on that interval.
template <class F>
QuadResult integrate_adaptive(F&& f, std::span<const Interval> intervals, double rel_tol = 1e-13,
                              unsigned max_depth = 15) {
  using boost::math::quadrature::gauss_kronrod;
  QuadResult r;
  for (const auto& [a, b] : intervals) {
    double err = 0.0;
    double l1 = 0.0;
    auto wrapped = [&](double t) -> cplx { return cplx(f(t)); };
    r.value += gauss_kronrod<double, 15>::integrate(wrapped, a, b, max_depth, rel_tol, &err, &l1);
    r.error += err;
  }
  return r;
}

struct PanelRule {
  double max_advance = pi / 4;  // radians of phase per panel
  double max_panel = 0.25;
  int max_bisections = 16;
};

/// Integral of amplitude(t) * exp(-i phase(t)) over `intervals`.
/// `speed_bound(a, b)` must bound |phase'| on [a, b].  The absolute error
/// target is shared across panels in proportion to their length.
template <class Amp, class Phase, class SpeedBound>
QuadResult oscillatory_integral(Amp&& amplitude, Phase&& phase, SpeedBound&& speed_bound,
                                std::span<const Interval> intervals, double abs_tol,
                                const PanelRule& rule = {}) {
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [&](double t) -> cplx {
    const cplx a = amplitude(t);
    if (a == cplx{0.0}) return a;
    const double ph = phase(t);
    return a * cplx(std::cos(ph), -std::sin(ph));
  };

  double total = 0.0;
  for (const auto& [a, b] : intervals) total += b - a;
  if (total <= 0.0) return {};

  QuadResult r;
  auto panel = [&](auto&& self, double a, double b, int depth) -> void {
    double err = 0.0;
    const cplx v = gauss_kronrod<double, 15>::integrate(integrand, a, b, 0, 0.0, &err);
    const double share = abs_tol * (b - a) / total;
    if (err <= share || depth >= rule.max_bisections) {
      r.value += v;
      r.error += err;
      return;
    }
    const double mid = 0.5 * (a + b);
    self(self, a, mid, depth + 1);
    self(self, mid, b, depth + 1);
  };

  for (const auto& [a, b] : intervals) {
    double t = a;
    while (t < b) {
      double h = std::min(rule.max_panel, b - t);
      while (speed_bound(t, t + h) * h > rule.max_advance && h > 1e-12) h *= 0.5;
      const double end = (b - (t + h) < 1e-14) ? b : t + h;
      panel(panel, t, end, 0);
      t = end;
    }
  }
  return r;
}

/// Evenly spaced points from lo to hi with the given step (endpoint
/// included when it lands on the lattice within 1e-9 of a step).
inline std::vector<double> grid_points(double lo, double hi, double step) {
  std::vector<double> out;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long i = 0; i < count; ++i) out.push_back(lo + static_cast<double>(i) * step);
  return out;
}

/// `count` evenly spaced points covering [lo, hi].
inline std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> out;
  if (count == 1) return {lo};
  for (int i = 0; i < count; ++i) out.push_back(lo + (hi - lo) * i / (count - 1));
  return out;
}

}  // namespace hup
