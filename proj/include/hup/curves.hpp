#pragma once

// Densities on the curve y = exp(t^2) and the surface x_3 = exp(u_1^2) + exp(u_2^2).
//
// For c != 0 the function h_c(t) = e^{t^2} + t/c + 1/(4c^2) satisfies
//   x t + c x e^{t^2} = c x h_c(t) - x/(4c),
// so the transform on the line y = c x is a phase factor times an integral
// of exp(-i pi c x h_c(t)).  h_c is strictly convex with a single minimum;
// inverting it branch by branch maps such integrals to integrals in
// u = +-sqrt(h_c), where oddness in u makes them vanish.

#include <array>
#include <cmath>
#include <optional>
#include <variant>
#include <vector>

#include "hup/config.hpp"
#include "hup/errors.hpp"
#include "hup/measures.hpp"
#include "hup/quadrature.hpp"

namespace hup {

class HcFunction {
 public:
  explicit HcFunction(double c) : c_(c) {
    if (c == 0.0 || !std::isfinite(c)) throw DomainError("HcFunction: c must be a nonzero real");
    t_min_ = solve_stationary_point();
    h_min_ = (*this)(t_min_);
    if (!(h_min_ > 0.0)) throw ConstructionError("HcFunction: minimum of h_c is not positive");
  }

  double c() const noexcept { return c_; }
  double t_min() const noexcept { return t_min_; }
  double h_min() const noexcept { return h_min_; }

  double operator()(double t) const { return std::exp(t * t) + t / c_ + 0.25 / (c_ * c_); }

  /// (t + 1/(2c))^2 + e^{t^2} - t^2, the unsimplified form.
  double expanded(double t) const {
    const double s = t + 0.5 / c_;
    return s * s + std::exp(t * t) - t * t;
  }

  double derivative(double t) const { return 2.0 * t * std::exp(t * t) + 1.0 / c_; }
  double second_derivative(double t) const { return (2.0 + 4.0 * t * t) * std::exp(t * t); }

 private:
  // Root of 2 t e^{t^2} = -1/c.  The derivative is increasing, equals 1/c at
  // t = 0 and has the opposite sign at t = -1/(2c), so that is a bracket.
  double solve_stationary_point() const {
    double lo = c_ > 0 ? -0.5 / c_ : 0.0;
    double hi = c_ > 0 ? 0.0 : -0.5 / c_;
    double t = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
      const double d = derivative(t);
      if (d == 0.0) return t;
      (d > 0 ? hi : lo) = t;
      double next = t - d / second_derivative(t);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - t) <= 1e-16 * std::max(1.0, std::abs(t))) return next;
      t = next;
    }
    return t;
  }

  double c_;
  double t_min_ = 0.0;
  double h_min_ = 0.0;
};

inline double hc_eval(const HcFunction& h, double t) { return h(t); }

enum class Branch { left, right };

/// The t on the chosen monotone branch with h_c(t) = v.
inline double hc_inverse(const HcFunction& h, double v, Branch branch) {
  const double tol = tolerances().hc_residual * std::max(1.0, std::abs(v));
  if (v < h.h_min() - tol) throw BelowMinimumError("hc_inverse: value below the minimum of h_c");
  if (v <= h.h_min() + tol) return h.t_min();
  const double dir = branch == Branch::right ? 1.0 : -1.0;
  // Bracket [near, far] on the branch: h - v <= 0 at near, >= 0 at far.
  double near = h.t_min();
  double step = 1.0;
  double far = near + dir * step;
  while (h(far) < v) {
    near = far;
    step *= 2.0;
    far = h.t_min() + dir * step;
  }
  double t = far;
  for (int it = 0; it < 400; ++it) {
    const double f = h(t) - v;
    if (std::abs(f) <= tol) return t;
    (f < 0 ? near : far) = t;
    double next = t - f / h.derivative(t);
    const double lo = std::min(near, far);
    const double hi = std::max(near, far);
    if (!(next > lo && next < hi)) next = 0.5 * (near + far);
    if (next == t) return t;
    t = next;
  }
  return t;
}

/// Density g(t) dt of a measure on the curve, declared zero off its support.
///
/// Either a plain atom mixture truncated to [-T, T], or the witness
///   g(t) = phi(sqrt(h_c(t))) h_c'(t) / (2 sqrt(h_c(t)))
/// built from an odd phi that vanishes near |u| <= sqrt(h_min(c)).
class CurveDensity {
 public:
  struct HcWitness {
    HcFunction hc;
    Density phi;
  };

  /// Atom mixture truncated to [-radius, radius].
  static CurveDensity mixture(Density d, double radius = 2.5) {
    if (!(radius > 0.0)) throw DomainError("CurveDensity: support radius must be positive");
    CurveDensity g;
    std::vector<Interval> pieces;
    for (auto [lo, hi] : d.support_pieces()) {
      lo = std::max(lo, -radius);
      hi = std::min(hi, radius);
      if (hi > lo) pieces.emplace_back(lo, hi);
    }
    g.intervals_ = std::move(pieces);
    g.radius_ = radius;
    g.rep_ = std::move(d);
    return g;
  }

  /// Witness for the line y = c x.  Every atom of phi must be an odd_bump
  /// centered at 0 with inner radius >= sqrt(h_min) + delta.
  static CurveDensity hc_witness(double c, Density phi, double delta = tolerances().support_gap) {
    HcFunction hc(c);
    if (phi.is_zero()) throw ConstructionError("single-line witness: phi is zero");
    const double root_min = std::sqrt(hc.h_min());
    std::vector<Interval> pieces;
    for (const auto& a : phi.atoms()) {
      if (a.kind != AtomKind::odd_bump || a.center != 0.0)
        throw ConstructionError("single-line witness: phi atoms must be odd bumps centered at 0");
      if (a.inner < root_min + delta)
        throw ConstructionError("single-line witness: phi support must stay " + std::to_string(delta) +
                                " away from sqrt(h_min) = " + std::to_string(root_min));
      const double v0 = a.inner * a.inner;
      const double v1 = (a.inner + a.width) * (a.inner + a.width);
      pieces.emplace_back(hc_inverse(hc, v0, Branch::right), hc_inverse(hc, v1, Branch::right));
      pieces.emplace_back(hc_inverse(hc, v1, Branch::left), hc_inverse(hc, v0, Branch::left));
    }
    CurveDensity g;
    g.intervals_ = merge_intervals(std::move(pieces));
    double r = 0.0;
    for (const auto& [lo, hi] : g.intervals_) r = std::max({r, std::abs(lo), std::abs(hi)});
    g.radius_ = r;
    g.rep_ = HcWitness{hc, std::move(phi)};
    return g;
  }

  cplx operator()(double t) const {
    if (std::abs(t) > radius_) return 0.0;
    if (const auto* d = std::get_if<Density>(&rep_)) return (*d)(t);
    const auto& w = std::get<HcWitness>(rep_);
    const double v = w.hc(t);
    if (!(v > 0.0)) return 0.0;
    const double u = std::sqrt(v);
    return w.phi(u) * (w.hc.derivative(t) / (2.0 * u));
  }

  double support_radius() const noexcept { return radius_; }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  const HcWitness* witness() const { return std::get_if<HcWitness>(&rep_); }
  const Density* atoms() const { return std::get_if<Density>(&rep_); }

 private:
  CurveDensity() = default;
  std::variant<Density, HcWitness> rep_;
  std::vector<Interval> intervals_;
  double radius_ = 0.0;
};

/// psi_c(u) = g(h_c^{-1}(u^2)) 2u / h_c'(h_c^{-1}(u^2)), right branch for
/// u > 0 and left branch for u < 0; zero for |u| <= sqrt(h_min).
inline cplx psi_c(const CurveDensity& g, const HcFunction& hc, double u) {
  const double v = u * u;
  if (v <= hc.h_min()) return 0.0;
  const double t = hc_inverse(hc, v, u > 0 ? Branch::right : Branch::left);
  const double d = hc.derivative(t);
  if (d == 0.0) return 0.0;
  return g(t) * (2.0 * u / d);
}

inline cplx psi_c(const CurveDensity& g, double c, double u) { return psi_c(g, HcFunction(c), u); }

/// Phase extent |x| T + |y| e^{T^2} that exp_curve_ft is asked to resolve.
inline double oscillation_extent(double x, double y, double radius) {
  return std::abs(x) * radius + std::abs(y) * std::exp(radius * radius);
}

inline void check_budget(double x, double y, double radius) {
  const double e = oscillation_extent(x, y, radius);
  if (e > tolerances().oscillation_budget)
    throw BudgetError("oscillation budget exceeded: |x|T + |y|e^{T^2} = " + std::to_string(e) + " > " +
                      std::to_string(tolerances().oscillation_budget));
}

/// int exp(-i pi (x t + y e^{t^2})) g(t) dt over the support of g, by the
/// phase-advance panel rule.  The result carries an error estimate.
inline QuadResult exp_curve_ft(const CurveDensity& g, double x, double y,
                               double abs_tol = tolerances().quad_abs) {
  check_budget(x, y, g.support_radius());
  auto phase = [&](double t) { return pi * (x * t + y * std::exp(t * t)); };
  auto speed = [&](double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return pi * (std::abs(x) + 2.0 * std::abs(y) * m * std::exp(m * m));
  };
  return oscillatory_integral(g, phase, speed, g.intervals(), abs_tol);
}

/// int exp(-i pi c x h_c(t)) g(t) dt, the reduced integral on the line y = c x.
inline QuadResult hc_reduced_ft(const CurveDensity& g, const HcFunction& hc, double x,
                                double abs_tol = tolerances().quad_abs) {
  const double c = hc.c();
  check_budget(x, c * x, g.support_radius());
  auto phase = [&](double t) { return pi * c * x * hc(t); };
  auto speed = [&](double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return pi * std::abs(c * x) * (2.0 * m * std::exp(m * m) + 1.0 / std::abs(c));
  };
  return oscillatory_integral(g, phase, speed, g.intervals(), abs_tol);
}

/// Witness on the curve whose transform vanishes on y = c x.
inline CurveDensity construct_single_line_witness(double c, const Density& phi) {
  return CurveDensity::hc_witness(c, phi);
}

/// Transform of g(u) = tau(u_1) h(u_2) du on x_3 = e^{u_1^2} + e^{u_2^2}:
///   int int exp(-i pi (x_1 u_1 + x_2 u_2 + x_3 (e^{u_1^2} + e^{u_2^2}))) tau(u_1) h(u_2) du.
/// The tensor-product rule factors into two curve transforms.
inline QuadResult surface_ft(const CurveDensity& tau, const CurveDensity& h, const std::array<double, 3>& x,
                             double abs_tol = tolerances().quad_abs) {
  const QuadResult a = exp_curve_ft(tau, x[0], x[2], abs_tol);
  const QuadResult b = exp_curve_ft(h, x[1], x[2], abs_tol);
  return {a.value * b.value, std::abs(a.value) * b.error + std::abs(b.value) * a.error + a.error * b.error};
}

}  // namespace hup
