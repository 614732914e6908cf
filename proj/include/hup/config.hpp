#pragma once

#include <complex>
#include <vector>

namespace hup {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;

inline constexpr double pi = 3.14159265358979323846;

/// Numerical thresholds shared by every module.
struct Tolerances {
  double unimodular = 1e-12;      // | |a| - 1 | allowed for phase-built tuples
  double node_gap = 1e-9;         // min pairwise |a_i - a_j| for a solvable system
  double discriminant = 1e-9;     // h-values closer than this are "equal"
  double merge = 1e-9;            // xi grouping and eta dedup radius
  double quad_abs = 1e-9;         // absolute target for oscillatory quadrature
  double hc_residual = 1e-12;     // |h_c(t) - v| <= hc_residual * max(1, v)
  double support_gap = 1e-3;      // delta between sqrt(h_min) and witness support
  double oscillation_budget = 1.2e4;  // max of |x| T + |y| e^{T^2}
  long subset_cap = 100000;       // classifier search cap
};

inline const Tolerances& tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace hup
