#pragma once

// Elementary and complete homogeneous symmetric polynomials evaluated at
// complex points by recursion tables.  Nothing here expands monomials, so
// degrees in the tens stay cheap: cost is O(k * s) for degree k, arity s.

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "hup/config.hpp"
#include "hup/errors.hpp"

namespace hup {

/// Ordered tuple of complex numbers meant to lie on the unit circle,
/// typically a_j = exp(i pi eta_j).  Duplicates are allowed.
class UnimodularTuple {
 public:
  UnimodularTuple() = default;

  /// Builds a_j = exp(i pi eta_j).  The phase is reduced mod 2 first so that
  /// large heights do not lose digits in the trig evaluation.
  static UnimodularTuple from_phases(std::span<const double> etas) {
    UnimodularTuple t;
    t.values_.reserve(etas.size());
    for (double eta : etas) t.values_.push_back(unit_phase(eta));
    return t;
  }

  /// Wraps arbitrary values, checking that each has modulus 1 within
  /// `tolerances().unimodular`.
  static UnimodularTuple from_values(CVec values) {
    for (const auto& v : values) {
      if (std::abs(std::abs(v) - 1.0) > tolerances().unimodular)
        throw DomainError("UnimodularTuple: value off the unit circle");
    }
    UnimodularTuple t;
    t.values_ = std::move(values);
    return t;
  }

  /// exp(i pi eta) with eta reduced into [0, 2).
  static cplx unit_phase(double eta) {
    double r = std::fmod(eta, 2.0);
    if (r < 0) r += 2.0;
    return {std::cos(pi * r), std::sin(pi * r)};
  }

  std::span<const cplx> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  const cplx& operator[](std::size_t i) const { return values_[i]; }

  /// Smallest pairwise distance; +inf for fewer than two entries.
  double min_gap() const { return min_pairwise_gap(values_); }

  static double min_pairwise_gap(std::span<const cplx> xs) {
    double g = HUGE_VAL;
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j)
        g = std::min(g, std::abs(xs[i] - xs[j]));
    return g;
  }

 private:
  CVec values_;
};

/// A symmetric-polynomial value tagged with the degree and arity it came from.
struct PolyValue {
  cplx value;
  int degree = 0;
  std::size_t arity = 0;
};

namespace detail {
inline void check_degree(int k, const char* who) {
  if (k < 0) throw DomainError(std::string(who) + ": negative degree " + std::to_string(k));
}
}  // namespace detail

/// h_0(xs), ..., h_kmax(xs) in one pass.
inline CVec complete_homogeneous_table(int kmax, std::span<const cplx> xs) {
  detail::check_degree(kmax, "complete_homogeneous");
  CVec h(static_cast<std::size_t>(kmax) + 1, cplx{0.0});
  h[0] = 1.0;
  // Ascending j reuses the already-updated h[j-1], which is exactly
  // h_k(x_1..x_s) = h_k(x_1..x_{s-1}) + x_s h_{k-1}(x_1..x_s).
  for (const cplx& x : xs)
    for (std::size_t j = 1; j < h.size(); ++j) h[j] += x * h[j - 1];
  return h;
}

inline cplx complete_homogeneous(int k, std::span<const cplx> xs) {
  return complete_homogeneous_table(k, xs).back();
}

inline cplx complete_homogeneous(int k, const UnimodularTuple& xs) {
  return complete_homogeneous(k, xs.values());
}

/// e_0(xs), ..., e_kmax(xs); entries above the arity are zero.
inline CVec elementary_symmetric_table(int kmax, std::span<const cplx> xs) {
  detail::check_degree(kmax, "elementary_symmetric");
  CVec e(static_cast<std::size_t>(kmax) + 1, cplx{0.0});
  e[0] = 1.0;
  std::size_t seen = 0;
  for (const cplx& x : xs) {
    ++seen;
    // Descending j so e[j-1] still refers to the shorter tuple.
    for (std::size_t j = std::min(seen, e.size() - 1); j >= 1; --j) e[j] += x * e[j - 1];
  }
  return e;
}

inline cplx elementary_symmetric(int k, std::span<const cplx> xs) {
  return elementary_symmetric_table(k, xs).back();
}

inline PolyValue complete_homogeneous_value(int k, std::span<const cplx> xs) {
  return {complete_homogeneous(k, xs), k, xs.size()};
}

inline PolyValue elementary_symmetric_value(int k, std::span<const cplx> xs) {
  return {elementary_symmetric(k, xs), k, xs.size()};
}

/// h_k(xbar, x) - h_k(xbar, y) - (x - y) h_{k-1}(xbar, x, y).
/// Identically zero; the return value is rounding noise only.
inline cplx h_difference_residual(int k, std::span<const cplx> xbar, cplx x, cplx y) {
  if (k < 1) throw DomainError("h_difference_residual: k must be >= 1");
  CVec with_x(xbar.begin(), xbar.end());
  with_x.push_back(x);
  CVec with_y(xbar.begin(), xbar.end());
  with_y.push_back(y);
  CVec with_xy = with_x;
  with_xy.push_back(y);
  return complete_homogeneous(k, with_x) - complete_homogeneous(k, with_y) -
         (x - y) * complete_homogeneous(k - 1, with_xy);
}

}  // namespace hup
