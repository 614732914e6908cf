#pragma once

// L1 densities with closed-form Fourier transforms, measures carried by
// horizontal lines and by crosses, and the explicit measures whose
// transforms vanish on a prescribed set.  Transforms use the kernel
// exp(-i pi (x xi + y eta)) throughout.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "hup/config.hpp"
#include "hup/errors.hpp"
#include "hup/quadrature.hpp"
#include "hup/sympoly.hpp"

namespace hup {

enum class AtomKind { gaussian, box, triangle, odd_bump };

inline std::string_view to_string(AtomKind k) {
  switch (k) {
    case AtomKind::gaussian: return "gaussian";
    case AtomKind::box: return "box";
    case AtomKind::triangle: return "triangle";
    case AtomKind::odd_bump: return "odd_bump";
  }
  return "?";
}

namespace detail {
inline double sinc(double z) { return z == 0.0 ? 1.0 : std::sin(z) / z; }

/// Phase factor exp(-i pi x xi), argument reduced mod 2.
inline cplx kernel(double x, double xi) { return UnimodularTuple::unit_phase(-x * xi); }

/// int_{r0}^{r0+w} exp(-i omega r) dr.
inline cplx interval_ft(double omega, double r0, double w) {
  const double c = r0 + 0.5 * w;
  return std::polar(w * sinc(0.5 * omega * w), -omega * c);
}
}  // namespace detail

/// One term of a density mixture.
///
///   gaussian  A exp(-a (x-x0)^2), a = pi / width^2
///   box       A on |x-x0| <= width
///   triangle  A (1 - |x-x0|/width)_+
///   odd_bump  A sign(x-x0) sin^4(pi (|x-x0| - inner) / width) for
///             inner <= |x-x0| <= inner + width, zero elsewhere
///
/// odd_bump is antisymmetric about its center and C^3; `inner` opens a gap
/// around the center, which the curve witnesses need.
struct DensityAtom {
  AtomKind kind = AtomKind::gaussian;
  double center = 0.0;
  double width = 1.0;
  cplx amplitude{1.0};
  double inner = 0.0;

  void validate() const {
    if (!(width > 0.0)) throw DomainError("DensityAtom: width must be positive");
    if (inner < 0.0) throw DomainError("DensityAtom: inner radius must be non-negative");
    if (inner != 0.0 && kind != AtomKind::odd_bump)
      throw DomainError("DensityAtom: inner radius only applies to odd_bump");
  }

  double gaussian_rate() const { return pi / (width * width); }

  cplx operator()(double x) const {
    const double s = x - center;
    switch (kind) {
      case AtomKind::gaussian: return amplitude * std::exp(-gaussian_rate() * s * s);
      case AtomKind::box: return std::abs(s) <= width ? amplitude : cplx{0.0};
      case AtomKind::triangle: return amplitude * std::max(0.0, 1.0 - std::abs(s) / width);
      case AtomKind::odd_bump: {
        const double r = std::abs(s) - inner;
        if (r < 0.0 || r > width || s == 0.0) return 0.0;
        const double b = std::pow(std::sin(pi * r / width), 4);
        return amplitude * (s > 0 ? b : -b);
      }
    }
    return 0.0;
  }

  cplx ft(double xi) const {
    const cplx shift = detail::kernel(center, xi);
    switch (kind) {
      case AtomKind::gaussian:
        return amplitude * width * shift * std::exp(-pi * xi * xi * width * width / 4.0);
      case AtomKind::box:
        return amplitude * shift * (2.0 * width * detail::sinc(pi * width * xi));
      case AtomKind::triangle: {
        const double s = detail::sinc(0.5 * pi * width * xi);
        return amplitude * shift * (width * s * s);
      }
      case AtomKind::odd_bump:
        return amplitude * shift * (lobe_ft(xi) - lobe_ft(-xi));
    }
    return 0.0;
  }

  /// Points where the atom is not smooth (support ends, center of a bump).
  std::vector<double> breakpoints() const {
    switch (kind) {
      case AtomKind::gaussian: return {};
      case AtomKind::box:
      case AtomKind::triangle: return {center - width, center, center + width};
      case AtomKind::odd_bump:
        return {center - inner - width, center - inner, center, center + inner, center + inner + width};
    }
    return {};
  }

  /// Closed support, or a window holding all but ~e^{-450} of a gaussian.
  Interval support() const {
    const double r = kind == AtomKind::gaussian ? 12.0 * width
                     : kind == AtomKind::odd_bump ? inner + width
                                                  : width;
    return {center - r, center + r};
  }

  /// int |f|.
  double l1_norm() const {
    const double a = std::abs(amplitude);
    switch (kind) {
      case AtomKind::gaussian: return a * width;
      case AtomKind::box: return 2.0 * a * width;
      case AtomKind::triangle: return a * width;
      case AtomKind::odd_bump: return 0.75 * a * width;
    }
    return 0.0;
  }

 private:
  // int_{inner}^{inner+width} sin^4(pi (r - inner)/width) exp(-i pi xi r) dr, using
  // sin^4 = 3/8 - cos(2 theta)/2 + cos(4 theta)/8.
  cplx lobe_ft(double xi) const {
    const double omega = pi * xi;
    auto cos_term = [&](int k) {
      const double sigma = k * pi / width;
      return 0.5 * (std::polar(1.0, -sigma * inner) * detail::interval_ft(omega - sigma, inner, width) +
                    std::polar(1.0, sigma * inner) * detail::interval_ft(omega + sigma, inner, width));
    };
    return 0.375 * detail::interval_ft(omega, inner, width) - 0.5 * cos_term(2) + 0.125 * cos_term(4);
  }
};

/// Finite mixture of atoms.  Closed under addition and complex scaling.
class Density {
 public:
  Density() = default;
  explicit Density(std::vector<DensityAtom> atoms) : atoms_(std::move(atoms)) {
    for (const auto& a : atoms_) a.validate();
  }
  Density(std::initializer_list<DensityAtom> atoms) : Density(std::vector<DensityAtom>(atoms)) {}

  static Density single(DensityAtom a) { return Density({a}); }

  const std::vector<DensityAtom>& atoms() const noexcept { return atoms_; }

  bool is_zero() const {
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [](const DensityAtom& a) { return a.amplitude == cplx{0.0}; });
  }

  cplx operator()(double x) const {
    cplx s{0.0};
    for (const auto& a : atoms_) s += a(x);
    return s;
  }

  /// f^(xi) = int exp(-i pi x xi) f(x) dx.
  cplx ft(double xi) const {
    cplx s{0.0};
    for (const auto& a : atoms_) s += a.ft(xi);
    return s;
  }

  std::vector<double> breakpoints() const {
    std::vector<double> b;
    for (const auto& a : atoms_) {
      auto ab = a.breakpoints();
      b.insert(b.end(), ab.begin(), ab.end());
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
  }

  /// Union of atom supports split at every breakpoint; suitable as the
  /// interval list for quadrature of anything built from this density.
  std::vector<Interval> support_pieces() const {
    std::vector<Interval> sup;
    for (const auto& a : atoms_)
      if (a.amplitude != cplx{0.0}) sup.push_back(a.support());
    sup = merge_intervals(std::move(sup));
    const auto br = breakpoints();
    std::vector<Interval> out;
    for (auto [lo, hi] : sup) {
      double start = lo;
      for (double b : br)
        if (b > start && b < hi) {
          out.emplace_back(start, b);
          start = b;
        }
      out.emplace_back(start, hi);
    }
    return out;
  }

  /// Upper bound on int |f| (exact for a single atom).
  double l1_bound() const {
    double s = 0.0;
    for (const auto& a : atoms_) s += a.l1_norm();
    return s;
  }

  Density& operator+=(const Density& o) {
    atoms_.insert(atoms_.end(), o.atoms_.begin(), o.atoms_.end());
    return *this;
  }
  friend Density operator+(Density a, const Density& b) { return a += b; }
  friend Density operator*(cplx s, Density d) {
    for (auto& a : d.atoms_) a.amplitude *= s;
    return d;
  }
  friend Density operator-(const Density& d) { return cplx{-1.0} * d; }

 private:
  std::vector<DensityAtom> atoms_;
};

inline cplx density_ft(const Density& f, double xi) { return f.ft(xi); }

/// Measure sum_j f_j(x) dx d delta_{h_j}(y) on horizontal lines y = h_j.
class LineMeasure {
 public:
  LineMeasure(std::vector<double> heights, std::vector<Density> densities)
      : heights_(std::move(heights)), densities_(std::move(densities)) {
    if (heights_.size() != densities_.size())
      throw DomainError("LineMeasure: one density per height required");
    for (std::size_t j = 1; j < heights_.size(); ++j)
      if (!(heights_[j] > heights_[j - 1]))
        throw DomainError("LineMeasure: heights must be strictly increasing");
  }

  /// Heights 0..n and p, the normalized parallel-line system.
  static LineMeasure canonical(int n, int p, std::vector<Density> densities) {
    if (n < 0 || p < n + 1) throw DomainError("LineMeasure: need n >= 0 and p >= n+1");
    std::vector<double> h;
    for (int j = 0; j <= n; ++j) h.push_back(j);
    h.push_back(p);
    return LineMeasure(std::move(h), std::move(densities));
  }

  const std::vector<double>& heights() const noexcept { return heights_; }
  const std::vector<Density>& densities() const noexcept { return densities_; }

 private:
  std::vector<double> heights_;
  std::vector<Density> densities_;
};

/// mu^(xi, eta) = sum_j exp(-i pi h_j eta) f_j^(xi).
inline cplx line_system_ft(const LineMeasure& m, double xi, double eta) {
  cplx s{0.0};
  for (std::size_t j = 0; j < m.heights().size(); ++j)
    s += detail::kernel(m.heights()[j], eta) * m.densities()[j].ft(xi);
  return s;
}

/// Antisymmetric measure on (R x F_n) u (F_n x R):
///   sum_k f_k(x) dx d delta_k(y) - f_k(y) d delta_k(x) dy.
class CrossMeasure {
 public:
  explicit CrossMeasure(std::vector<Density> densities) : densities_(std::move(densities)) {
    if (densities_.empty()) throw DomainError("CrossMeasure: need at least one level");
  }
  int level_count() const { return static_cast<int>(densities_.size()); }
  const std::vector<Density>& densities() const noexcept { return densities_; }

 private:
  std::vector<Density> densities_;
};

/// sum_k exp(-i k pi eta) f_k^(xi) - exp(-i k pi xi) f_k^(eta).
inline cplx cross_ft(const CrossMeasure& m, double xi, double eta) {
  cplx horizontal{0.0};
  cplx vertical{0.0};
  for (int k = 0; k < m.level_count(); ++k) {
    const auto& f = m.densities()[static_cast<std::size_t>(k)];
    horizontal += detail::kernel(k, eta) * f.ft(xi);
    vertical += detail::kernel(k, xi) * f.ft(eta);
  }
  return horizontal - vertical;
}

/// A line measure together with the heights of the horizontal lines its
/// transform vanishes on.
struct LineWitness {
  LineMeasure measure;
  std::vector<double> lambda_heights;
};

/// On heights 0..n+1: f_0 = -seed, f_{n+1} = seed, the rest zero.  Its
/// transform is seed^(xi) (exp(-i pi (n+1) eta) - 1), which vanishes on
/// eta = 2k/(n+1), k = 0..n.
inline LineWitness construct_consecutive_witness(int n, const Density& seed) {
  if (n < 1) throw DomainError("construct_consecutive_witness: n must be >= 1");
  if (seed.is_zero()) throw DegenerateWitnessError("construct_consecutive_witness: zero seed");
  std::vector<double> heights;
  std::vector<Density> dens;
  for (int j = 0; j <= n + 1; ++j) {
    heights.push_back(j);
    dens.push_back(j == 0 ? -seed : j == n + 1 ? seed : Density{});
  }
  std::vector<double> lambda;
  for (int k = 0; k <= n; ++k) lambda.push_back(2.0 * k / (n + 1));
  return {LineMeasure(std::move(heights), std::move(dens)), std::move(lambda)};
}

/// Cross measure from the given level densities; its transform vanishes on
/// the diagonal eta = xi by antisymmetry.
inline CrossMeasure construct_cross_diagonal_witness(int n, std::vector<Density> densities) {
  if (n < 0) throw DomainError("construct_cross_diagonal_witness: n must be >= 0");
  if (densities.size() != static_cast<std::size_t>(n) + 1)
    throw DomainError("construct_cross_diagonal_witness: need n+1 densities");
  if (std::all_of(densities.begin(), densities.end(), [](const Density& d) { return d.is_zero(); }))
    throw DegenerateWitnessError("construct_cross_diagonal_witness: all densities are zero");
  return CrossMeasure(std::move(densities));
}

/// n = 1 cross measure with f_1 = -f_0.  When f_0 has zero mean its
/// transform also vanishes on the xi-axis eta = 0.
inline CrossMeasure construct_cross_axis_witness(const Density& f0) {
  if (f0.is_zero()) throw DegenerateWitnessError("construct_cross_axis_witness: zero density");
  if (std::abs(f0.ft(0.0)) > 1e-12)
    throw DomainError("construct_cross_axis_witness: f_0 must have zero mean");
  return CrossMeasure({f0, -f0});
}

/// max_{t in [-20, 20]} |f^(t + alpha) - f^(t)| over `sample_count` evenly
/// spaced t.  A positive value shows f^ is not alpha-periodic.
inline double translation_periodicity_residual(const Density& f, double alpha, int sample_count) {
  if (alpha == 0.0) throw DomainError("translation_periodicity_residual: alpha must be nonzero");
  if (sample_count < 2) throw DomainError("translation_periodicity_residual: need >= 2 samples");
  double worst = 0.0;
  for (double t : linspace(-20.0, 20.0, sample_count))
    worst = std::max(worst, std::abs(f.ft(t + alpha) - f.ft(t)));
  return worst;
}

}  // namespace hup
