#pragma once

// Power-column linear systems on unimodular nodes: the Vandermonde product
// formula, dense solves of sum_k tau_k a_j^{c_k} = -a_j^q, the symmetric
// polynomial elimination of the (n+2)x(n+2) matrix with a detached last
// power p, and the discriminant that separates the two top fiber classes.

#include <Eigen/Dense>

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "hup/config.hpp"
#include "hup/errors.hpp"
#include "hup/sympoly.hpp"

namespace hup {

using CMatrix = Eigen::MatrixXcd;

/// z^e by repeated squaring, e >= 0.
inline cplx ipow(cplx z, int e) {
  cplx r{1.0};
  while (e > 0) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

/// prod_{i<j} (a_j - a_i); 1 for fewer than two nodes.
inline cplx vandermonde_det(std::span<const cplx> nodes) {
  cplx d{1.0};
  for (std::size_t j = 1; j < nodes.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) d *= nodes[j] - nodes[i];
  return d;
}

/// Matrix with entries nodes[i]^powers[j].
inline CMatrix power_matrix(std::span<const cplx> nodes, std::span<const int> powers) {
  CMatrix m(static_cast<Eigen::Index>(nodes.size()), static_cast<Eigen::Index>(powers.size()));
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < powers.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = ipow(nodes[i], powers[j]);
  return m;
}

/// The system  sum_k tau_k a_j^{column_powers[k]} = -a_j^{target_power}.
struct PowerSystem {
  UnimodularTuple nodes;
  std::vector<int> column_powers;
  int target_power = 0;

  /// Columns 0..m-1, target m.
  static PowerSystem canonical(UnimodularTuple nodes) {
    PowerSystem s;
    const int m = static_cast<int>(nodes.size());
    s.nodes = std::move(nodes);
    for (int k = 0; k < m; ++k) s.column_powers.push_back(k);
    s.target_power = m;
    return s;
  }

  void validate() const {
    for (std::size_t k = 0; k < column_powers.size(); ++k) {
      if (column_powers[k] < 0) throw DomainError("PowerSystem: negative column power");
      if (k > 0 && column_powers[k] <= column_powers[k - 1])
        throw DomainError("PowerSystem: column powers must be strictly increasing");
    }
    if (std::find(column_powers.begin(), column_powers.end(), target_power) != column_powers.end())
      throw DomainError("PowerSystem: target power duplicates a column");
    if (target_power < 0) throw DomainError("PowerSystem: negative target power");
  }

  CMatrix matrix() const { return power_matrix(nodes.values(), column_powers); }

  Eigen::VectorXcd rhs() const {
    Eigen::VectorXcd b(static_cast<Eigen::Index>(nodes.size()));
    for (std::size_t j = 0; j < nodes.size(); ++j)
      b(static_cast<Eigen::Index>(j)) = -ipow(nodes[j], target_power);
    return b;
  }
};

/// Solution (tau_0, ...) of a power system and its max equation defect.
struct TauVector {
  CVec coefficients;
  double residual = 0.0;
};

inline double power_system_residual(const PowerSystem& sys, std::span<const cplx> tau) {
  double worst = 0.0;
  for (std::size_t j = 0; j < sys.nodes.size(); ++j) {
    cplx acc = ipow(sys.nodes[j], sys.target_power);
    for (std::size_t k = 0; k < tau.size(); ++k) acc += tau[k] * ipow(sys.nodes[j], sys.column_powers[k]);
    worst = std::max(worst, std::abs(acc));
  }
  return worst;
}

/// Dense LU with partial pivoting.  Nodes closer than the configured gap,
/// or a numerically singular generalized Vandermonde matrix, are refused.
inline TauVector solve_power_system(const PowerSystem& sys) {
  sys.validate();
  const std::size_t m = sys.nodes.size();
  if (sys.column_powers.size() != m)
    throw DomainError("solve_power_system: system is not square");
  const double gap = sys.nodes.min_gap();
  if (gap < tolerances().node_gap)
    throw IllConditionedError("solve_power_system: near-coincident nodes", gap);

  TauVector out;
  if (m == 0) return out;
  const CMatrix a = sys.matrix();
  Eigen::PartialPivLU<CMatrix> lu(a);
  if (lu.rcond() < 1e-13)
    throw IllConditionedError("solve_power_system: singular power matrix", gap);
  const Eigen::VectorXcd x = lu.solve(sys.rhs());
  out.coefficients.assign(x.data(), x.data() + x.size());
  out.residual = power_system_residual(sys, out.coefficients);
  return out;
}

/// Upper-triangular form produced by the symmetric-polynomial elimination.
struct ReducedMatrix {
  CMatrix upper;
  CVec pivots;  // diagonal of `upper`
};

/// Closed form of the last pivot:
/// (h_{p-n}(b_0..b_{n-1}, b_n) - h_{p-n}(b_0..b_{n-1}, b_{n+1})) * prod_{j<n} (b_{n+1} - b_j).
inline cplx reduction_final_pivot(std::span<const cplx> betas, int n, int p) {
  CVec with_n(betas.begin(), betas.begin() + n + 1);
  CVec with_last(betas.begin(), betas.begin() + n);
  with_last.push_back(betas[static_cast<std::size_t>(n) + 1]);
  cplx prod{1.0};
  for (int j = 0; j < n; ++j) prod *= betas[static_cast<std::size_t>(n) + 1] - betas[static_cast<std::size_t>(j)];
  return (complete_homogeneous(p - n, with_n) - complete_homogeneous(p - n, with_last)) * prod;
}

/// The (n+2)x(n+2) matrix with rows (b_i^0, ..., b_i^n, b_i^p).
inline CMatrix reduction_matrix(std::span<const cplx> betas, int n, int p) {
  std::vector<int> powers;
  for (int j = 0; j <= n; ++j) powers.push_back(j);
  powers.push_back(p);
  return power_matrix(betas, powers);
}

/// Triangularizes the detached-power matrix by the row chain
///   R_i <- R_i - (prod_{l<s}(b_i - b_l) / prod_{l<s}(b_s - b_l)) R_s,   s = 0..n-1.
/// After stage s, row i >= s holds prod_{l<s}(b_i - b_l) h_{c_j - s}(b_0..b_{s-1}, b_i)
/// in column j (c_j the column power), which is what repeated use of
///   h_k(xbar, x) - h_k(xbar, y) = (x - y) h_{k-1}(xbar, x, y)
/// gives; entries are written in that form rather than by subtraction.
/// The last 2x2 block is closed with R_{n+1} <- (Q/P) R_n - R_{n+1} together
/// with R_n <- -R_n, so the final pivot carries the sign of
/// reduction_final_pivot while the chain as a whole keeps the determinant.
inline ReducedMatrix triangular_reduce(const UnimodularTuple& betas_t, int n, int p) {
  if (n < 0) throw DomainError("triangular_reduce: n must be >= 0");
  if (p < n + 1) throw DomainError("triangular_reduce: p must be >= n+1");
  const auto betas = betas_t.values();
  if (betas.size() != static_cast<std::size_t>(n) + 2)
    throw DomainError("triangular_reduce: need exactly n+2 betas");
  const double gap = betas_t.min_gap();
  if (gap < tolerances().node_gap)
    throw IllConditionedError("triangular_reduce: coincident betas", gap);

  const int size = n + 2;
  std::vector<int> powers;
  for (int j = 0; j <= n; ++j) powers.push_back(j);
  powers.push_back(p);

  ReducedMatrix out;
  out.upper = CMatrix::Zero(size, size);
  for (int s = 0; s <= n; ++s) {
    // Row s as it stands after stage s.
    cplx scale{1.0};
    for (int l = 0; l < s; ++l) scale *= betas[s] - betas[l];
    CVec args(betas.begin(), betas.begin() + s + 1);
    const CVec h = complete_homogeneous_table(p - s, args);
    const double sign = (s == n) ? -1.0 : 1.0;
    for (int j = s; j < size; ++j) {
      const int deg = powers[static_cast<std::size_t>(j)] - s;
      out.upper(s, j) = sign * scale * h[static_cast<std::size_t>(deg)];
    }
  }
  // Closing step on row n+1.
  {
    cplx q{1.0};
    for (int l = 0; l < n; ++l) q *= betas[n + 1] - betas[l];
    CVec all(betas.begin(), betas.end());
    out.upper(n + 1, n + 1) = q * (betas[n] - betas[n + 1]) * complete_homogeneous(p - n - 1, all);
  }
  out.pivots.resize(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) out.pivots[static_cast<std::size_t>(i)] = out.upper(i, i);
  return out;
}

/// |h_{p-n}(a_0..a_n) - h_{p-n}(a_0..a_{n-1}, a_{n+1})| with a_j = exp(i pi eta_j).
inline double hup_discriminant(std::span<const double> etas, int n, int p) {
  if (n < 0) throw DomainError("hup_discriminant: n must be >= 0");
  if (p < n + 1) throw DomainError("hup_discriminant: p must be >= n+1");
  if (etas.size() != static_cast<std::size_t>(n) + 2)
    throw DomainError("hup_discriminant: need exactly n+2 etas");
  const UnimodularTuple a = UnimodularTuple::from_phases(etas);
  CVec with_n(a.values().begin(), a.values().begin() + n + 1);
  CVec with_last(a.values().begin(), a.values().begin() + n);
  with_last.push_back(a[static_cast<std::size_t>(n) + 1]);
  return std::abs(complete_homogeneous(p - n, with_n) - complete_homogeneous(p - n, with_last));
}

}  // namespace hup
