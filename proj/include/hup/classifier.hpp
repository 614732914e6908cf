#pragma once

// Folding of candidate sets mod 2 in eta, fibers over xi, and the split of
// the projection into classes 1..n+2:
//   class m (m <= n)  exactly m distinct fiber values;
//   class n+2         some n+2 fiber values a_0..a_{n+1} (shared prefix
//                     a_0..a_{n-1}) with h_{p-n}(.., a_n) != h_{p-n}(.., a_{n+1});
//   class n+1         at least n+1 values and no such choice.
// Fibers with at least p+1 values are class n+2 outright: for a fixed
// prefix, x -> h_{p-n}(prefix, x) takes any value at most p-n times.
//
// Dispensable subsets of each class are not detected; that needs local
// Fourier representability of functions on the class, which finite point
// data cannot decide.

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "hup/config.hpp"
#include "hup/errors.hpp"
#include "hup/linsys.hpp"

namespace hup {

struct LambdaPoint {
  double xi = 0.0;
  double eta = 0.0;
  friend bool operator==(const LambdaPoint&, const LambdaPoint&) = default;
};

struct LambdaSet {
  std::vector<LambdaPoint> points;
  bool folded = false;
};

namespace detail {
inline double fold_eta(double eta) {
  double r = std::fmod(eta, 2.0);
  if (r < 0) r += 2.0;
  if (r >= 2.0) r = 0.0;  // fmod of tiny negatives can round up to 2
  return r;
}

/// Distance on the circle R / 2Z.
inline double eta_distance(double a, double b) {
  const double d = std::abs(a - b);
  return std::min(d, 2.0 - d);
}
}  // namespace detail

/// Reduces every eta into [0, 2) and merges points closer than the merge
/// radius in both coordinates.  Output is sorted by (xi, eta).
inline LambdaSet fold_periodic(const LambdaSet& raw) {
  const double tol = tolerances().merge;
  std::vector<LambdaPoint> pts;
  pts.reserve(raw.points.size());
  for (const auto& p : raw.points) pts.push_back({p.xi, detail::fold_eta(p.eta)});
  std::sort(pts.begin(), pts.end(),
            [](const LambdaPoint& a, const LambdaPoint& b) { return a.xi < b.xi || (a.xi == b.xi && a.eta < b.eta); });
  LambdaSet out;
  out.folded = true;
  for (const auto& p : pts) {
    const bool dup = std::any_of(out.points.rbegin(), out.points.rend(), [&](const LambdaPoint& q) {
      return std::abs(q.xi - p.xi) <= tol && detail::eta_distance(q.eta, p.eta) <= tol;
    });
    if (!dup) out.points.push_back(p);
  }
  return out;
}

/// Sorted eta values of points with |xi' - xi| <= merge radius.
inline std::vector<double> fiber(const LambdaSet& lambda, double xi) {
  if (!lambda.folded) throw DomainError("fiber: LambdaSet must be folded first");
  const double tol = tolerances().merge;
  std::vector<double> out;
  for (const auto& p : lambda.points)
    if (std::abs(p.xi - xi) <= tol) {
      const bool dup = std::any_of(out.begin(), out.end(),
                                   [&](double e) { return detail::eta_distance(e, p.eta) <= tol; });
      if (!dup) out.push_back(p.eta);
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1L << 40)) return r;
  }
  return r;
}
}  // namespace detail

/// Number of (prefix, pair) choices classify_fiber would examine.
inline long classifier_search_size(std::size_t fiber_size, int n) {
  const long m = static_cast<long>(fiber_size);
  return detail::binomial(m, n) * detail::binomial(m - n, 2);
}

/// Class index in 1..n+2 for one fiber of distinct etas.
inline int classify_fiber(std::span<const double> etas, int n, int p) {
  if (etas.empty()) throw DomainError("classify_fiber: empty fiber");
  if (n < 0 || p < n + 1) throw DomainError("classify_fiber: need n >= 0 and p >= n+1");
  const auto m = static_cast<int>(etas.size());
  if (m <= n) return m;
  if (m >= p + 1) return n + 2;
  if (m == n + 1) return n + 1;

  const long work = classifier_search_size(etas.size(), n);
  if (work > tolerances().subset_cap)
    throw CapExceededError("classify_fiber: subset search of " + std::to_string(work) + " exceeds cap");

  const UnimodularTuple a = UnimodularTuple::from_phases(etas);
  const double thr = tolerances().discriminant;
  // Enumerate n-subsets as the shared prefix via a selection mask.
  std::vector<char> in_prefix(static_cast<std::size_t>(m), 0);
  std::fill(in_prefix.end() - n, in_prefix.end(), 1);
  do {
    CVec prefix;
    std::vector<int> rest;
    for (int i = 0; i < m; ++i) {
      if (in_prefix[static_cast<std::size_t>(i)]) prefix.push_back(a[static_cast<std::size_t>(i)]);
      else rest.push_back(i);
    }
    // h_{p-n}(prefix, x) for every remaining x, then compare all pairs.
    std::vector<cplx> values;
    for (int i : rest) {
      CVec args = prefix;
      args.push_back(a[static_cast<std::size_t>(i)]);
      values.push_back(complete_homogeneous(p - n, args));
    }
    for (std::size_t i = 0; i < values.size(); ++i)
      for (std::size_t j = i + 1; j < values.size(); ++j)
        if (std::abs(values[i] - values[j]) > thr) return n + 2;
  } while (std::next_permutation(in_prefix.begin(), in_prefix.end()));
  return n + 1;
}

struct FiberInfo {
  std::vector<double> etas;
  int cls = 0;
};

/// Fibers and classes keyed by the smallest xi of each merged group.
struct FiberPartition {
  std::map<double, FiberInfo> fibers;

  std::vector<std::size_t> class_sizes(int n) const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(n) + 3, 0);
    for (const auto& [xi, f] : fibers) ++sizes[static_cast<std::size_t>(f.cls)];
    return sizes;
  }
};

inline FiberPartition partition(const LambdaSet& lambda, int n, int p) {
  if (!lambda.folded) throw DomainError("partition: LambdaSet must be folded first");
  const double tol = tolerances().merge;
  std::vector<LambdaPoint> pts = lambda.points;
  std::sort(pts.begin(), pts.end(), [](const LambdaPoint& a, const LambdaPoint& b) { return a.xi < b.xi; });
  FiberPartition out;
  std::size_t i = 0;
  while (i < pts.size()) {
    const double key = pts[i].xi;
    std::vector<double> etas;
    // Group by distance to the group's first xi, matching fiber().
    while (i < pts.size() && pts[i].xi - key <= tol) {
      const double e = pts[i].eta;
      if (std::none_of(etas.begin(), etas.end(), [&](double x) { return detail::eta_distance(x, e) <= tol; }))
        etas.push_back(e);
      ++i;
    }
    std::sort(etas.begin(), etas.end());
    FiberInfo info{etas, classify_fiber(etas, n, p)};
    out.fibers.emplace(key, std::move(info));
  }
  return out;
}

}  // namespace hup
