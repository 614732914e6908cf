#pragma once

// Scenario files and verification reports for the hup-lab runner.
//
// A scenario is a flat INI-style file, one scenario per file:
//
//   ; consecutive lines, n = 2
//   kind = consecutive_witness
//   n = 2
//   seed = gaussian(center=0, width=1, amp=1)
//
// Densities are sums of atoms `kind(key=value, ...)` joined by `+`, with
// keys center, width, amp, amp_im, inner.  Lists are comma separated.
// Lambda points are `xi:eta` pairs separated by `;`.  See README.md for the
// required keys of each kind.

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hup/classifier.hpp"
#include "hup/curves.hpp"
#include "hup/linsys.hpp"
#include "hup/measures.hpp"

namespace hup::cli {

/// Malformed scenario: unknown kind, missing key, unparsable value.
class UsageError : public hup::Error {
 public:
  using Error::Error;
};

class IoError : public hup::Error {
 public:
  using Error::Error;
};

/// 17 significant digits, enough to round-trip a double.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

inline double parse_double(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw UsageError("cannot parse '" + t + "' as a number for " + std::string(what));
  return v;
}

inline long parse_int(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc{} || ptr != t.data() + t.size() || t.empty())
    throw UsageError("cannot parse '" + t + "' as an integer for " + std::string(what));
  return v;
}

}  // namespace detail

/// Parses `gaussian(center=0, width=1) + odd_bump(inner=1.2, width=1)`.
inline Density parse_density(std::string_view spec) {
  std::vector<DensityAtom> atoms;
  // Split on '+' outside parentheses so exponents like 1e+3 survive.
  std::vector<std::string> terms;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= spec.size(); ++i) {
    if (i == spec.size() || (spec[i] == '+' && depth == 0)) {
      terms.push_back(detail::trim(spec.substr(start, i - start)));
      start = i + 1;
    } else if (spec[i] == '(') {
      ++depth;
    } else if (spec[i] == ')') {
      --depth;
    }
  }
  for (const auto& term : terms) {
    if (term == "zero" || term == "0") continue;
    const auto open = term.find('(');
    const auto close = term.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      throw UsageError("density atom '" + term + "' must look like kind(key=value, ...)");
    const std::string name = detail::trim(std::string_view(term).substr(0, open));
    DensityAtom a;
    if (name == "gaussian") a.kind = AtomKind::gaussian;
    else if (name == "box") a.kind = AtomKind::box;
    else if (name == "triangle") a.kind = AtomKind::triangle;
    else if (name == "odd_bump") a.kind = AtomKind::odd_bump;
    else throw UsageError("unknown density atom kind '" + name + "'");
    double re = 1.0;
    double im = 0.0;
    const std::string args = term.substr(open + 1, close - open - 1);
    if (!detail::trim(args).empty()) {
      for (const auto& kv : detail::split(args, ',')) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw UsageError("density argument '" + kv + "' needs key=value");
        const std::string key = detail::trim(std::string_view(kv).substr(0, eq));
        const double v = detail::parse_double(std::string_view(kv).substr(eq + 1), key);
        if (key == "center") a.center = v;
        else if (key == "width") a.width = v;
        else if (key == "amp") re = v;
        else if (key == "amp_im") im = v;
        else if (key == "inner") a.inner = v;
        else throw UsageError("unknown density argument '" + key + "'");
      }
    }
    a.amplitude = {re, im};
    try {
      a.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    atoms.push_back(a);
  }
  return Density(std::move(atoms));
}

/// A scenario: its kind plus every key/value in file order.
struct Scenario {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;

  bool has(const std::string& key) const {
    return std::any_of(params.begin(), params.end(), [&](const auto& kv) { return kv.first == key; });
  }
  const std::string& raw(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw UsageError("scenario kind '" + kind + "' requires key '" + key + "'");
  }
  std::string str(const std::string& key, const std::string& fallback) const {
    return has(key) ? raw(key) : fallback;
  }
  double num(const std::string& key) const { return detail::parse_double(raw(key), key); }
  double num(const std::string& key, double fallback) const { return has(key) ? num(key) : fallback; }
  int integer(const std::string& key) const { return static_cast<int>(detail::parse_int(raw(key), key)); }
  int integer(const std::string& key, int fallback) const { return has(key) ? integer(key) : fallback; }
  std::vector<double> list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& item : detail::split(raw(key), ',')) out.push_back(detail::parse_double(item, key));
    return out;
  }
  Density density(const std::string& key, const std::string& fallback) const {
    return parse_density(str(key, fallback));
  }
};

inline const std::vector<std::string>& scenario_kinds() {
  static const std::vector<std::string> kinds = {
      "consecutive_witness", "cross_witness", "exp_curve_witness", "surface_witness", "classify",
      "discriminant",        "reduce",        "ft_grid",           "kronecker_check"};
  return kinds;
}

inline Scenario parse_scenario(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw UsageError(std::string("scenario syntax: ") + e.what());
  }
  Scenario s;
  for (const auto& [key, node] : tree) {
    if (!node.empty()) throw UsageError("scenario files are flat; section [" + key + "] not allowed");
    if (key == "kind") s.kind = detail::trim(node.data());
    else s.params.emplace_back(key, detail::trim(node.data()));
  }
  if (s.kind.empty()) throw UsageError("scenario has no 'kind'");
  const auto& kinds = scenario_kinds();
  if (std::find(kinds.begin(), kinds.end(), s.kind) == kinds.end())
    throw UsageError("unknown scenario kind '" + s.kind + "'");
  return s;
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  return parse_scenario(in);
}

struct Check {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool at_most = true;  // value <= threshold; otherwise value >= threshold
  bool pass() const { return at_most ? value <= threshold : value >= threshold; }
};

struct Report {
  Scenario scenario;
  std::vector<std::pair<std::string, std::string>> values;
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
  }
  void value(std::string name, double v) { values.emplace_back(std::move(name), fmt_double(v)); }
  void value(std::string name, std::string v) { values.emplace_back(std::move(name), std::move(v)); }
  void at_most(std::string name, double v, double thr) { checks.push_back({std::move(name), v, thr, true}); }
  void at_least(std::string name, double v, double thr) { checks.push_back({std::move(name), v, thr, false}); }
};

inline void write_report(std::ostream& out, const Report& r) {
  out << "scenario: " << r.scenario.kind << '\n';
  for (const auto& [k, v] : r.scenario.params) out << "param " << k << " = " << v << '\n';
  for (const auto& [k, v] : r.values) out << "value " << k << " = " << v << '\n';
  for (const auto& c : r.checks)
    out << "check " << c.name << ": " << fmt_double(c.value) << (c.at_most ? " <= " : " >= ")
        << fmt_double(c.threshold) << ' ' << (c.pass() ? "PASS" : "FAIL") << '\n';
  out << "status: " << (r.pass() ? "PASS" : "FAIL") << '\n';
}

inline std::string format_report(const Report& r) {
  std::ostringstream os;
  write_report(os, r);
  return os.str();
}

struct RunOptions {
  std::optional<double> tolerance;  // replaces the scenario's vanishing tolerance
};

namespace detail {

inline double vanishing_tolerance(const Scenario& s, const RunOptions& o, double fallback) {
  return o.tolerance ? *o.tolerance : s.num("tolerance", fallback);
}

inline void require_range(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

inline std::vector<Density> level_densities(const Scenario& s, int count) {
  std::vector<Density> out;
  for (int k = 0; k < count; ++k)
    out.push_back(s.density("density" + std::to_string(k), "gaussian(center=0, width=1, amp=1)"));
  return out;
}

inline Report run_consecutive(const Scenario& s, const RunOptions& o) {
  const int n = s.integer("n");
  require_range(n >= 1, "consecutive_witness requires n >= 1");
  const double step = s.num("xi_step", 0.02);
  require_range(step > 0, "xi_step must be positive");
  const auto w = construct_consecutive_witness(n, s.density("seed", "gaussian(center=0, width=1, amp=1)"));
  const auto xis = grid_points(s.num("xi_min", -10.0), s.num("xi_max", 10.0), step);
  double on = 0.0;
  double off = 0.0;
  for (double xi : xis) {
    for (double eta : w.lambda_heights) on = std::max(on, std::abs(line_system_ft(w.measure, xi, eta)));
    for (int k = 0; k <= n; ++k)
      off = std::max(off, std::abs(line_system_ft(w.measure, xi, (2.0 * k + 1.0) / (n + 1))));
  }
  Report r{s, {}, {}};
  std::string hs;
  for (double h : w.lambda_heights) hs += (hs.empty() ? "" : ", ") + fmt_double(h);
  r.value("lambda_heights", hs);
  r.value("grid_points", static_cast<double>(xis.size()));
  r.at_most("max_abs_on_lambda", on, vanishing_tolerance(s, o, 1e-12));
  r.at_least("max_abs_off_lambda", off, s.num("off_threshold", 1e-3));
  return r;
}

inline Report run_cross(const Scenario& s, const RunOptions& o) {
  const int n = s.integer("n");
  require_range(n >= 0, "cross_witness requires n >= 0");
  const std::string mode = s.str("mode", "diagonal");
  require_range(mode == "diagonal" || mode == "xi_axis", "cross_witness mode must be diagonal or xi_axis");
  const int count = s.integer("grid_count", 1001);
  require_range(count >= 2, "grid_count must be >= 2");
  if (mode == "xi_axis") require_range(n == 1, "cross_witness mode xi_axis requires n = 1");
  const auto m = mode == "xi_axis"
                     ? construct_cross_axis_witness(s.density("density0", "odd_bump(inner=0.5, width=1, amp=1)"))
                     : construct_cross_diagonal_witness(n, level_densities(s, n + 1));
  const auto ts = linspace(s.num("grid_min", -10.0), s.num("grid_max", 10.0), count);
  double diag = 0.0;
  double axis = 0.0;
  double shifted = 0.0;
  for (double t : ts) {
    diag = std::max(diag, std::abs(cross_ft(m, t, t)));
    axis = std::max(axis, std::abs(cross_ft(m, t, 0.0)));
    shifted = std::max(shifted, std::abs(cross_ft(m, t, t + 1.0)));
  }
  Report r{s, {}, {}};
  const double tol = vanishing_tolerance(s, o, 1e-12);
  r.at_most("max_abs_diagonal", diag, tol);
  if (mode == "xi_axis") r.at_most("max_abs_xi_axis", axis, tol);
  else r.value("max_abs_xi_axis", axis);
  r.at_least("max_abs_shifted_diagonal", shifted, s.num("off_threshold", 1e-3));
  return r;
}

inline Report run_exp_curve(const Scenario& s, const RunOptions& o) {
  const double c = s.num("c");
  require_range(c != 0.0, "exp_curve_witness requires c != 0");
  const double d = s.num("d", 1.0);
  const int count = s.integer("x_count", 101);
  require_range(count >= 2, "x_count must be >= 2");
  const Density phi = s.density("phi", "odd_bump(center=0, inner=1.2, width=1, amp=1)");
  const auto g = construct_single_line_witness(c, phi);

  double on = 0.0;
  double off = 0.0;
  double err = 0.0;
  for (double x : linspace(s.num("x_min", -5.0), s.num("x_max", 5.0), count)) {
    const auto a = exp_curve_ft(g, x, c * x);
    on = std::max(on, std::abs(a.value));
    err = std::max(err, a.error);
    off = std::max(off, std::abs(exp_curve_ft(g, x, c * x + d).value));
  }
  const auto g_mass = integrate_adaptive([&](double t) { return std::abs(g(t)); }, g.intervals());
  const auto phi_pieces = phi.support_pieces();
  const auto phi_mass = integrate_adaptive([&](double u) { return std::abs(phi(u)); }, phi_pieces);

  Report r{s, {}, {}};
  const HcFunction hc(c);
  r.value("t_min", hc.t_min());
  r.value("h_min", hc.h_min());
  r.value("support_radius", g.support_radius());
  r.value("max_quadrature_error", err);
  r.value("l1_g", std::abs(g_mass.value));
  r.value("l1_phi", std::abs(phi_mass.value));
  r.at_most("max_abs_on_line", on, vanishing_tolerance(s, o, 1e-6));
  r.at_least("l1_ratio", std::abs(g_mass.value) / std::abs(phi_mass.value), s.num("mass_ratio", 0.1));
  r.at_least("max_abs_shifted_line", off, s.num("off_threshold", 1e-3));
  return r;
}

inline Report run_surface(const Scenario& s, const RunOptions& o) {
  const std::string which = s.str("case", "i");
  require_range(which == "i" || which == "ii", "surface_witness case must be i or ii");
  const int count = s.integer("count", 21);
  require_range(count >= 2, "count must be >= 2");
  const auto axis = linspace(s.num("range_min", -5.0), s.num("range_max", 5.0), count);
  const CurveDensity h = CurveDensity::mixture(s.density("h", "triangle(center=0, width=1, amp=1)"));

  double worst = 0.0;
  double err = 0.0;
  if (which == "i") {
    const CurveDensity psi =
        CurveDensity::mixture(s.density("psi", "odd_bump(center=0, inner=0.2, width=0.8, amp=1)"));
    for (const auto& pd : psi.atoms()->atoms())
      require_range(pd.kind == AtomKind::odd_bump && pd.center == 0.0, "case i needs psi odd about 0");
    for (double x2 : axis)
      for (double x3 : axis) {
        const auto v = surface_ft(psi, h, {0.0, x2, x3});
        worst = std::max(worst, std::abs(v.value));
        err = std::max(err, v.error);
      }
  } else {
    const double c = s.num("c");
    require_range(c != 0.0, "surface_witness case ii requires c != 0");
    const CurveDensity tau = construct_single_line_witness(
        c, s.density("psi", "odd_bump(center=0, inner=1.2, width=1, amp=1)"));
    for (double x1 : axis)
      for (double x2 : axis) {
        const auto v = surface_ft(tau, h, {x1, x2, c * x1});
        worst = std::max(worst, std::abs(v.value));
        err = std::max(err, v.error);
      }
  }
  Report r{s, {}, {}};
  r.value("samples", static_cast<double>(axis.size() * axis.size()));
  r.value("max_quadrature_error", err);
  r.at_most("max_abs_on_hyperplane", worst, vanishing_tolerance(s, o, 1e-6));
  return r;
}

inline LambdaSet scenario_lambda(const Scenario& s) {
  LambdaSet raw;
  if (s.has("points")) {
    for (const auto& item : split(s.raw("points"), ';')) {
      if (item.empty()) continue;
      const auto parts = split(item, ':');
      if (parts.size() != 2) throw UsageError("lambda point '" + item + "' must be xi:eta");
      raw.points.push_back({parse_double(parts[0], "points"), parse_double(parts[1], "points")});
    }
  } else {
    const double step = s.num("xi_step", 0.5);
    require_range(step > 0, "xi_step must be positive");
    const auto heights = s.list("heights");
    for (double xi : grid_points(s.num("xi_min", -10.0), s.num("xi_max", 10.0), step))
      for (double h : heights) raw.points.push_back({xi, h});
  }
  return fold_periodic(raw);
}

inline Report run_classify(const Scenario& s, const RunOptions&) {
  const int n = s.integer("n");
  const int p = s.integer("p");
  require_range(n >= 0 && p >= n + 1, "classify requires n >= 0 and p >= n+1");
  const LambdaSet lambda = scenario_lambda(s);
  const FiberPartition part = partition(lambda, n, p);
  const auto sizes = part.class_sizes(n);
  std::size_t total = 0;
  Report r{s, {}, {}};
  r.value("fibers", static_cast<double>(part.fibers.size()));
  for (int m = 1; m <= n + 2; ++m) {
    r.value("class_" + std::to_string(m), static_cast<double>(sizes[static_cast<std::size_t>(m)]));
    total += sizes[static_cast<std::size_t>(m)];
  }
  r.at_most("partition_defect",
            std::abs(static_cast<double>(total) - static_cast<double>(part.fibers.size())), 0.0);
  if (s.has("expect_class")) {
    const int want = s.integer("expect_class");
    std::size_t miss = 0;
    for (const auto& [xi, f] : part.fibers) miss += f.cls != want;
    r.at_most("fibers_outside_expected_class", static_cast<double>(miss), 0.0);
  }
  return r;
}

inline Report run_discriminant(const Scenario& s, const RunOptions& o) {
  const int n = s.integer("n");
  const int p = s.integer("p");
  require_range(n >= 0 && p >= n + 1, "discriminant requires n >= 0 and p >= n+1");
  const auto etas = s.list("etas");
  require_range(etas.size() == static_cast<std::size_t>(n) + 2, "discriminant requires n+2 etas");
  const double v = hup_discriminant(etas, n, p);
  Report r{s, {}, {}};
  r.value("discriminant", v);
  if (s.has("expect"))
    r.at_most("abs_error_vs_expect", std::abs(v - s.num("expect")), vanishing_tolerance(s, o, 1e-12));
  return r;
}

inline Report run_reduce(const Scenario& s, const RunOptions& o) {
  const int n = s.integer("n");
  const int p = s.integer("p");
  require_range(n >= 0 && p >= n + 1, "reduce requires n >= 0 and p >= n+1");
  const auto etas = s.list("etas");
  require_range(etas.size() == static_cast<std::size_t>(n) + 2, "reduce requires n+2 etas");
  const auto betas = UnimodularTuple::from_phases(etas);
  const auto red = triangular_reduce(betas, n, p);
  const cplx det = reduction_matrix(betas.values(), n, p).determinant();
  cplx prod{1.0};
  for (const auto& v : red.pivots) prod *= v;
  const cplx closed = reduction_final_pivot(betas.values(), n, p);
  const cplx last = red.pivots.back();
  const double tol = vanishing_tolerance(s, o, 1e-9);
  Report r{s, {}, {}};
  r.value("det_re", det.real());
  r.value("det_im", det.imag());
  r.value("final_pivot_re", last.real());
  r.value("final_pivot_im", last.imag());
  r.at_most("pivot_product_rel_error", std::abs(prod - det) / std::max(std::abs(det), 1e-300), tol);
  r.at_most("final_pivot_rel_error", std::abs(last - closed) / std::max(std::abs(closed), 1e-300), tol);
  return r;
}

/// Evaluator for an ft_grid scenario plus the eta values (if any) on which
/// it is known to vanish.
struct GridMeasure {
  std::function<cplx(double, double)> ft;
  std::vector<double> vanishing_etas;
};

inline GridMeasure grid_measure(const Scenario& s) {
  const std::string kind = s.str("measure", "line");
  if (kind == "line") {
    const auto heights = s.list("heights");
    auto dens = level_densities(s, static_cast<int>(heights.size()));
    auto m = std::make_shared<LineMeasure>(heights, std::move(dens));
    return {[m](double xi, double eta) { return line_system_ft(*m, xi, eta); }, {}};
  }
  if (kind == "cross") {
    const int n = s.integer("n");
    require_range(n >= 0, "cross measure requires n >= 0");
    auto m = std::make_shared<CrossMeasure>(level_densities(s, n + 1));
    return {[m](double xi, double eta) { return cross_ft(*m, xi, eta); }, {}};
  }
  if (kind == "consecutive_witness") {
    const int n = s.integer("n");
    require_range(n >= 1, "consecutive_witness measure requires n >= 1");
    auto w = std::make_shared<LineWitness>(
        construct_consecutive_witness(n, s.density("seed", "gaussian(center=0, width=1, amp=1)")));
    return {[w](double xi, double eta) { return line_system_ft(w->measure, xi, eta); }, w->lambda_heights};
  }
  throw UsageError("ft_grid measure must be line, cross or consecutive_witness");
}

struct GridAxes {
  std::vector<double> xi;
  std::vector<double> eta;
};

inline GridAxes grid_axes(const Scenario& s) {
  const int nx = s.integer("xi_count", 11);
  const int ne = s.integer("eta_count", 11);
  require_range(nx >= 1 && ne >= 1, "grid counts must be >= 1");
  return {linspace(s.num("xi_min", -1.0), s.num("xi_max", 1.0), nx),
          linspace(s.num("eta_min", 0.0), s.num("eta_max", 2.0), ne)};
}

inline bool on_heights(double eta, const std::vector<double>& heights) {
  return std::any_of(heights.begin(), heights.end(), [&](double h) {
    return hup::detail::eta_distance(hup::detail::fold_eta(eta), hup::detail::fold_eta(h)) <= 1e-12;
  });
}

inline Report run_ft_grid(const Scenario& s, const RunOptions& o) {
  const GridMeasure gm = grid_measure(s);
  const GridAxes ax = grid_axes(s);
  double worst = 0.0;
  double on = 0.0;
  std::size_t on_rows = 0;
  for (double xi : ax.xi)
    for (double eta : ax.eta) {
      const double a = std::abs(gm.ft(xi, eta));
      worst = std::max(worst, a);
      if (on_heights(eta, gm.vanishing_etas)) {
        on = std::max(on, a);
        ++on_rows;
      }
    }
  Report r{s, {}, {}};
  r.value("rows", static_cast<double>(ax.xi.size() * ax.eta.size()));
  r.value("max_abs", worst);
  if (!gm.vanishing_etas.empty()) {
    r.value("rows_on_lambda", static_cast<double>(on_rows));
    r.at_most("max_abs_on_lambda", on, vanishing_tolerance(s, o, 1e-12));
  }
  if (s.has("expect_max_abs_le")) r.at_most("max_abs_bound", worst, s.num("expect_max_abs_le"));
  return r;
}

inline Report run_kronecker(const Scenario& s, const RunOptions&) {
  const Density f = s.density("density", "gaussian(center=0, width=1, amp=1)");
  const int samples = s.integer("samples", 4001);
  require_range(samples >= 2, "samples must be >= 2");
  const double thr = s.num("threshold", 1e-3);
  Report r{s, {}, {}};
  for (const char* key : {"alpha1", "alpha2"}) {
    const double alpha = s.num(key);
    require_range(alpha != 0.0, std::string(key) + " must be nonzero");
    r.at_least(std::string("periodicity_residual_") + key, translation_periodicity_residual(f, alpha, samples), thr);
  }
  return r;
}

}  // namespace detail

/// Runs one scenario.  Library errors (ill-conditioned nodes, budget
/// refusals, ...) propagate unchanged.
inline Report run_scenario(const Scenario& s, const RunOptions& o = {}) {
  using namespace detail;
  if (s.kind == "consecutive_witness") return run_consecutive(s, o);
  if (s.kind == "cross_witness") return run_cross(s, o);
  if (s.kind == "exp_curve_witness") return run_exp_curve(s, o);
  if (s.kind == "surface_witness") return run_surface(s, o);
  if (s.kind == "classify") return run_classify(s, o);
  if (s.kind == "discriminant") return run_discriminant(s, o);
  if (s.kind == "reduce") return run_reduce(s, o);
  if (s.kind == "ft_grid") return run_ft_grid(s, o);
  if (s.kind == "kronecker_check") return run_kronecker(s, o);
  throw UsageError("unknown scenario kind '" + s.kind + "'");
}

/// CSV `xi,eta,re,im,abs`, xi-major, 17 significant digits.
inline void write_grid_csv(const Scenario& s, std::ostream& out) {
  if (s.kind != "ft_grid") throw UsageError("grid output requires kind = ft_grid");
  const auto gm = detail::grid_measure(s);
  const auto ax = detail::grid_axes(s);
  out << "xi,eta,re,im,abs\n";
  for (double xi : ax.xi)
    for (double eta : ax.eta) {
      const cplx v = gm.ft(xi, eta);
      out << fmt_double(xi) << ',' << fmt_double(eta) << ',' << fmt_double(v.real()) << ','
          << fmt_double(v.imag()) << ',' << fmt_double(std::abs(v)) << '\n';
    }
}

}  // namespace hup::cli
