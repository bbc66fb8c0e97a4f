#pragma once

// Heat and cylinder kernel traces, the hemisphere factorisation, and weighted
// least-squares extraction of short-time expansion coefficients.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/special_functions/gamma.hpp>

#include "coeffs.hpp"
#include "domains.hpp"
#include "error.hpp"
#include "interval.hpp"
#include "numeric.hpp"

namespace hybridspec::kernels {

using domains::Spectrum;
using interval::BcKind;

enum class TraceKind { heat, cylinder };

inline const char* to_string(TraceKind k) { return k == TraceKind::heat ? "heat" : "cylinder"; }

struct TraceSamples {
  std::vector<double> t_values;
  std::vector<double> k_values;
  TraceKind kind = TraceKind::heat;
  double truncation_bound = 0;  // uniform absolute bound on the omitted tail
};

// Spectrum of k^2 for interval wavenumbers; complete up to the largest k.
inline Spectrum interval_spectrum(const interval::WaveNumbers& w) {
  Spectrum s;
  std::vector<double> l;
  l.reserve(w.values.size());
  for (double k : w.values) l.push_back(k * k);
  s.levels = domains::merge_levels(std::move(l));
  s.cutoff = w.values.empty() ? 0 : w.values.back() * w.values.back();
  s.zero_mode_count = w.zero_mode_count;
  s.dimension = 1;
  return s;
}

// Bound on the omitted part of the trace at t. The counting function above the
// cutoff is bounded by twice the Weyl-type density measured below it,
// N(lambda) <= 2 c lambda^{d/2}, which integrates in closed form.
inline double tail_bound(const Spectrum& s, double t, TraceKind kind) {
  const double d = s.dimension;
  std::size_t n = 0;
  for (const auto& l : s.levels) n += l.degeneracy;
  if (n == 0 || s.cutoff <= 0) return std::numeric_limits<double>::infinity();
  const double c = n / std::pow(s.cutoff, d / 2);
  if (kind == TraceKind::heat) {
    return 2 * c * boost::math::tgamma(d / 2 + 1, s.cutoff * t) / std::pow(t, d / 2);
  }
  const double K = std::sqrt(s.cutoff);
  return 2 * c * boost::math::tgamma(d + 1, K * t) / std::pow(t, d);
}

inline double trace_at(const Spectrum& s, double t, TraceKind kind) {
  CompensatedSum<double> sum;
  // Ascending eigenvalues give descending terms; the zero modes go last.
  for (const auto& l : s.levels) {
    double e = kind == TraceKind::heat ? l.lambda : std::sqrt(l.lambda);
    sum += l.degeneracy * std::exp(-e * t);
  }
  sum += s.zero_mode_count;
  return sum.value();
}

// Trace over a grid of t. Fails when the tail bound at the smallest t is not
// below max_relative_tail times the trace there.
inline TraceSamples trace(const Spectrum& s, std::vector<double> t_grid, TraceKind kind, double max_relative_tail = 1e-8) {
  require(!t_grid.empty(), ErrorKind::domain, "trace: empty t grid");
  for (double t : t_grid) require(std::isfinite(t) && t > 0, ErrorKind::domain, "trace: t values must be positive");
  std::sort(t_grid.begin(), t_grid.end());
  TraceSamples out;
  out.kind = kind;
  out.t_values = t_grid;
  out.k_values.resize(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t i) { out.k_values[i] = trace_at(s, t_grid[i], kind); });
  out.truncation_bound = tail_bound(s, t_grid.front(), kind);
  double kmin = *std::min_element(out.k_values.begin(), out.k_values.end());
  if (!(out.truncation_bound <= max_relative_tail * std::abs(kmin)))
    fail(ErrorKind::insufficient_cutoff, "trace: spectral cutoff too low for the smallest t");
  return out;
}

// T_I(t) / (2 sinh(t/2)) with T_I(t) = sum_m exp(-k_m t) over the azimuthal
// interval wavenumbers (the constant mode counts once when present).
inline double hemisphere_cylinder_factorized(double h, BcKind bc0, double t) {
  require(std::isfinite(t) && t > 0, ErrorKind::domain, "hemisphere_cylinder_factorized: t must be positive");
  domains::HemisphereProblem p{bc0, h};
  p.validate();
  int count = static_cast<int>(std::ceil(45.0 / t)) + 8;
  for (;;) {
    auto w = interval::wavenumbers(p.azimuthal(), count);
    CompensatedSum<double> sum;
    for (double k : w.values) sum += std::exp(-k * t);
    sum += w.zero_mode_count;
    // Consecutive wavenumbers are at least 1/2 apart.
    double last = std::exp(-w.values.back() * t);
    double tail = last * std::exp(-0.5 * t) / (-std::expm1(-0.5 * t));
    if (tail < 1e-17 * sum.value()) return sum.value() / (2 * std::sinh(0.5 * t));
    count *= 2;
    if (count > 100000) fail(ErrorKind::non_convergence, "hemisphere_cylinder_factorized: interval sum did not converge");
  }
}

// ----------------------------------------------------------------- fitting

struct ExpansionBasis {
  std::vector<double> plain_exponents;
  std::vector<double> log_exponents;

  void validate() const {
    auto increasing = [](const std::vector<double>& v) {
      for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1])) return false;
      return true;
    };
    require(increasing(plain_exponents) && increasing(log_exponents), ErrorKind::domain,
            "expansion exponents must be strictly increasing");
    auto half_integer = [](double e) { return std::abs(2 * e - std::round(2 * e)) < 1e-12; };
    for (double e : plain_exponents) require(half_integer(e), ErrorKind::domain, "exponents must be half-integers");
    for (double e : log_exponents) require(half_integer(e), ErrorKind::domain, "exponents must be half-integers");
  }
};

// Coefficients held at analytic values instead of being fitted.
struct Pins {
  std::map<double, double> plain;
  std::map<double, double> log;
};

struct AsymptoticFit {
  std::map<double, double> plain;  // exponent -> coefficient (fitted and pinned)
  std::map<double, double> log;    // exponent -> coefficient of t^p log t
  Pins pinned;
  double residual_rms = 0;  // relative residual, rms over samples
  double condition_estimate = 0;
  double t_min = 0, t_max = 0;
  int samples = 0;
};

inline AsymptoticFit fit_expansion(const TraceSamples& s, const ExpansionBasis& basis, const Pins& pins = {},
                                   double max_condition = 1e10) {
  basis.validate();
  require(s.t_values.size() == s.k_values.size(), ErrorKind::domain, "fit: sample arrays differ in length");
  struct Column {
    double exponent;
    bool log;
  };
  std::vector<Column> cols;
  for (double e : basis.plain_exponents)
    if (!pins.plain.count(e)) cols.push_back({e, false});
  for (double e : basis.log_exponents)
    if (!pins.log.count(e)) cols.push_back({e, true});
  const std::size_t n = s.t_values.size(), p = cols.size();
  require(p >= 1, ErrorKind::domain, "fit: no free columns");
  require(n >= 2 * p, ErrorKind::domain, "fit: need at least two samples per free column");
  double kmin = std::abs(*std::min_element(s.k_values.begin(), s.k_values.end(),
                                           [](double a, double b) { return std::abs(a) < std::abs(b); }));
  require(s.truncation_bound < 1e-8 * kmin, ErrorKind::insufficient_cutoff, "fit: truncation bound too large for fitting");

  Eigen::MatrixXd A(n, p);
  Eigen::VectorXd b(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = s.t_values[i], w = 1 / s.k_values[i], lt = std::log(t);
    double y = s.k_values[i];
    for (const auto& [e, c] : pins.plain) y -= c * std::pow(t, e);
    for (const auto& [e, c] : pins.log) y -= c * std::pow(t, e) * lt;
    b(i) = w * y;
    for (std::size_t j = 0; j < p; ++j) A(i, j) = w * std::pow(t, cols[j].exponent) * (cols[j].log ? lt : 1.0);
  }
  Eigen::VectorXd scale = A.colwise().norm().transpose();
  for (std::size_t j = 0; j < p; ++j) A.col(j) /= scale(j);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  AsymptoticFit fit;
  fit.condition_estimate = sv(0) / sv(sv.size() - 1);
  if (!(fit.condition_estimate <= max_condition)) fail(ErrorKind::ill_conditioned, "fit: condition estimate exceeds limit");
  Eigen::VectorXd x = svd.solve(b);
  Eigen::VectorXd r = A * x - b;
  fit.residual_rms = std::sqrt(r.squaredNorm() / n);
  for (std::size_t j = 0; j < p; ++j) (cols[j].log ? fit.log : fit.plain)[cols[j].exponent] = x(j) / scale(j);
  for (const auto& [e, c] : pins.plain) fit.plain[e] = c;
  for (const auto& [e, c] : pins.log) fit.log[e] = c;
  fit.pinned = pins;
  fit.t_min = s.t_values.front();
  fit.t_max = s.t_values.back();
  fit.samples = static_cast<int>(n);
  return fit;
}

// ------------------------------------------------------ log-term detection

struct LogDetection {
  double h = 0;
  double log_coefficient = 0;  // fitted coefficient of log t
  double expected = 0;         // -h / (2 pi)
  double residual_with_log = 0;
  double residual_without_log = 0;
  double improvement_ratio = 0;
  int excluded_rows = 0;
  AsymptoticFit with_log;
  AsymptoticFit without_log;
};

struct LogDetectionOptions {
  double lambda_max = 8000;
  double t_min = 0.005;
  double t_max = 0.1;
  int points = 60;
};

// Heat trace of -Laplacian + 1/4 on the Robin hemisphere fitted with and
// without the t^0 log t column. The area term 1/(2t) is pinned; a row of the
// azimuthal spectrum lost to an imaginary root removes (1/2) sqrt(pi / t).
inline LogDetection detect_log_terms(double h, BcKind bc0, const LogDetectionOptions& opt = {}) {
  domains::HemisphereProblem p{bc0, h};
  auto spec = domains::hemisphere_spectrum(p, opt.lambda_max);
  auto samples = trace(spec, log_grid(opt.t_min, opt.t_max, opt.points), TraceKind::heat);
  auto w = interval::wavenumbers(p.azimuthal(), 1);
  LogDetection out;
  out.h = h;
  out.expected = -h / (2 * pi);
  out.excluded_rows = w.first_branch > 0 && w.zero_mode_count == 0 ? 1 : 0;
  Pins pins;
  pins.plain[-1.0] = 0.5;
  pins.plain[-0.5] = -0.5 * std::sqrt(pi) * out.excluded_rows;
  const std::vector<double> plain = {-1.0, -0.5, 0.0, 1.0, 2.0, 3.0};
  out.with_log = fit_expansion(samples, {plain, {0.0}}, pins);
  out.without_log = fit_expansion(samples, {plain, {}}, pins);
  out.log_coefficient = out.with_log.log.at(0.0);
  out.residual_with_log = out.with_log.residual_rms;
  out.residual_without_log = out.without_log.residual_rms;
  out.improvement_ratio = out.residual_without_log / out.residual_with_log;
  return out;
}


// ------------------------------------------------------ half-disc peel-off

struct HalfDiscFit {
  BcKind diameter = BcKind::dirichlet, arc = BcKind::dirichlet;
  double inverse_t = 0, inverse_sqrt_t = 0;  // pinned leading terms
  double constant = 0;                       // fitted freely
  double constant_expected = 0;              // C_1 / (4 pi)
  double sqrt_t = 0;                         // fitted with the constant pinned
  AsymptoticFit constant_fit, sqrt_fit;
  std::size_t modes = 0;
};

struct HalfDiscFitOptions {
  double lambda_max = 8000;
  double t_min = 0.005;
  double t_max = 0.08;
  int points = 60;
};

// Heat trace of the unit half-disc with the area and perimeter terms pinned.
// The constant is fitted with {1, t^{1/2}, t, t^{3/2}, t^2}; the t^{1/2}
// coefficient is then fitted with the constant also pinned to C_1 / (4 pi).
inline HalfDiscFit half_disc_fit(BcKind diameter, BcKind arc, const HalfDiscFitOptions& opt = {}) {
  auto spec = domains::half_disc_spectrum({diameter, arc}, opt.lambda_max);
  auto samples = trace(spec, log_grid(opt.t_min, opt.t_max, opt.points), TraceKind::heat);
  HalfDiscFit out;
  out.diameter = diameter;
  out.arc = arc;
  out.modes = spec.mode_count();
  const double ld = (diameter == BcKind::dirichlet ? 2.0 : 0.0) + (arc == BcKind::dirichlet ? pi : 0.0);
  const double ln = 2 + pi - ld;
  auto lead = coeffs::leading_heat_terms(pi / 2, ld, ln);
  out.inverse_t = lead.inverse_t;
  out.inverse_sqrt_t = lead.inverse_sqrt_t;
  out.constant_expected = coeffs::c1_geometry(coeffs::half_disc(diameter, arc)) / (4 * pi);
  Pins pins;
  pins.plain[-1.0] = lead.inverse_t;
  pins.plain[-0.5] = lead.inverse_sqrt_t;
  const std::vector<double> basis = {-1.0, -0.5, 0.0, 0.5, 1.0, 1.5, 2.0};
  out.constant_fit = fit_expansion(samples, {basis, {}}, pins);
  out.constant = out.constant_fit.plain.at(0.0);
  pins.plain[0.0] = out.constant_expected;
  out.sqrt_fit = fit_expansion(samples, {basis, {}}, pins);
  out.sqrt_t = out.sqrt_fit.plain.at(0.5);
  return out;
}

}  // namespace hybridspec::kernels
