#pragma once

// Casimir energies E = FP (1/2) zeta(-1/2) of the interval [0, pi]: mode sums
// with counterterm subtraction, the first-order formulas, the integral
// representation for h <= 0, and the map to hemisphere C_1 values.

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "interval.hpp"
#include "numeric.hpp"
#include "specfun.hpp"
#include "zetafns.hpp"

namespace hybridspec::casimir {

using interval::Pair;

enum class Route { finite_part, perturbative, exact_integral };

inline const char* to_string(Route r) {
  switch (r) {
    case Route::finite_part: return "finite_part";
    case Route::perturbative: return "perturbative";
    case Route::exact_integral: return "exact_integral";
  }
  return "?";
}

struct CasimirResult {
  double energy = 0;
  Route route = Route::finite_part;
  double h = 0;
  Pair pair = Pair::DD;
  double tolerance = 0;
  double residue = 0;  // pole of zeta at s = -1/2 removed by the finite part
  std::string notes;
};

inline interval::IntervalProblem pair_problem(Pair pair, double h) {
  using BC = interval::BoundaryCondition;
  switch (pair) {
    case Pair::DD: return {pi, BC::dirichlet(), BC::dirichlet()};
    case Pair::NN: return {pi, BC::neumann(), BC::neumann()};
    case Pair::DN: return {pi, BC::dirichlet(), BC::neumann()};
    case Pair::DR: return {pi, BC::dirichlet(), BC::robin(h)};
    case Pair::NR: return {pi, BC::neumann(), BC::robin(h)};
  }
  return {};
}

// Writing k_m = mu_m + delta_m with mu_m = m + a on the regular branches,
// delta_m ~ c / mu + d / mu^3 with c = -h/pi, d = -h^2/pi^2 + h^3/(3 pi). Then
//   FP zeta(-1/2) = zeta(-1, a) - c (1 + psi(a)) + sum (delta_m - c / mu_m)
// and the removed pole is c/2 = -h/(2 pi).
inline CasimirResult casimir_finite_part(Pair pair, double h, int count = 10000) {
  require(count >= 100 && count <= 100000, ErrorKind::domain, "casimir_finite_part: count must be in [100, 1e5]");
  require(std::isfinite(h) && std::abs(h) <= 1, ErrorKind::domain, "casimir_finite_part: need |h| <= 1");
  const bool robin = pair == Pair::DR || pair == Pair::NR;
  require(robin || h == 0, ErrorKind::domain, "casimir_finite_part: h applies to Robin pairs only");
  auto w = interval::wavenumbers(pair_problem(pair, h), count);
  const double shift = (pair == Pair::DN || pair == Pair::DR) ? 0.5 : 0.0;
  const double c = robin ? -h / pi : 0.0;
  const double d = robin ? -h * h / (pi * pi) + h * h * h / (3 * pi) : 0.0;

  CasimirResult r;
  r.route = Route::finite_part;
  r.h = h;
  r.pair = pair;
  r.residue = c / 2;

  // Roots below the regular ladder (the N-R branch-0 root for h < 0).
  std::size_t first = 0;
  double extra = 0;
  int branch = w.first_branch;
  if (pair == Pair::NR && h < 0) {
    extra = w.values[0];
    first = 1;
    branch = 1;
  }
  if (pair == Pair::NR && h == 0) branch = 1;
  const double a = branch + shift;

  // Offsets come straight from the branch solver: k - mu would lose the
  // digits of delta against the size of k.
  CompensatedSum<double> sum;
  double last = 0, mu_last = a;
  const std::size_t n = w.values.size() - first;
  for (std::size_t i = 0; i < n; ++i) {
    const double mu = a + static_cast<double>(i);
    const double delta = (robin && h != 0) ? interval::detail::robin_offset(mu, h) : 0.0;
    last = delta - c / mu;
    mu_last = mu;
    sum += last;
  }
  const double predicted = d / (mu_last * mu_last * mu_last);
  if (robin && std::abs(last - predicted) > 0.5 * std::abs(predicted) + 1e-15)
    fail(ErrorKind::non_convergence, "casimir_finite_part: subtracted summand does not follow the 1/m^3 law");
  const double tail = robin ? d * specfun::hurwitz_zeta(3.0, mu_last + 1) : 0.0;
  double fp = specfun::hurwitz_zeta(-1.0, a) + extra + sum.value() + tail;
  if (c != 0) fp -= c * (1 + specfun::digamma(a));
  r.energy = fp / 2;
  r.tolerance = robin ? std::abs(h) * 1e-12 + std::abs(d) / (mu_last * mu_last * mu_last * mu_last) : 1e-15;
  if (pair == Pair::NN || (pair == Pair::NR && h == 0)) r.notes = "constant mode omitted";
  if (w.excluded_imaginary) r.notes = "imaginary branch-0 root excluded";
  return r;
}

// E = B/2 with B the finite part of the first-order zeta at s = -1/2.
inline CasimirResult casimir_perturbative(Pair pair, double h) {
  CasimirResult r;
  r.route = Route::perturbative;
  r.h = h;
  r.pair = pair;
  if (pair == Pair::DD || pair == Pair::NN) {
    r.energy = -1.0 / 24;
  } else if (pair == Pair::DN) {
    r.energy = 1.0 / 48;
  } else {
    auto z = zetafns::perturbative_interval_zeta(pair, h, -0.5);
    r.energy = z.value / 2;
    r.residue = *z.residue;
    r.tolerance = z.h2_estimate;
    r.notes = "first order in h";
  }
  return r;
}

// Integral representations on k in (0, inf):
//   E(N,R) = -1/24 + (1/2pi) int log(1 - 2h / ((k - h)(e^{2 pi k} - 1))) dk
//   E(D,R) = 1/48 + (1/2pi) int log(1 + 2k / ((k - h)(e^{2 pi k} - 1))) dk - 1/16
// restricted to h <= 0, where k - h does not vanish on the contour.
inline CasimirResult casimir_exact_integral(Pair pair, double h) {
  require(pair == Pair::NR || pair == Pair::DR, ErrorKind::domain, "casimir_exact_integral: pair must be NR or DR");
  require(std::isfinite(h), ErrorKind::domain, "casimir_exact_integral: h must be finite");
  if (h > 0) fail(ErrorKind::pole_on_contour, "casimir_exact_integral: k = h lies on the contour for h > 0");
  const bool nr = pair == Pair::NR;
  auto f = [&](double k) {
    k = std::max(k, 1e-280);
    // k / (e^{2 pi k} - 1), kept finite as k -> 0.
    const double r = k < 1e-8 ? (1 - pi * k) / (2 * pi) : k / std::expm1(2 * pi * k);
    if (nr) return h == 0 ? 0.0 : std::log1p(-2 * h * r / (k * (k - h)));
    return std::log1p(2 * r / (k - h));
  };
  // Logarithmic endpoint singularity at k = 0 on the first piece.
  auto near = integrate_singular(f, 0.0, 1.0, 1e-14);
  auto far = integrate_to_infinity(f, 1.0, 1e-14);
  const double integral = (near.value + far.value) / (2 * pi);
  CasimirResult r;
  r.route = Route::exact_integral;
  r.h = h;
  r.pair = pair;
  r.energy = nr ? -1.0 / 24 + integral : 1.0 / 48 + integral - 1.0 / 16;
  r.tolerance = (std::abs(near.error) + std::abs(far.error)) / (2 * pi) + 1e-15;
  r.notes = "integral and finite-part energies may differ by renormalisation";
  return r;
}

// C_1 of the hybrid hemisphere from an interval energy, and its inverse.
inline double c1_from_casimir(double energy, double h) {
  return -8 * pi * energy - pi / 6 - 4 * h * (specfun::euler_gamma - 1);
}

inline double casimir_from_c1(double c1, double h) {
  return -(c1 + pi / 6 + 4 * h * (specfun::euler_gamma - 1)) / (8 * pi);
}

// Least-squares fit of E(N,R)(h) - E(N,R)(0) on a log-spaced grid of h < 0.
struct SqrtFit {
  std::vector<std::string> columns;
  std::vector<double> coefficients;
  double sqrt_coefficient = 0;
  double expected = 0;  // 1 / (2 sqrt(pi))
  double relative_error = 0;
  double residual_rms = 0;
};

inline SqrtFit sqrt_term_fit(bool with_log_column = true, double h_lo = -1e-3, double h_hi = -1e-5, int points = 17) {
  require(h_lo < h_hi && h_hi < 0, ErrorKind::domain, "sqrt_term_fit: need h_lo < h_hi < 0");
  require(points >= 4, ErrorKind::domain, "sqrt_term_fit: need at least 4 points");
  auto grid = log_grid(-h_hi, -h_lo, points);
  const double e0 = casimir_exact_integral(Pair::NR, 0.0).energy;
  const int p = with_log_column ? 3 : 2;
  Eigen::MatrixXd A(points, p);
  Eigen::VectorXd b(points);
  for (int i = 0; i < points; ++i) {
    const double h = -grid[i];
    A(i, 0) = std::sqrt(-h);
    A(i, 1) = h;
    if (with_log_column) A(i, 2) = h * std::log(-h);
    b(i) = casimir_exact_integral(Pair::NR, h).energy - e0;
  }
  Eigen::VectorXd x = A.colPivHouseholderQr().solve(b);
  SqrtFit out;
  out.columns = {"sqrt(-h)", "h"};
  if (with_log_column) out.columns.push_back("h log(-h)");
  out.coefficients.assign(x.data(), x.data() + p);
  out.sqrt_coefficient = x(0);
  out.expected = 0.5 / std::sqrt(pi);
  out.relative_error = out.sqrt_coefficient / out.expected - 1;
  out.residual_rms = std::sqrt((A * x - b).squaredNorm() / points);
  return out;
}

// F(h) = 2 pi (E(h) - E_0 - sqrt term) / h tested against
// F(lambda h) - lambda F(h) = log(lambda) / lambda.
struct RelationEntry {
  double h = 0;
  double lambda = 0;
  double lhs = 0;
  double rhs = 0;
  double deviation = 0;
  double tolerance = 0;  // propagated quadrature tolerance
};

struct RelationReport {
  Pair pair = Pair::NR;
  std::vector<double> h_grid;
  std::vector<double> f_values;
  std::vector<RelationEntry> entries;
};

inline RelationReport functional_relation_probe(Pair pair, std::vector<double> h_grid = {-0.01, -0.02, -0.04, -0.08}) {
  require(pair == Pair::NR || pair == Pair::DR, ErrorKind::domain, "functional_relation_probe: pair must be NR or DR");
  require(h_grid.size() >= 4, ErrorKind::domain, "functional_relation_probe: need at least 4 grid points");
  for (double h : h_grid)
    require(h > -0.1 && h < 0, ErrorKind::domain, "functional_relation_probe: grid points must lie in (-0.1, 0)");
  RelationReport rep;
  rep.pair = pair;
  rep.h_grid = h_grid;
  const double e0 = pair == Pair::NR ? -1.0 / 24 : 1.0 / 48;
  std::vector<double> tol;
  for (double h : h_grid) {
    auto r = casimir_exact_integral(pair, h);
    double sq = pair == Pair::NR ? 0.5 * std::sqrt(-h / pi) : 0.0;
    rep.f_values.push_back(2 * pi * (r.energy - e0 - sq) / h);
    tol.push_back(2 * pi * r.tolerance / std::abs(h));
  }
  for (std::size_t i = 0; i < h_grid.size(); ++i)
    for (std::size_t j = 0; j < h_grid.size(); ++j) {
      const double lambda = h_grid[j] / h_grid[i];
      for (double target : {2.0, 4.0})
        if (std::abs(lambda - target) < 1e-12) {
          RelationEntry e;
          e.h = h_grid[i];
          e.lambda = target;
          e.lhs = rep.f_values[j] - target * rep.f_values[i];
          e.rhs = std::log(target) / target;
          e.deviation = e.lhs - e.rhs;
          e.tolerance = tol[j] + target * tol[i];
          rep.entries.push_back(e);
        }
    }
  return rep;
}

}  // namespace hybridspec::casimir
