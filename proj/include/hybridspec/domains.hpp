#pragma once

// Two-dimensional spectra: the unit half-disc with D/N on the diameter and the
// arc, and the unit hemisphere with D or N on one half of the rim and a Robin
// condition S = -h / sin(theta) on the other half.

#include <algorithm>
#include <cmath>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "numeric.hpp"
#include "specfun.hpp"

namespace hybridspec::domains {

using interval::BcKind;

struct Level {
  double lambda;
  int degeneracy;
};

struct Spectrum {
  std::vector<Level> levels;  // ascending
  double cutoff = 0;          // every eigenvalue <= cutoff is present
  int zero_mode_count = 0;
  double operator_shift = 0;  // 0 for -Laplacian, 1/4 for -Laplacian + 1/4
  int dimension = 2;

  std::size_t mode_count() const {
    std::size_t n = zero_mode_count;
    for (const auto& l : levels) n += l.degeneracy;
    return n;
  }
};

// Sorts and merges eigenvalues equal within 1e-10 * lambda.
inline std::vector<Level> merge_levels(std::vector<double> lambdas) {
  std::sort(lambdas.begin(), lambdas.end());
  std::vector<Level> out;
  for (double l : lambdas) {
    if (!out.empty() && std::abs(l - out.back().lambda) <= 1e-10 * std::max(1.0, l))
      ++out.back().degeneracy;
    else
      out.push_back({l, 1});
  }
  return out;
}

struct HalfDiscProblem {
  BcKind diameter = BcKind::dirichlet;
  BcKind arc = BcKind::dirichlet;
  double radius = 1.0;

  void validate() const {
    require(diameter != BcKind::robin && arc != BcKind::robin, ErrorKind::unsupported,
            "half-disc supports Dirichlet or Neumann edges only");
    require(radius == 1.0, ErrorKind::domain, "half-disc radius is fixed to 1");
  }
};

// Eigenvalues of -Laplacian on the unit half-disc up to lambda_max. Angular
// modes sin(m theta) (D diameter, m >= 1) or cos(m theta) (N diameter,
// m >= 0); radial factor J_m(k r) with J_m(k) = 0 (D arc) or J'_m(k) = 0 (N arc).
inline Spectrum half_disc_spectrum(const HalfDiscProblem& problem, double lambda_max) {
  problem.validate();
  require(std::isfinite(lambda_max) && lambda_max > 0 && lambda_max <= 1e4, ErrorKind::domain,
          "half_disc_spectrum: lambda_max must be in (0, 1e4]");
  const double X = std::sqrt(lambda_max);
  const int m_start = problem.diameter == BcKind::dirichlet ? 1 : 0;
  // Level m of the ladder must still reach beyond X for every m <= X + 1.
  const int n0 = static_cast<int>(X / pi) + static_cast<int>(std::ceil(X)) + 4;
  specfun::BesselZeroLadder ladder(n0);
  std::vector<double> lambdas;

  auto reaches = [&](const std::vector<double>& z) {
    if (z.empty() || z.back() <= X) fail(ErrorKind::insufficient_cutoff, "Bessel zero ladder does not cover the cutoff");
  };

  if (problem.arc == BcKind::neumann && m_start == 0) {
    // J'_0 = -J_1: the nonzero roots are zeros of J_1; the constant mode is
    // the zero mode.
    specfun::BesselZeroLadder l1(n0);
    l1.advance();
    reaches(l1.zeros());
    for (double z : l1.zeros())
      if (z <= X) lambdas.push_back(z * z);
  }
  for (int m = 0;; ++m) {
    if (m > 0 && !ladder.advance()) fail(ErrorKind::insufficient_cutoff, "Bessel zero ladder exhausted");
    const auto& z = ladder.zeros();
    reaches(z);
    if (m < m_start || (problem.arc == BcKind::neumann && m == 0)) continue;
    std::size_t before = lambdas.size();
    if (problem.arc == BcKind::dirichlet) {
      for (double r : z)
        if (r <= X) lambdas.push_back(r * r);
    } else {
      for (double r : ladder.derivative_zeros(X)) lambdas.push_back(r * r);
    }
    if (lambdas.size() == before) break;  // lowest zero grows with m
  }
  Spectrum s;
  s.levels = merge_levels(std::move(lambdas));
  s.cutoff = lambda_max;
  s.zero_mode_count = (problem.diameter == BcKind::neumann && problem.arc == BcKind::neumann) ? 1 : 0;
  s.operator_shift = 0;
  return s;
}

struct HemisphereProblem {
  BcKind bc_at_0 = BcKind::dirichlet;
  double h = 0.0;

  void validate() const {
    require(bc_at_0 != BcKind::robin, ErrorKind::unsupported, "hemisphere condition at phi = 0 must be D or N");
    require(std::isfinite(h), ErrorKind::domain, "Robin parameter must be finite");
  }

  interval::IntervalProblem azimuthal() const {
    return {pi, bc_at_0 == BcKind::dirichlet ? interval::BoundaryCondition::dirichlet() : interval::BoundaryCondition::neumann(),
            interval::BoundaryCondition::robin(h)};
  }
};

// Azimuthal wavenumbers k_m of the hemisphere rows, including k = 0 when the
// interval has a constant mode (N end with h = 0), enough to cover k <= k_max.
inline std::vector<double> hemisphere_rows(const HemisphereProblem& problem, double k_max) {
  problem.validate();
  int count = static_cast<int>(std::ceil(std::max(k_max, 0.0))) + 3;
  auto w = interval::wavenumbers(problem.azimuthal(), count);
  std::vector<double> rows;
  if (w.zero_mode_count > 0) rows.push_back(0.0);
  for (double k : w.values)
    if (k <= k_max) rows.push_back(k);
  return rows;
}

// Eigenvalues of -Laplacian + 1/4: lambda = (1/2 + k_m + n)^2, n >= 0.
inline Spectrum hemisphere_spectrum(const HemisphereProblem& problem, double lambda_max) {
  require(std::isfinite(lambda_max) && lambda_max > 0 && lambda_max <= 1e4, ErrorKind::domain,
          "hemisphere_spectrum: lambda_max must be in (0, 1e4]");
  const double root = std::sqrt(lambda_max);
  std::vector<double> lambdas;
  for (double k : hemisphere_rows(problem, root - 0.5)) {
    for (int n = 0;; ++n) {
      double r = 0.5 + k + n;
      if (r * r > lambda_max) break;
      lambdas.push_back(r * r);
    }
  }
  Spectrum s;
  s.levels = merge_levels(std::move(lambdas));
  s.cutoff = lambda_max;
  s.zero_mode_count = 0;
  s.operator_shift = 0.25;
  return s;
}

// Squared normalisation of sin(k phi) P^{-k}_{n+k}(cos theta) on the unit
// hemisphere, k = (2m+1)/2; fixed by requiring unit L2 norm.
inline double hemisphere_norm_squared(int m, int n) {
  const double mb = 2 * m + 1;
  return (mb + 2 * n + 1) * std::exp(std::lgamma(mb + n + 1) - std::lgamma(n + 1.0)) / pi;
}

struct ModeIntegralReport {
  double k = 0;
  int n = 0;
  double norm_quadrature = 0, norm_closed = 0, norm_rel_err = 0;
  double barnes_quadrature = 0, barnes_closed = 0, barnes_rel_err = 0;
  double pole_offset = 0;
  double pole_ratio = 0, pole_limit = 0, pole_rel_err = 0;
  double parity_rel_err = 0;
};

// Quadrature checks of the Ferrers functions P^{-k}_{n+k}: L2 weight on
// (-1, 1), Barnes' integral of P^2 / (1 - x^2) on (0, 1), and the pole limit.
inline ModeIntegralReport mode_integral_checks(double k, int n, double pole_offset = 1e-9) {
  require(k > 0 && k <= 10, ErrorKind::domain, "mode_integral_checks: k must be in (0, 10]");
  require(n >= 0 && n <= 10, ErrorKind::domain, "mode_integral_checks: n must be in [0, 10]");
  require(pole_offset > 0 && pole_offset < 0.5, ErrorKind::domain, "mode_integral_checks: pole offset must be in (0, 1/2)");
  ModeIntegralReport r;
  r.k = k;
  r.n = n;
  auto red = [&](double th) { return specfun::legendre_p_reduced(k, n, std::cos(th)); };
  // x = cos(theta) turns (1 - x^2)^k dx into sin^{2k+1}, and the 1/(1 - x^2)
  // weight into sin^{2k-1}, both bounded for k >= 1/2.
  auto norm_f = [&](double th) {
    double r2 = red(th);
    return std::pow(std::sin(th), 2 * k + 1) * r2 * r2;
  };
  auto barnes_f = [&](double th) {
    double r2 = red(th);
    return std::pow(std::sin(th), 2 * k - 1) * r2 * r2;
  };
  r.norm_quadrature = integrate_singular(norm_f, 0.0, pi, 1e-14).value;
  r.norm_closed = 2 * std::exp(std::lgamma(n + 1.0) - std::lgamma(2 * k + n + 1)) / (2 * k + 2 * n + 1);
  r.norm_rel_err = std::abs(r.norm_quadrature / r.norm_closed - 1);
  r.barnes_quadrature = integrate_singular(barnes_f, 0.0, pi / 2, 1e-14).value;
  const double mu = -k, nu = n + k;
  r.barnes_closed = -1 / (2 * mu) * std::exp(std::lgamma(1 + mu + nu) - std::lgamma(1 - mu + nu));
  r.barnes_rel_err = std::abs(r.barnes_quadrature / r.barnes_closed - 1);
  r.pole_offset = pole_offset;
  const double x = 1 - pole_offset;
  r.pole_ratio = specfun::legendre_p(mu, nu, x) * std::pow(1 - x * x, -0.5 * k);
  r.pole_limit = std::exp(-k * std::log(2.0) - std::lgamma(k + 1));
  r.pole_rel_err = std::abs(r.pole_ratio / r.pole_limit - 1);
  double sign = (n % 2 == 0) ? 1.0 : -1.0;
  double xp = 0.37;
  r.parity_rel_err = std::abs(specfun::legendre_p(mu, nu, -xp) / (sign * specfun::legendre_p(mu, nu, xp)) - 1);
  return r;
}

struct PerturbationResult {
  double delta_lambda = 0;
  double delta_sqrt_lambda = 0;
  double expected = 0;  // -2h / (pi (2m + 1))
  double quadrature_error = 0;
};

// First-order shift of the hemisphere eigenvalue (m, n) of the (D, N) problem
// when the N half-rim becomes Robin with S = -h / sin(theta):
// delta lambda = -h N^2 int_0^pi P(cos theta)^2 / sin(theta) d theta.
inline PerturbationResult perturbation_delta(int m, int n, double h) {
  require(m >= 0 && m <= 10 && n >= 0 && n <= 10, ErrorKind::domain, "perturbation_delta: m, n must be in [0, 10]");
  require(std::isfinite(h) && std::abs(h) < 0.1, ErrorKind::out_of_regime, "perturbation_delta: need |h| < 0.1");
  const double k = m + 0.5;
  auto f = [&](double th) {
    double r = specfun::legendre_p_reduced(k, n, std::cos(th));
    return std::pow(std::sin(th), 2 * k - 1) * r * r;
  };
  auto q = integrate_singular(f, 0.0, pi, 1e-14);
  PerturbationResult out;
  out.delta_lambda = -h * hemisphere_norm_squared(m, n) * q.value;
  out.delta_sqrt_lambda = out.delta_lambda / (2 * (0.5 + k + n));
  out.expected = -2 * h / (pi * (2 * m + 1));
  out.quadrature_error = q.error;
  return out;
}

}  // namespace hybridspec::domains
