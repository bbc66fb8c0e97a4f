#pragma once

// Acceptance checks shared by the `verify` subcommand and the acceptance test.

#include <chrono>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "casimir.hpp"
#include "coeffs.hpp"
#include "conformal.hpp"
#include "domains.hpp"
#include "error.hpp"
#include "interval.hpp"
#include "kernels.hpp"
#include "numeric.hpp"
#include "specfun.hpp"
#include "zetafns.hpp"

namespace hybridspec::verify {

struct CheckResult {
  std::string name;
  double observed = 0;
  double expected = 0;
  double tolerance = 0;
  bool relative = false;
  bool passed = false;
};

struct CriterionResult {
  int number = 0;
  std::string tag;
  std::string title;
  std::vector<CheckResult> checks;
  double runtime_seconds = 0;
  double runtime_limit = 0;  // 0: none
  std::string error;
  bool passed = false;
};

struct Criterion {
  int number;
  std::string tag;
  std::string title;
  double runtime_limit;
  std::function<std::vector<CheckResult>()> run;
};

inline CheckResult abs_check(std::string name, double observed, double expected, double tol) {
  return {std::move(name), observed, expected, tol, false, std::abs(observed - expected) <= tol};
}

inline CheckResult rel_check(std::string name, double observed, double expected, double tol) {
  double err = std::abs(observed / expected - 1);
  return {std::move(name), observed, expected, tol, true, err <= tol};
}

// Passes when observed <= bound.
inline CheckResult bound_check(std::string name, double observed, double bound) {
  return {std::move(name), observed, 0.0, bound, false, observed <= bound};
}

inline CheckResult lower_bound_check(std::string name, double observed, double bound) {
  return {std::move(name), observed, bound, 0.0, false, observed > bound};
}

namespace detail {

using interval::BcKind;
using interval::BoundaryCondition;
using interval::Pair;

inline std::vector<CheckResult> union_checks() {
  auto rep = interval::union_identity_check(pi, 100);
  std::vector<CheckResult> out;
  for (const auto& id : rep.identities) {
    auto c = bound_check(id.name, id.mismatch, 1e-14);
    c.passed = c.passed && id.zero_modes_match;
    out.push_back(c);
  }
  return out;
}

inline std::vector<CheckResult> wedge_checks() {
  using coeffs::c1_wedge;
  using coeffs::CornerPair;
  double worst = 0;
  for (int i = 1; i <= 20; ++i) {
    double beta = pi * i / 20;
    worst = std::max(worst, std::abs(c1_wedge(beta, CornerPair::DN) - (c1_wedge(2 * beta, CornerPair::DD) - c1_wedge(beta, CornerPair::DD))));
  }
  return {bound_check("DN(beta) = DD(2 beta) - DD(beta), 20 angles", worst, 1e-14),
          abs_check("DN(pi)", c1_wedge(pi, CornerPair::DN), -pi / 4, 1e-14),
          abs_check("DD(pi/2)", c1_wedge(pi / 2, CornerPair::DD), pi / 4, 1e-14)};
}

inline std::vector<CheckResult> three_ball_checks() {
  return {abs_check("3-ball DN C1", coeffs::c1_geometry(coeffs::three_ball_dn()), 8 * pi / 3 - pi * pi / 2, 1e-14)};
}

inline std::vector<CheckResult> half_disc_checks() {
  const double sp = std::sqrt(pi);
  struct Case {
    const char* name;
    BcKind diameter, arc;
    double constant, sqrt_t;
  };
  const Case cases[] = {{"DD", BcKind::dirichlet, BcKind::dirichlet, 5.0 / 24, (pi + 16) / (256 * sp)},
                        {"ND", BcKind::neumann, BcKind::dirichlet, -1.0 / 24, (pi - 16) / (256 * sp)},
                        {"NN", BcKind::neumann, BcKind::neumann, 5.0 / 24, (5 * pi + 48) / (256 * sp)},
                        {"DN", BcKind::dirichlet, BcKind::neumann, -1.0 / 24, (5 * pi - 48) / (256 * sp)}};
  std::vector<CheckResult> out;
  for (const auto& c : cases) {
    auto f = kernels::half_disc_fit(c.diameter, c.arc);
    out.push_back(abs_check(std::string(c.name) + " constant", f.constant, c.constant, 5e-3));
    out.push_back(rel_check(std::string(c.name) + " t^1/2 coefficient", f.sqrt_t, c.sqrt_t, 0.10));
  }
  return out;
}

inline std::vector<CheckResult> lune_checks() {
  using zetafns::LunePair;
  double corner = 0, geometry = 0;
  for (int i = 1; i <= 10; ++i) {
    double beta = pi * i / 10;
    corner = std::max(corner, std::abs(zetafns::lune_nd_corner_contribution(beta) - coeffs::c1_wedge(beta, coeffs::CornerPair::DN)));
    geometry = std::max(geometry, std::abs(4 * pi * zetafns::lune_zeta_zero(beta, LunePair::DD) - coeffs::c1_geometry(coeffs::lune_dd(beta))));
  }
  return {abs_check("DD zeta(0) at beta = pi", zetafns::lune_zeta_zero(pi, LunePair::DD), 1.0 / 24, 1e-15),
          bound_check("ND per-corner identity, 10 angles", corner, 1e-14),
          bound_check("4 pi zeta(0) vs geometric C1, 10 angles", geometry, 1e-12)};
}

inline std::vector<CheckResult> hemisphere_zeta_checks() {
  using zetafns::HemiPair;
  auto nd = zetafns::hemisphere_zeta_report(HemiPair::ND);
  auto dd = zetafns::hemisphere_zeta_report(HemiPair::DD);
  auto nn = zetafns::hemisphere_zeta_report(HemiPair::NN);
  return {abs_check("ND closed form", nd.closed, -0.1423411, 5e-8),
          abs_check("ND Barnes route", nd.barnes, nd.closed, 1e-6),
          abs_check("ND binomial route", nd.binomial, nd.closed, 1e-6),
          abs_check("DD binomial route", dd.binomial, dd.closed, 1e-8),
          abs_check("NN binomial route", nn.binomial, nn.closed, 1e-8)};
}

inline std::vector<CheckResult> disc_checks() {
  auto p = conformal::hemisphere_to_disc();
  auto r = conformal::nd_disc_effective_action();
  const double l2 = specfun::ln2;
  return {abs_check("W_D cocycle", conformal::cocycle_eval(p, conformal::Layout::allD), l2 / 6 - 1.0 / 3, 1e-6),
          abs_check("W_N cocycle (constant mode omitted)", conformal::cocycle_eval(p, conformal::Layout::allN_nozero), 2 * l2 / 3 + 1.0 / 6, 1e-6),
          abs_check("ND disc: hemisphere + cocycle vs closed form", r.combined, r.closed_form, 1e-6)};
}

inline std::vector<CheckResult> robin_checks() {
  std::vector<CheckResult> out;
  double worst = 0;
  for (auto left : {BoundaryCondition::dirichlet(), BoundaryCondition::neumann()})
    for (double h : {-0.5, -0.1, 0.1, 0.3, 1.0}) {
      interval::IntervalProblem p{pi, left, BoundaryCondition::robin(h)};
      for (double k : interval::wavenumbers(p, 200).values)
        worst = std::max(worst, static_cast<double>(std::abs(interval::robin_residual(p, k))));
    }
  out.push_back(bound_check("residuals, first 200 roots, 10 problems", worst, 1e-10));
  const double h = 1e-6;
  interval::IntervalProblem p{pi, BoundaryCondition::dirichlet(), BoundaryCondition::robin(h)};
  auto w = interval::wavenumbers(p, 5);
  double quotient = 0;
  for (int m = 0; m < 5; ++m) {
    double expected = -2 / (pi * (2 * m + 1));
    quotient = std::max(quotient, std::abs(((w.values[m] - (m + 0.5)) / h) / expected - 1));
  }
  out.push_back(bound_check("root difference quotient vs -2/(pi(2m+1)), h = 1e-6", quotient, 1e-5));
  double quad = 0;
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      auto d = domains::perturbation_delta(m, n, 1e-3);
      quad = std::max(quad, std::abs(d.delta_sqrt_lambda / d.expected - 1));
    }
  out.push_back(bound_check("eigenfunction quadrature of the shift, h = 1e-3", quad, 1e-4));
  return out;
}

inline std::vector<CheckResult> barnes_checks() {
  double norm = 0, barnes = 0;
  for (double k : {0.5, 1.0, 1.5})
    for (int n = 0; n <= 2; ++n) {
      auto r = domains::mode_integral_checks(k, n);
      norm = std::max(norm, r.norm_rel_err);
      barnes = std::max(barnes, r.barnes_rel_err);
    }
  return {bound_check("orthonormality integral", norm, 1e-8), bound_check("Barnes integral", barnes, 1e-8)};
}

inline std::vector<CheckResult> factorization_checks() {
  double worst = 0;
  for (auto bc0 : {BcKind::dirichlet, BcKind::neumann})
    for (double h : {0.0, 0.3, -0.3}) {
      auto spec = domains::hemisphere_spectrum({bc0, h}, 1e4);
      for (double t : {0.5, 1.0, 2.0, 5.0}) {
        double direct = kernels::trace_at(spec, t, kernels::TraceKind::cylinder);
        worst = std::max(worst, std::abs(direct - kernels::hemisphere_cylinder_factorized(h, bc0, t)));
      }
    }
  return {bound_check("direct vs factorized cylinder trace, 24 cases", worst, 1e-12)};
}

inline std::vector<CheckResult> log_checks() {
  auto robin = kernels::detect_log_terms(0.5, BcKind::dirichlet);
  auto plain = kernels::detect_log_terms(0.0, BcKind::dirichlet);
  return {rel_check("t^0 log t coefficient, h = 0.5", robin.log_coefficient, -0.5 / (2 * pi), 0.10),
          lower_bound_check("residual improvement, h = 0.5", robin.improvement_ratio, 10),
          bound_check("|t^0 log t coefficient|, h = 0", std::abs(plain.log_coefficient), 1e-3)};
}

inline std::vector<CheckResult> bridge_checks() {
  using coeffs::Coefficient;
  coeffs::CoefficientTable a{coeffs::Side::cylinder, 2};
  const double vals[] = {0.7, -0.3, 0.25, 1.1, -0.45, 0.6, 0.05};
  for (int k = -2; k <= 4; ++k) {
    a.entries[k].plain = Coefficient::known(vals[k + 2]);
    if (k >= 0) a.entries[k].log = Coefficient::known(0.1 * (k + 1) * (k % 2 ? -1 : 1));
  }
  auto back = coeffs::bridge_b_to_a(coeffs::bridge_a_to_b(a));
  double worst = 0;
  for (const auto& [k, e] : back.entries) {
    const auto& o = a.entries.at(k);
    if (e.plain.is_known()) worst = std::max(worst, std::abs(e.plain.value - o.plain.value));
    if (e.log.is_known()) worst = std::max(worst, std::abs(e.log.value - o.log.value));
  }
  double b1 = 0, odd_log = 0;
  for (double h : {-0.4, 0.1, 0.3}) {
    coeffs::CoefficientTable t{coeffs::Side::cylinder, 1};
    for (int n = 1; n <= 3; ++n) t.entries[2 * n - 1].log = Coefficient::known(coeffs::log_series_coefficient(h, n));
    auto b = coeffs::bridge_a_to_b(t);
    b1 = std::max(b1, std::abs(b.entries.at(1).plain.value - h / std::sqrt(pi)));
    for (int k : {1, 3, 5}) odd_log = std::max(odd_log, std::abs(b.entries.at(k).log.value));
  }
  return {bound_check("cylinder -> heat -> cylinder roundtrip", worst, 1e-14),
          bound_check("b_1 = h / sqrt(pi) from a'_1 = -h/pi", b1, 1e-15),
          bound_check("b'_k = 0 for odd positive k", odd_log, 0.0)};
}

inline std::vector<CheckResult> casimir_checks() {
  using casimir::casimir_finite_part;
  const double h = 1e-3, g = specfun::euler_gamma, l2 = specfun::ln2;
  auto dr = casimir_finite_part(Pair::DR, h);
  return {abs_check("E(D,D)", casimir_finite_part(Pair::DD, 0).energy, -1.0 / 24, 1e-8),
          abs_check("E(N,N)", casimir_finite_part(Pair::NN, 0).energy, -1.0 / 24, 1e-8),
          abs_check("E(D,N)", casimir_finite_part(Pair::DN, 0).energy, 1.0 / 48, 1e-8),
          abs_check("E(D,R), h = 1e-3", dr.energy, 1.0 / 48 - (h / (2 * pi)) * (g - 1 + 2 * l2), 1e-6),
          abs_check("removed pole, h = 1e-3", dr.residue, -h / (2 * pi), 1e-8),
          abs_check("C1 from E(D,N)", casimir::c1_from_casimir(1.0 / 48, 0), -pi / 3, 1e-15),
          abs_check("C1 from E(N,N)", casimir::c1_from_casimir(-1.0 / 24, 0), pi / 6, 1e-15),
          abs_check("C1 from E(D,N) vs DN hemisphere geometry", casimir::c1_from_casimir(1.0 / 48, 0),
                    coeffs::c1_geometry(coeffs::named_geometry("hemisphere-DN")), 1e-15),
          abs_check("C1 from E(N,N) vs NN hemisphere geometry", casimir::c1_from_casimir(-1.0 / 24, 0),
                    coeffs::c1_geometry(coeffs::named_geometry("hemisphere-NN")), 1e-15)};
}

inline std::vector<CheckResult> exact_casimir_checks() {
  auto fit = casimir::sqrt_term_fit(true);
  std::vector<CheckResult> out{rel_check("sqrt(-h) coefficient (N,R)", fit.sqrt_coefficient, fit.expected, 0.02)};
  auto rep = casimir::functional_relation_probe(Pair::NR);
  for (const auto& e : rep.entries)
    if (e.lambda == 2.0)
      out.push_back(abs_check("F(2h) - 2F(h) = log(2)/2 at h = " + std::to_string(e.h), e.lhs, e.rhs, 3 * e.tolerance));
  return out;
}

}  // namespace detail

inline const std::vector<Criterion>& registry() {
  static const std::vector<Criterion> r = {
      {1, "union", "spectral union identities", 1.0, detail::union_checks},
      {2, "wedge", "wedge C1 coefficients", 0, detail::wedge_checks},
      {3, "three-ball", "3-ball hybrid C1", 0, detail::three_ball_checks},
      {4, "half-disc", "half-disc heat trace coefficients", 480.0, detail::half_disc_checks},
      {5, "lune", "lune zeta(0) and corner identity", 0, detail::lune_checks},
      {6, "hemisphere-zeta", "hemisphere zeta'(0)", 0, detail::hemisphere_zeta_checks},
      {7, "disc-determinant", "N/D disc effective action", 0, detail::disc_checks},
      {8, "robin", "Robin wavenumbers and first-order shifts", 0, detail::robin_checks},
      {9, "barnes", "Barnes and orthonormality integrals", 0, detail::barnes_checks},
      {10, "factorization", "hemisphere cylinder trace factorization", 0, detail::factorization_checks},
      {11, "log-terms", "log t terms in the Robin hemisphere heat trace", 0, detail::log_checks},
      {12, "bridge", "cylinder/heat coefficient bridge", 0, detail::bridge_checks},
      {13, "casimir", "Casimir energies and hemisphere C1", 0, detail::casimir_checks},
      {14, "exact-casimir", "integral Casimir energy for h < 0", 0, detail::exact_casimir_checks},
  };
  return r;
}

inline bool matches(const Criterion& c, const std::optional<std::string>& filter) {
  return !filter || *filter == c.tag || *filter == std::to_string(c.number);
}

inline CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r{c.number, c.tag, c.title};
  r.runtime_limit = c.runtime_limit;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.checks = c.run();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = r.error.empty() && !r.checks.empty();
  for (const auto& k : r.checks) r.passed = r.passed && k.passed;
  if (c.runtime_limit > 0 && r.runtime_seconds > c.runtime_limit) r.passed = false;
  return r;
}

// Runs the criteria whose tag or number equals `filter` (all when empty), in
// registry order.
inline std::vector<CriterionResult> verify_suite(const std::optional<std::string>& filter = std::nullopt) {
  std::vector<CriterionResult> out;
  for (const auto& c : registry())
    if (matches(c, filter)) out.push_back(run_criterion(c));
  if (out.empty() && filter) fail(ErrorKind::domain, "verify: no check matches '" + *filter + "'");
  return out;
}

}  // namespace hybridspec::verify
