#include <cmath>
#include <cstdlib>

#include <gtest/gtest.h>

#include <hybridspec/kernels.hpp>

namespace kn = hybridspec::kernels;
namespace iv = hybridspec::interval;
using hybridspec::pi;
using iv::BcKind;
using BC = iv::BoundaryCondition;

// sum_{n>=1} exp(-n^2 t) by Poisson summation.
static double theta_oracle(double t) {
  double s = 1;
  for (int k = 1; k <= 10; ++k) s += 2 * std::exp(-pi * pi * k * k / t);
  return 0.5 * std::sqrt(pi / t) * s - 0.5;
}

TEST(Kernels, IntervalHeatTraceMatchesTheta) {
  auto s = kn::interval_spectrum(iv::wavenumbers({pi, BC::dirichlet(), BC::dirichlet()}, 2000));
  auto samples = kn::trace(s, {0.01, 0.1, 1.0, 3.0}, kn::TraceKind::heat);
  for (std::size_t i = 0; i < samples.t_values.size(); ++i)
    EXPECT_NEAR(samples.k_values[i], theta_oracle(samples.t_values[i]), 1e-12 * samples.k_values[i]);
}

TEST(Kernels, IntervalCylinderTraceGeometricSum) {
  // sum_{n>=1} exp(-n t) = 1 / (e^t - 1); NN adds the constant mode.
  auto s = kn::interval_spectrum(iv::wavenumbers({pi, BC::neumann(), BC::neumann()}, 5000));
  for (double t : {0.05, 0.5, 2.0}) EXPECT_NEAR(kn::trace_at(s, t, kn::TraceKind::cylinder), 1 + 1 / std::expm1(t), 1e-12 / t);
}

TEST(Kernels, TruncationGuard) {
  auto s = kn::interval_spectrum(iv::wavenumbers({pi, BC::dirichlet(), BC::dirichlet()}, 10));
  try {
    kn::trace(s, {1e-3}, kn::TraceKind::heat);
    FAIL();
  } catch (const hybridspec::Error& e) {
    EXPECT_EQ(e.kind(), hybridspec::ErrorKind::insufficient_cutoff);
  }
}

TEST(Kernels, TraceIndependentOfThreadCount) {
  auto s = hybridspec::domains::hemisphere_spectrum({BcKind::dirichlet, 0.3}, 4000);
  auto grid = hybridspec::log_grid(0.01, 1.0, 40);
  setenv("HYBRIDSPEC_THREADS", "1", 1);
  auto one = kn::trace(s, grid, kn::TraceKind::heat);
  setenv("HYBRIDSPEC_THREADS", "7", 1);
  auto seven = kn::trace(s, grid, kn::TraceKind::heat);
  unsetenv("HYBRIDSPEC_THREADS");
  EXPECT_EQ(one.k_values, seven.k_values);
}

TEST(Kernels, FactorizedCylinderTrace) {
  for (auto bc0 : {BcKind::dirichlet, BcKind::neumann})
    for (double h : {0.0, 0.3, -0.3}) {
      auto s = hybridspec::domains::hemisphere_spectrum({bc0, h}, 1e4);
      for (double t : {0.5, 1.0, 2.0, 5.0})
        EXPECT_NEAR(kn::trace_at(s, t, kn::TraceKind::cylinder), kn::hemisphere_cylinder_factorized(h, bc0, t), 1e-12);
    }
  // h = 0, D at 0: interval sum e^{-t/2} / (1 - e^{-t}).
  double t = 0.8;
  EXPECT_NEAR(kn::hemisphere_cylinder_factorized(0.0, BcKind::dirichlet, t), std::exp(-t / 2) / (-std::expm1(-t)) / (2 * std::sinh(t / 2)), 1e-14);
}

TEST(Kernels, SyntheticFitRoundTrip) {
  kn::TraceSamples s;
  s.t_values = hybridspec::log_grid(0.01, 0.2, 40);
  for (double t : s.t_values) s.k_values.push_back(0.5 / t - 0.3 / std::sqrt(t) + 0.125 + 0.07 * std::log(t) + 0.2 * t);
  auto f = kn::fit_expansion(s, {{-1, -0.5, 0, 1}, {0}});
  EXPECT_NEAR(f.plain.at(-1.0), 0.5, 1e-9);
  EXPECT_NEAR(f.plain.at(0.0), 0.125, 1e-9);
  EXPECT_NEAR(f.log.at(0.0), 0.07, 1e-9);
  kn::Pins pins;
  pins.plain[-1.0] = 0.5;
  auto g = kn::fit_expansion(s, {{-1, -0.5, 0, 1}, {0}}, pins);
  EXPECT_EQ(g.plain.at(-1.0), 0.5);
  EXPECT_NEAR(g.plain.at(-0.5), -0.3, 1e-9);
}

TEST(Kernels, FitValidation) {
  kn::TraceSamples s;
  s.t_values = {0.1, 0.2, 0.3};
  s.k_values = {1, 2, 3};
  EXPECT_THROW(kn::fit_expansion(s, {{0, -1}, {}}), hybridspec::Error);
  EXPECT_THROW(kn::fit_expansion(s, {{0.3}, {}}), hybridspec::Error);
  EXPECT_THROW(kn::fit_expansion(s, {{-1, 0}, {}}), hybridspec::Error);
}

TEST(Kernels, LogTermDetection) {
  auto robin = kn::detect_log_terms(0.5, BcKind::dirichlet);
  EXPECT_NEAR(robin.log_coefficient, -0.5 / (2 * pi), 0.1 * 0.5 / (2 * pi));
  EXPECT_GT(robin.improvement_ratio, 10);
  EXPECT_EQ(robin.excluded_rows, 1);
  auto plain = kn::detect_log_terms(0.0, BcKind::dirichlet);
  EXPECT_LT(std::abs(plain.log_coefficient), 1e-3);
  EXPECT_LT(plain.improvement_ratio, 2);
  auto negative = kn::detect_log_terms(-0.5, BcKind::dirichlet);
  EXPECT_NEAR(negative.log_coefficient, 0.5 / (2 * pi), 0.1 * 0.5 / (2 * pi));
}

TEST(Kernels, HalfDiscConstant) {
  auto f = kn::half_disc_fit(BcKind::dirichlet, BcKind::neumann);
  EXPECT_NEAR(f.constant, -1.0 / 24, 5e-3);
  EXPECT_DOUBLE_EQ(f.inverse_t, 0.125);
  EXPECT_NEAR(f.inverse_sqrt_t, (pi - 2) / (8 * std::sqrt(pi)), 1e-15);
}
