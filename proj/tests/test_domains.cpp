#include <cmath>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <hybridspec/domains.hpp>

namespace dm = hybridspec::domains;
using hybridspec::pi;
using hybridspec::interval::BcKind;

TEST(HalfDisc, LowestEigenvalues) {
  auto dd = dm::half_disc_spectrum({BcKind::dirichlet, BcKind::dirichlet}, 100);
  double j11 = boost::math::cyl_bessel_j_zero(1.0, 1);
  EXPECT_NEAR(dd.levels[0].lambda, j11 * j11, 1e-10);
  auto nd = dm::half_disc_spectrum({BcKind::neumann, BcKind::dirichlet}, 100);
  double j01 = boost::math::cyl_bessel_j_zero(0.0, 1);
  EXPECT_NEAR(nd.levels[0].lambda, j01 * j01, 1e-10);
  auto nn = dm::half_disc_spectrum({BcKind::neumann, BcKind::neumann}, 100);
  EXPECT_EQ(nn.zero_mode_count, 1);
  EXPECT_NEAR(nn.levels[0].lambda, 1.8411837813406593 * 1.8411837813406593, 1e-10);
}

TEST(HalfDisc, CountingFunctionFollowsWeyl) {
  // N(L) ~ area L / (4 pi) + (L_N - L_D) sqrt(L) / (4 pi)
  const double L = 4000;
  auto dd = dm::half_disc_spectrum({BcKind::dirichlet, BcKind::dirichlet}, L);
  double weyl = (pi / 2) * L / (4 * pi) - (2 + pi) * std::sqrt(L) / (4 * pi);
  EXPECT_NEAR(static_cast<double>(dd.mode_count()), weyl, 0.02 * weyl);
}

TEST(HalfDisc, RejectsRobin) { EXPECT_THROW(dm::half_disc_spectrum({BcKind::robin, BcKind::dirichlet}, 100), hybridspec::Error); }

TEST(Hemisphere, SpectrumStructure) {
  // D at 0 with h = 0: rows k = 1/2, 3/2, ...; lambda = (1 + m + n)^2 with
  // degeneracy equal to the number of (m, n) pairs, i.e. 1 + m + n.
  auto s = dm::hemisphere_spectrum({BcKind::dirichlet, 0.0}, 50);
  ASSERT_GE(s.levels.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(s.levels[i].lambda, (i + 1.0) * (i + 1.0));
    EXPECT_EQ(s.levels[i].degeneracy, i + 1);
  }
  EXPECT_DOUBLE_EQ(s.operator_shift, 0.25);
  // N at 0, h = 0 keeps the k = 0 row.
  auto nn = dm::hemisphere_spectrum({BcKind::neumann, 0.0}, 10);
  EXPECT_DOUBLE_EQ(nn.levels[0].lambda, 0.25);
}

TEST(Hemisphere, NormalisationAndBarnesIntegrals) {
  for (double k : {0.5, 1.0, 1.5, 2.5})
    for (int n = 0; n <= 3; ++n) {
      auto r = dm::mode_integral_checks(k, n);
      EXPECT_LT(r.norm_rel_err, 1e-10) << k << " " << n;
      EXPECT_LT(r.barnes_rel_err, 1e-10) << k << " " << n;
      EXPECT_LT(r.pole_rel_err, 1e-5) << k << " " << n;
      EXPECT_LT(r.parity_rel_err, 1e-10) << k << " " << n;
    }
}

TEST(Hemisphere, NormSquaredGivesUnitNorm) {
  // int_0^pi sin^2(k phi) d phi = pi/2 for half-integer k, times the polar integral.
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      auto r = dm::mode_integral_checks(m + 0.5, n);
      EXPECT_NEAR(dm::hemisphere_norm_squared(m, n) * (pi / 2) * r.norm_quadrature, 1.0, 1e-12) << m << " " << n;
    }
}

TEST(Hemisphere, FirstOrderShift) {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      auto r = dm::perturbation_delta(m, n, 1e-3);
      EXPECT_NEAR(r.delta_sqrt_lambda / r.expected, 1.0, 1e-10) << m << " " << n;
    }
  EXPECT_THROW(dm::perturbation_delta(0, 0, 0.5), hybridspec::Error);
}

TEST(Hemisphere, FirstOrderShiftMatchesExactRoots) {
  // sqrt(lambda) = 1/2 + k_m + n, so the shift equals that of the interval root.
  const double h = 1e-6;
  auto w = hybridspec::interval::wavenumbers(dm::HemisphereProblem{BcKind::dirichlet, h}.azimuthal(), 4);
  for (int m = 0; m < 4; ++m) {
    auto r = dm::perturbation_delta(m, 1, h);
    EXPECT_NEAR((w.values[m] - (m + 0.5)) / r.delta_sqrt_lambda, 1.0, 1e-5);
  }
}
