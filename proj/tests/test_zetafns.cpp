#include <cmath>

#include <boost/math/special_functions/zeta.hpp>
#include <gtest/gtest.h>

#include <hybridspec/interval.hpp>
#include <hybridspec/zetafns.hpp>

namespace zf = hybridspec::zetafns;
using hybridspec::pi;
using hybridspec::interval::Pair;

TEST(Zeta, HemisphereClosedForms) {
  EXPECT_NEAR(zf::hemisphere_zeta_prime0(zf::HemiPair::ND), -0.1423411, 1e-7);
  EXPECT_NEAR(zf::hemisphere_zeta_prime0(zf::HemiPair::DD), 0.3380962, 1e-7);
  EXPECT_NEAR(zf::hemisphere_zeta_prime0(zf::HemiPair::NN), -1.4997808, 1e-7);
}

TEST(Zeta, HemisphereRoutesAgree) {
  auto nd = zf::hemisphere_zeta_report(zf::HemiPair::ND);
  EXPECT_LT(std::abs(nd.barnes - nd.closed), 1e-6);
  EXPECT_LT(std::abs(nd.binomial - nd.closed), 1e-10);
  for (auto p : {zf::HemiPair::DD, zf::HemiPair::NN}) EXPECT_LT(zf::hemisphere_zeta_report(p).max_difference, 1e-10);
}

TEST(Zeta, BarnesSumIdentity) {
  for (double s : {-1.0, 3.0, 4.0}) EXPECT_LT(zf::barnes_sum_identity_error(s), 1e-10);
}

TEST(Zeta, NdPoleStructure) {
  auto p = zf::nd_pole_structure();
  EXPECT_NEAR(p.volume_residue, 2 * pi / (4 * pi), 1e-3);
  EXPECT_LT(std::abs(p.boundary_residue), 1e-6);
}

TEST(Zeta, Lune) {
  EXPECT_NEAR(zf::lune_zeta_zero(pi, zf::LunePair::DD), 1.0 / 24, 1e-16);
  EXPECT_NEAR(zf::lune_zeta_zero(pi, zf::LunePair::ND), -1.0 / 12, 1e-16);
  EXPECT_THROW(zf::lune_zeta_zero(1.5 * pi, zf::LunePair::ND), hybridspec::Error);
  EXPECT_THROW(zf::lune_zeta_zero(-1.0, zf::LunePair::DD), hybridspec::Error);
  for (double b : {0.4, 1.3, 2.9}) {
    double corner = -(pi * pi + 2 * b * b) / (12 * b);
    EXPECT_NEAR(zf::lune_nd_corner_contribution(b), corner, 1e-14);
  }
}

TEST(Zeta, PerturbativeAtHalf) {
  const double h = 0.01, g = hybridspec::specfun::euler_gamma;
  auto nr = zf::perturbative_interval_zeta(Pair::NR, h, -0.5);
  ASSERT_TRUE(nr.residue.has_value());
  EXPECT_NEAR(*nr.residue, -h / (2 * pi), 1e-17);
  EXPECT_NEAR(nr.value / 2, -1.0 / 24 - (h / (2 * pi)) * (g - 1), 1e-16);
  auto dr = zf::perturbative_interval_zeta(Pair::DR, h, -0.5);
  EXPECT_NEAR(dr.value / 2, 1.0 / 48 - (h / (2 * pi)) * (g - 1 + 2 * std::log(2.0)), 1e-16);
  EXPECT_NEAR(zf::perturbative_interval_zeta(Pair::NR, 0, 2).value, boost::math::zeta(4.0), 1e-13);
  EXPECT_THROW(zf::perturbative_interval_zeta(Pair::NR, 0.2, 2), hybridspec::Error);
  EXPECT_THROW(zf::perturbative_interval_zeta(Pair::DR, 0.01, 0.5), hybridspec::Error);
}

TEST(Zeta, PerturbativeMatchesRootSums) {
  // sum k_m^{-2s} over exact roots at s = 2 agrees to O(h^2). The branch-0
  // root of (N,R) at h < 0 is only known to leading order and is left out.
  for (Pair pair : {Pair::NR, Pair::DR})
    for (double h : {0.01, -0.01}) {
      hybridspec::interval::IntervalProblem p{pi, pair == Pair::NR ? hybridspec::interval::BoundaryCondition::neumann()
                                                                   : hybridspec::interval::BoundaryCondition::dirichlet(),
                                              hybridspec::interval::BoundaryCondition::robin(h)};
      auto w = hybridspec::interval::wavenumbers(p, 20000);
      const bool low = pair == Pair::NR && h < 0;
      long double sum = 0;
      for (auto it = w.values.rbegin(); it != w.values.rend() - (low ? 1 : 0); ++it) sum += std::pow(static_cast<long double>(*it), -4.0L);
      sum += 1.0L / (3 * std::pow(static_cast<long double>(w.values.back()), 3));
      double f = zf::perturbative_interval_zeta(pair, h, 2.0).value;
      if (low) f -= std::pow(-h / pi, -2.0);
      EXPECT_NEAR(static_cast<double>(sum) / f, 1.0, 50 * h * h) << static_cast<int>(pair) << " " << h;
    }
}
