#include <cmath>

#include <gtest/gtest.h>

#include <hybridspec/casimir.hpp>

namespace cs = hybridspec::casimir;
using cs::Pair;
using hybridspec::pi;

TEST(Casimir, StandardValues) {
  EXPECT_NEAR(cs::casimir_finite_part(Pair::DD, 0).energy, -1.0 / 24, 1e-12);
  EXPECT_NEAR(cs::casimir_finite_part(Pair::NN, 0).energy, -1.0 / 24, 1e-12);
  EXPECT_NEAR(cs::casimir_finite_part(Pair::DN, 0).energy, 1.0 / 48, 1e-12);
  EXPECT_NEAR(cs::casimir_finite_part(Pair::NR, 0).energy, -1.0 / 24, 1e-12);
  EXPECT_NEAR(cs::casimir_finite_part(Pair::DR, 0).energy, 1.0 / 48, 1e-12);
}

TEST(Casimir, ThreeRoutesAtZero) {
  EXPECT_NEAR(cs::casimir_exact_integral(Pair::NR, 0).energy, -1.0 / 24, 1e-8);
  EXPECT_NEAR(cs::casimir_exact_integral(Pair::DR, 0).energy, 1.0 / 48, 1e-8);
  EXPECT_NEAR(cs::casimir_perturbative(Pair::DR, 0).energy, 1.0 / 48, 1e-15);
}

TEST(Casimir, FinitePartFollowsFirstOrder) {
  for (double h : {1e-3, -1e-3}) {
    auto fp = cs::casimir_finite_part(Pair::DR, h);
    auto pt = cs::casimir_perturbative(Pair::DR, h);
    EXPECT_NEAR(fp.energy, pt.energy, 1e-6);
    EXPECT_NEAR(fp.residue, -h / (2 * pi), 1e-17);
  }
  // Differences are second order: quadrupling h quadruples the gap squared.
  double g1 = cs::casimir_finite_part(Pair::DR, 1e-3).energy - cs::casimir_perturbative(Pair::DR, 1e-3).energy;
  double g2 = cs::casimir_finite_part(Pair::DR, 4e-3).energy - cs::casimir_perturbative(Pair::DR, 4e-3).energy;
  EXPECT_NEAR(g2 / g1, 16, 1.0);
}

TEST(Casimir, FinitePartIndependentOfCount) {
  double a = cs::casimir_finite_part(Pair::NR, 0.2, 2000).energy;
  double b = cs::casimir_finite_part(Pair::NR, 0.2, 20000).energy;
  EXPECT_NEAR(a, b, 1e-10);
}

TEST(Casimir, ExactIntegralErrors) {
  try {
    cs::casimir_exact_integral(Pair::NR, 0.1);
    FAIL();
  } catch (const hybridspec::Error& e) {
    EXPECT_EQ(e.kind(), hybridspec::ErrorKind::pole_on_contour);
  }
  EXPECT_THROW(cs::casimir_exact_integral(Pair::DD, -0.1), hybridspec::Error);
  EXPECT_THROW(cs::casimir_finite_part(Pair::DR, 2.0), hybridspec::Error);
  EXPECT_THROW(cs::casimir_finite_part(Pair::DR, 0.1, 10), hybridspec::Error);
}

TEST(Casimir, ExactIntegralSmallH) {
  // E(N,R) - E(N,N) ~ (1/2) sqrt(-h/pi) to leading order.
  double h = -1e-6;
  double d = cs::casimir_exact_integral(Pair::NR, h).energy + 1.0 / 24;
  EXPECT_NEAR(d / (0.5 * std::sqrt(-h / pi)), 1.0, 0.01);
}

TEST(Casimir, SqrtFit) {
  auto f = cs::sqrt_term_fit(true);
  EXPECT_NEAR(f.relative_error, 0.0, 0.02);
  EXPECT_EQ(f.columns.size(), 3u);
}

TEST(Casimir, C1Map) {
  EXPECT_NEAR(cs::c1_from_casimir(1.0 / 48, 0), -pi / 3, 1e-15);
  EXPECT_NEAR(cs::c1_from_casimir(-1.0 / 24, 0), pi / 6, 1e-15);
  EXPECT_NEAR(cs::casimir_from_c1(cs::c1_from_casimir(0.01, 0.02), 0.02), 0.01, 1e-16);
  // First order in h: C1(D,R) = -pi/3 + 8 h log 2.
  const double h = 1e-4;
  double c1 = cs::c1_from_casimir(cs::casimir_perturbative(Pair::DR, h).energy, h);
  EXPECT_NEAR(c1, -pi / 3 + 8 * h * std::log(2.0), 1e-15);
}

TEST(Casimir, ProbeIsDeterministic) {
  auto a = cs::functional_relation_probe(Pair::NR);
  auto b = cs::functional_relation_probe(Pair::NR);
  ASSERT_EQ(a.entries.size(), 5u);
  for (std::size_t i = 0; i < a.entries.size(); ++i) EXPECT_EQ(a.entries[i].deviation, b.entries[i].deviation);
  EXPECT_THROW(cs::functional_relation_probe(Pair::NR, {-0.01, -0.02, 0.04, -0.08}), hybridspec::Error);
  EXPECT_THROW(cs::functional_relation_probe(Pair::NR, {-0.01, -0.02}), hybridspec::Error);
}
