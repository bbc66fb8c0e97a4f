#include <cmath>

#include <gtest/gtest.h>

#include <hybridspec/coeffs.hpp>

namespace cf = hybridspec::coeffs;
using cf::CornerPair;
using hybridspec::pi;

TEST(Coeffs, WedgeValues) {
  EXPECT_NEAR(cf::c1_wedge(pi, CornerPair::DN), -pi / 4, 1e-15);
  EXPECT_NEAR(cf::c1_wedge(pi / 2, CornerPair::DD), pi / 4, 1e-15);
  EXPECT_DOUBLE_EQ(cf::c1_wedge(pi, CornerPair::NN), 0.0);
  for (double b : {0.2, 0.9, 1.7, 3.0})
    EXPECT_NEAR(cf::c1_wedge(b, CornerPair::DN), cf::c1_wedge(2 * b, CornerPair::DD) - cf::c1_wedge(b, CornerPair::DD), 1e-14);
  EXPECT_THROW(cf::c1_wedge(0.0, CornerPair::DD), hybridspec::Error);
}

TEST(Coeffs, GeometryExamples) {
  EXPECT_NEAR(cf::c1_geometry(cf::three_ball_dn()), 8 * pi / 3 - pi * pi / 2, 1e-14);
  // Unit square, all D: four right angles give 4 (pi/4) = pi, constant 1/4.
  EXPECT_NEAR(cf::c1_geometry(cf::unit_square_d()) / (4 * pi), 0.25, 1e-15);
  EXPECT_NEAR(cf::c1_geometry(cf::named_geometry("half-disc-DD")) / (4 * pi), 5.0 / 24, 1e-15);
  EXPECT_NEAR(cf::c1_geometry(cf::named_geometry("half-disc-ND")) / (4 * pi), -1.0 / 24, 1e-15);
  EXPECT_NEAR(cf::c1_geometry(cf::named_geometry("hemisphere-DN")), -pi / 3, 1e-15);
  EXPECT_NEAR(cf::c1_geometry(cf::named_geometry("hemisphere-NN")), pi / 6, 1e-15);
  EXPECT_THROW(cf::named_geometry("torus"), hybridspec::Error);
}

TEST(Coeffs, RobinPieceAndNote) {
  cf::GeometrySpec g{"robin-strip", 0, 0, {{hybridspec::interval::BcKind::robin, 0, 0.5, "edge"}}, {}};
  auto r = cf::c1_geometry_detail(g);
  EXPECT_DOUBLE_EQ(r.value, -1.0);
  EXPECT_FALSE(r.validity_note.empty());
  cf::GeometrySpec bad{"bad", 0, 0, {{hybridspec::interval::BcKind::dirichlet, 0, 0.5, "edge"}}, {}};
  EXPECT_THROW(cf::c1_geometry(bad), hybridspec::Error);
}

TEST(Coeffs, CornerWeights) {
  EXPECT_EQ(cf::c32_corner_structure(CornerPair::DD), -3);
  EXPECT_EQ(cf::c32_corner_structure(CornerPair::NN), 9);
  EXPECT_EQ(cf::c32_corner_structure(CornerPair::DN), -9);
  EXPECT_EQ(cf::c32_corner_structure_nd(), 3);
  EXPECT_THROW(cf::c32_corner_structure(CornerPair::DD, pi / 3), hybridspec::Error);
}

TEST(Coeffs, RobinBk) {
  EXPECT_NEAR(cf::robin_interval_bk(0.3, 1), 0.3 / std::sqrt(pi), 1e-16);
  EXPECT_NEAR(cf::robin_interval_bk(0.3, 2), 0.045, 1e-16);
  EXPECT_THROW(cf::robin_interval_bk(0.3, 0), hybridspec::Error);
}

TEST(Coeffs, BridgeRoundTripAndUndetermined) {
  cf::CoefficientTable a{cf::Side::cylinder, 1};
  a.entries[-1].plain = cf::Coefficient::known(1.0);
  a.entries[0].plain = cf::Coefficient::known(-0.5);
  a.entries[1].log = cf::Coefficient::known(-0.1 / pi);
  a.entries[2].plain = cf::Coefficient::known(0.3);
  a.entries[2].log = cf::Coefficient::known(0.2);
  auto b = cf::bridge_a_to_b(a);
  EXPECT_NEAR(b.entries.at(1).plain.value, 0.1 / std::sqrt(pi), 1e-16);
  EXPECT_EQ(b.entries.at(1).log.value, 0.0);
  EXPECT_EQ(b.entries.at(0).log.state, cf::Coefficient::State::absent);
  auto back = cf::bridge_b_to_a(b);
  EXPECT_EQ(back.entries.at(1).plain.state, cf::Coefficient::State::undetermined);
  EXPECT_NEAR(back.entries.at(1).log.value, a.entries[1].log.value, 1e-16);
  EXPECT_NEAR(back.entries.at(2).plain.value, 0.3, 1e-15);
  EXPECT_NEAR(back.entries.at(2).log.value, 0.2, 1e-15);
  EXPECT_THROW(cf::bridge_b_to_a(b, true), hybridspec::Error);
  auto missing = a;
  missing.entries.erase(1);
  auto partial = cf::bridge_a_to_b(missing);
  EXPECT_EQ(partial.entries.at(1).plain.state, cf::Coefficient::State::undetermined);
  try {
    cf::bridge_a_to_b(missing, true);
    FAIL();
  } catch (const hybridspec::Error& e) {
    EXPECT_EQ(e.kind(), hybridspec::ErrorKind::missing_input);
  }
}

TEST(Coeffs, LogPartsMatchSeries) {
  for (double h : {-0.4, 0.25})
    for (double t : {0.05, 0.3, 1.2}) {
      double series = cf::interval_log_series(h, t, 12);
      EXPECT_NEAR(cf::log_closed_forms(h, t, cf::LogTarget::interval), series, 1e-15 + 1e-13 * std::abs(series));
    }
  EXPECT_NEAR(cf::log_series_coefficient(0.3, 1), -0.3 / pi, 1e-17);
  EXPECT_NEAR(cf::log_series_coefficient(0.3, 2), 0.027 / (6 * pi), 1e-17);
  // Hemisphere log part tends to -(h/pi) log t as t -> 0.
  double t = 1e-5, h = 0.5;
  EXPECT_NEAR(cf::log_closed_forms(h, t, cf::LogTarget::hemisphere) / std::log(t), -h / pi, 1e-9);
}
