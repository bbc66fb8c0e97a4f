#include <cmath>

#include <gtest/gtest.h>

#include <hybridspec/conformal.hpp>

namespace cf = hybridspec::conformal;
using hybridspec::pi;

TEST(Conformal, StereographicOmega) {
  EXPECT_EQ(cf::stereographic_omega(1.0).omega, 0.0);
  EXPECT_NEAR(cf::stereographic_omega(0.0).omega, std::log(2.0), 1e-16);
  EXPECT_NEAR(cf::stereographic_omega(1.0).radial_derivative, -1.0, 1e-16);
  EXPECT_THROW(cf::stereographic_omega(1.5), hybridspec::Error);
  // In u = cos(theta), r = tan(theta/2): the same field.
  double th = 0.7, r = std::tan(th / 2);
  EXPECT_NEAR(cf::stereographic_omega(r).omega, cf::hemisphere_to_disc().omega(std::cos(th)), 1e-15);
}

TEST(Conformal, CocycleClosedForms) {
  auto p = cf::hemisphere_to_disc();
  const double l2 = std::log(2.0);
  EXPECT_NEAR(cf::cocycle_eval(p, cf::Layout::allD), l2 / 6 - 1.0 / 3, 1e-12);
  EXPECT_NEAR(cf::cocycle_eval(p, cf::Layout::allN_nozero), 2 * l2 / 3 + 1.0 / 6, 1e-12);
  EXPECT_NEAR(cf::cocycle_eval(p, cf::Layout::ND), 5 * l2 / 12 - 1.0 / 12, 1e-12);
  for (double w : p.corner_values) EXPECT_EQ(w, 0.0);
}

TEST(Conformal, TrivialFieldGivesZero) {
  auto p = cf::trivial_pair();
  for (auto l : {cf::Layout::allD, cf::Layout::allN_nozero, cf::Layout::ND}) EXPECT_EQ(cf::cocycle_eval(p, l), 0.0);
}

TEST(Conformal, NdLayoutRequiresVanishingCornerValues) {
  auto p = cf::hemisphere_to_disc();
  p.corner_values = {0.1, 0.0};
  EXPECT_THROW(cf::cocycle_eval(p, cf::Layout::ND), hybridspec::Error);
}

TEST(Conformal, DiscActionReport) {
  auto r = cf::nd_disc_effective_action();
  EXPECT_NEAR(r.closed_form, 0.1933152, 1e-7);
  EXPECT_NEAR(r.hemisphere, 0.0711706, 1e-7);
  EXPECT_DOUBLE_EQ(r.combined, r.hemisphere + r.cocycle);
  EXPECT_DOUBLE_EQ(r.difference, r.combined - r.closed_form);
  EXPECT_EQ(r.agree, std::abs(r.difference) < r.tolerance);
}
