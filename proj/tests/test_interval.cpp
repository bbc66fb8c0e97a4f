#include <cmath>

#include <gtest/gtest.h>

#include <hybridspec/interval.hpp>

namespace iv = hybridspec::interval;
using BC = iv::BoundaryCondition;
using hybridspec::ErrorKind;
using hybridspec::pi;

// Plain bisection on k cot(k pi) - h (D,R) or k tan(k pi) + h (N,R) inside a
// branch where the function is monotone.
static double bisect_root(bool dr, double h, double lo, double hi) {
  auto f = [&](double k) { return dr ? k / std::tan(k * pi) - h : k * std::tan(k * pi) + h; };
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

TEST(Interval, ClosedForms) {
  auto dd = iv::wavenumbers({pi, BC::dirichlet(), BC::dirichlet()}, 3);
  EXPECT_EQ(dd.values, (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(dd.zero_mode_count, 0);
  auto nn = iv::wavenumbers({pi, BC::neumann(), BC::neumann()}, 3);
  EXPECT_EQ(nn.zero_mode_count, 1);
  auto dn = iv::wavenumbers({2.0, BC::neumann(), BC::dirichlet()}, 2);
  EXPECT_DOUBLE_EQ(dn.values[1], 3 * pi / 4);
}

TEST(Interval, UnionIdentities) {
  for (double L : {pi, 1.0, 2.7}) {
    auto rep = iv::union_identity_check(L, 100);
    EXPECT_TRUE(rep.passed) << L;
    EXPECT_LT(rep.max_mismatch, 1e-14);
    EXPECT_EQ(rep.identities.size(), 3u);
  }
}

TEST(Interval, RobinRootsMatchBisection) {
  for (double h : {-0.7, -0.05, 0.02, 0.2}) {
    auto w = iv::wavenumbers({pi, BC::dirichlet(), BC::robin(h)}, 6);
    for (int m = 0; m < 6; ++m) {
      int branch = m + w.first_branch;
      double ref = bisect_root(true, h, branch + 1e-12, branch + 0.5);
      if (h < 0) ref = bisect_root(true, h, branch + 0.5, branch + 1 - 1e-12);
      EXPECT_NEAR(w.values[m], ref, 1e-12) << h << " " << m;
    }
    auto n = iv::wavenumbers({pi, BC::neumann(), BC::robin(h)}, 6);
    for (int m = 0; m < 6; ++m) {
      int branch = m + n.first_branch;
      double ref = h > 0 ? bisect_root(false, h, branch - 0.5 + 1e-12, branch) : bisect_root(false, h, branch + 1e-15, branch + 0.5 - 1e-12);
      EXPECT_NEAR(n.values[m], ref, 1e-12) << h << " " << m;
    }
  }
}

TEST(Interval, RobinResidualsSmall) {
  iv::IntervalProblem p{pi, BC::neumann(), BC::robin(0.3)};
  for (double k : iv::wavenumbers(p, 100).values) EXPECT_LT(std::abs(static_cast<double>(iv::robin_residual(p, k))), 1e-10);
}

TEST(Interval, ImaginaryRootsExcludedAndFlagged) {
  auto nr = iv::wavenumbers({pi, BC::neumann(), BC::robin(0.2)}, 3);
  EXPECT_TRUE(nr.excluded_imaginary);
  EXPECT_EQ(nr.first_branch, 1);
  auto dr = iv::wavenumbers({pi, BC::dirichlet(), BC::robin(0.5)}, 3);
  EXPECT_TRUE(dr.excluded_imaginary);
  EXPECT_GT(dr.values[0], 1.0);
  auto dr_small = iv::wavenumbers({pi, BC::dirichlet(), BC::robin(0.2)}, 3);
  EXPECT_FALSE(dr_small.excluded_imaginary);
  EXPECT_LT(dr_small.values[0], 0.5);
}

TEST(Interval, SmallNegativeRobinLowestRoot) {
  auto w = iv::wavenumbers({pi, BC::neumann(), BC::robin(-0.01)}, 2);
  EXPECT_NEAR(w.values[0], std::sqrt(0.01 / pi), 0.02 * std::sqrt(0.01 / pi));
}

TEST(Interval, RobinZeroFallsBackToNeumann) {
  auto w = iv::wavenumbers({pi, BC::dirichlet(), BC::robin(0.0)}, 3);
  EXPECT_EQ(w.values, (std::vector<double>{0.5, 1.5, 2.5}));
}

TEST(Interval, PerturbativeMatchesExactToSecondOrder) {
  const double h = 1e-3;
  auto exact = iv::wavenumbers({pi, BC::dirichlet(), BC::robin(h)}, 10).values;
  auto pert = iv::perturbative_wavenumbers({pi, BC::dirichlet(), BC::robin(h)}, 10);
  for (int m = 0; m < 10; ++m) EXPECT_NEAR(exact[m], pert[m], 10 * h * h);
  EXPECT_THROW(iv::perturbative_wavenumbers({pi, BC::dirichlet(), BC::robin(0.7)}, 3), hybridspec::Error);
}

TEST(Interval, ValidationErrors) {
  auto expect_kind = [](auto&& f, ErrorKind k) {
    try {
      f();
      FAIL() << "no error";
    } catch (const hybridspec::Error& e) {
      EXPECT_EQ(e.kind(), k);
    }
  };
  expect_kind([] { iv::wavenumbers({pi, BC::robin(0.1), BC::robin(0.1)}, 3); }, ErrorKind::unsupported);
  expect_kind([] { iv::wavenumbers({2.0, BC::dirichlet(), BC::robin(0.1)}, 3); }, ErrorKind::unsupported);
  expect_kind([] { iv::wavenumbers({-1.0, BC::dirichlet(), BC::dirichlet()}, 3); }, ErrorKind::domain);
  expect_kind([] { iv::wavenumbers({pi, BC::dirichlet(), BC::dirichlet()}, 0); }, ErrorKind::domain);
  expect_kind([] { iv::wavenumbers({pi, BC::dirichlet(), BC::robin(NAN)}, 3); }, ErrorKind::domain);
}
