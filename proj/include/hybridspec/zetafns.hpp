#pragma once

// Spectral zeta values: hemisphere zeta'(0) for DD/NN/ND, lune zeta(0), and
// first-order Robin interval zeta functions.

#include <cmath>
#include <optional>
#include <string>

#include "coeffs.hpp"
#include "error.hpp"
#include "interval.hpp"
#include "numeric.hpp"
#include "specfun.hpp"

namespace hybridspec::zetafns {

struct ZetaValue {
  double at = 0;
  double value = 0;  // the finite part when `residue` is set
  std::optional<double> derivative;
  std::optional<double> residue;
  double h2_estimate = 0;  // size of the neglected O(h^2) term, when relevant
  std::string route;
};

enum class HemiPair { DD, NN, ND };

inline const char* to_string(HemiPair p) {
  switch (p) {
    case HemiPair::DD: return "DD";
    case HemiPair::NN: return "NN";
    case HemiPair::ND: return "ND";
  }
  return "?";
}

// zeta'(0) of -Laplacian on the unit hemisphere, closed forms.
inline double hemisphere_zeta_prime0(HemiPair pair) {
  const double z1 = specfun::riemann_zeta_deriv(-1.0), z0 = specfun::riemann_zeta_deriv(0.0);
  switch (pair) {
    case HemiPair::ND: return -z1 - std::log(2.0) / 12 - 0.25;
    case HemiPair::DD: return 2 * z1 - z0 - 0.25;
    case HemiPair::NN: return 2 * z1 + z0 - 0.25;
  }
  return 0;
}

// ND eigenvalues are nu^2 - 1/4 with degeneracy nu >= 1. Splitting
// (nu - 1/2)(nu + 1/2) into two Barnes zetas and expanding in 1/4 leaves one
// pole-induced correction, minus a quarter of the Barnes residue at s = 2.
inline double nd_zeta_prime0_barnes(double step = 1e-5) {
  auto z = [](double s) { return specfun::barnes_zeta2(s, 0.5) + specfun::barnes_zeta2(s, 1.5); };
  double d = richardson_derivative(z, 0.0, step);
  return d - specfun::barnes_zeta2_residue(1.0) / 4;
}

// Independent route: sum over nu = a + N with degeneracy nu + off of
// (nu^2 - 1/4)^{-s}, expanded binomially in 1/(4 nu^2) to all orders.
inline double hemisphere_zeta_prime0_binomial(HemiPair pair, int terms = 60) {
  double a = 1, off = 0;
  if (pair == HemiPair::DD) a = 1.5, off = -0.5;
  if (pair == HemiPair::NN) a = 1.5, off = 0.5;
  using specfun::hurwitz_zeta;
  using specfun::hurwitz_zeta_deriv;
  double d = 2 * hurwitz_zeta_deriv(-1.0, a) + 2 * off * hurwitz_zeta_deriv(0.0, a);
  d += (-specfun::digamma(a) + off * hurwitz_zeta(2.0, a)) / 4;
  CompensatedSum<double> tail;
  for (int j = 2; j <= terms; ++j)
    tail += std::pow(4.0, -j) / j * (hurwitz_zeta(2.0 * j - 1, a) + off * hurwitz_zeta(2.0 * j, a));
  return d + tail.value();
}

// Two-route comparison for the ND hemisphere.
struct HemisphereZetaReport {
  HemiPair pair = HemiPair::ND;
  double closed = 0;
  double barnes = 0;    // ND only
  double binomial = 0;
  double max_difference = 0;
};

inline HemisphereZetaReport hemisphere_zeta_report(HemiPair pair) {
  HemisphereZetaReport r;
  r.pair = pair;
  r.closed = hemisphere_zeta_prime0(pair);
  r.binomial = hemisphere_zeta_prime0_binomial(pair);
  r.max_difference = std::abs(r.binomial - r.closed);
  if (pair == HemiPair::ND) {
    r.barnes = nd_zeta_prime0_barnes();
    r.max_difference = std::max(r.max_difference, std::abs(r.barnes - r.closed));
  }
  return r;
}

// zeta_2(s, 1/2) + zeta_2(s, 3/2) against 2 (2^{s-1} - 1) zeta(s - 1); relative
// error, absolute where the right side is below 1 (it vanishes at s = -1).
inline double barnes_sum_identity_error(double s) {
  double lhs = specfun::barnes_zeta2(s, 0.5) + specfun::barnes_zeta2(s, 1.5);
  double rhs = 2 * (std::pow(2.0, s - 1) - 1) * specfun::riemann_zeta(s - 1);
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1.0);
}

// Pole structure of the split ND zeta function (1/2)[zeta_2(2s, 1/2) +
// zeta_2(2s, 3/2)], which differs from the ND zeta by terms regular at
// s = 1/2 and s = 1: residue at the volume pole s = 1 and at s = 1/2.
struct PoleStructure {
  double volume_residue = 0;  // expected area / (4 pi) = 1/2
  double boundary_residue = 0;  // expected 0
};

inline PoleStructure nd_pole_structure(double eps = 1e-6) {
  auto g = [](double s) { return 0.5 * (specfun::barnes_zeta2(2 * s, 0.5) + specfun::barnes_zeta2(2 * s, 1.5)); };
  auto residue = [&](double s0) { return 0.5 * eps * (g(s0 + eps) - g(s0 - eps)); };
  return {residue(1.0), residue(0.5)};
}

enum class LunePair { DD, ND };

// zeta(0) of -Laplacian + 1/4 on the lune of angle beta.
inline double lune_zeta_zero(double beta, LunePair pair) {
  require(std::isfinite(beta) && beta > 0 && beta <= 2 * pi, ErrorKind::domain, "lune_zeta_zero: beta must be in (0, 2 pi]");
  auto dd = [](double b) { return (pi / b - b / (2 * pi)) / 12; };
  if (pair == LunePair::DD) return dd(beta);
  require(beta <= pi, ErrorKind::domain, "lune_zeta_zero: ND needs beta <= pi");
  return dd(2 * beta) - dd(beta);
}

// Per-corner C_1 share of the ND lune once the volume term beta/6 is removed.
inline double lune_nd_corner_contribution(double beta) {
  return 0.5 * (4 * pi * lune_zeta_zero(beta, LunePair::ND) - beta / 6);
}

// First-order Robin interval zetas on [0, pi]:
//   (N,R): zeta(2s) + (2hs/pi) zeta(2s+2)   [+ k0^{-2s} for h < 0]
//   (D,R): (2^{2s}-1) zeta(2s) + (2hs/pi)(2^{2s+2}-1) zeta(2s+2)
// At s = -1/2 the value is the finite part and the residue is -h/(2 pi).
inline ZetaValue perturbative_interval_zeta(interval::Pair pair, double h, double s) {
  require(pair == interval::Pair::NR || pair == interval::Pair::DR, ErrorKind::domain,
          "perturbative_interval_zeta: pair must be NR or DR");
  require(std::isfinite(h) && std::abs(h) < 0.1, ErrorKind::out_of_regime, "perturbative_interval_zeta: need |h| < 0.1");
  require(std::isfinite(s), ErrorKind::domain, "perturbative_interval_zeta: s must be finite");
  require(std::abs(s - 0.5) > 1e-12, ErrorKind::pole, "perturbative_interval_zeta: pole at s = 1/2");
  using specfun::riemann_zeta;
  const double g = specfun::euler_gamma, l2 = specfun::ln2;
  ZetaValue z;
  z.at = s;
  z.route = "perturbative first order in h";
  z.h2_estimate = h * h * std::max(1.0, s * s) / (pi * pi);
  const bool nr = pair == interval::Pair::NR;
  if (std::abs(s + 0.5) < 1e-12) {
    z.at = -0.5;
    z.residue = -h / (2 * pi);
    z.value = nr ? -1.0 / 12 + (h / pi) * (1 - g) : 1.0 / 24 + (h / pi) * (1 - g - 2 * l2);
  } else if (nr) {
    z.value = riemann_zeta(2 * s) + (h == 0 ? 0 : (2 * h * s / pi) * riemann_zeta(2 * s + 2));
  } else {
    z.value = (std::pow(2.0, 2 * s) - 1) * riemann_zeta(2 * s) +
              (h == 0 ? 0 : (2 * h * s / pi) * (std::pow(2.0, 2 * s + 2) - 1) * riemann_zeta(2 * s + 2));
  }
  if (nr && h < 0) {
    // The branch-0 root k0 = sqrt(-h/pi) sits below the m >= 1 ladder.
    z.value += std::pow(-h / pi, -s);
    z.route += " with the branch-0 root";
  }
  return z;
}

}  // namespace hybridspec::zetafns
