#pragma once

// Two-dimensional conformal cocycle on the unit hemisphere, the map to the
// flat unit disc, and the effective action of the N/D disc.

#include <cmath>
#include <functional>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "error.hpp"
#include "numeric.hpp"
#include "specfun.hpp"
#include "zetafns.hpp"

namespace hybridspec::conformal {

struct StereographicPoint {
  double omega = 0;
  double radial_derivative = 0;  // d omega / d r
};

// omega(r) = log 2 - log(1 + r^2): the hemisphere metric is e^{2 omega} times
// the flat disc metric, and omega vanishes on the rim r = 1.
inline StereographicPoint stereographic_omega(double r) {
  require(std::isfinite(r) && r >= 0 && r <= 1, ErrorKind::domain, "stereographic_omega: r must be in [0, 1]");
  return {std::log(2.0) - std::log1p(r * r), -2 * r / (1 + r * r)};
}

// Axisymmetric scalar on the unit hemisphere in u = cos(theta), u in [0, 1],
// with the rim at u = 0. The reference metric has R = 2 and a geodesic rim.
struct ConformalPair {
  std::function<double(double)> omega;
  std::function<double(double)> box_omega;  // Laplace-Beltrami of omega
  double rim_normal_derivative = 0;         // inward normal derivative on the rim
  std::vector<double> corner_values;        // omega at the D/N meeting points
  double curvature = 2;
  double rim_curvature = 0;
};

// Hemisphere to flat disc: in u, omega = log(1 + u), box omega = -1, and the
// inward normal derivative on the rim is d omega / du at u = 0, i.e. 1.
inline ConformalPair hemisphere_to_disc() {
  ConformalPair p;
  p.omega = [](double u) { return std::log1p(u); };
  p.box_omega = [](double) { return -1.0; };
  p.rim_normal_derivative = 1;
  p.corner_values = {0.0, 0.0};
  return p;
}

inline ConformalPair trivial_pair() {
  ConformalPair p;
  p.omega = [](double) { return 0.0; };
  p.box_omega = [](double) { return 0.0; };
  p.corner_values = {0.0, 0.0};
  return p;
}

enum class Layout { allD, allN_nozero, ND };

inline const char* to_string(Layout l) {
  switch (l) {
    case Layout::allD: return "allD";
    case Layout::allN_nozero: return "allN_nozero";
    case Layout::ND: return "ND";
  }
  return "?";
}

namespace detail {

template <class F>
double integrate_u(F&& f) {
  return boost::math::quadrature::gauss<double, 64>::integrate(f, 0.0, 1.0);
}

struct Pieces {
  double bulk = 0;      // (1/24pi) int omega (R + box omega) dV
  double rim = 0;       // (1/12pi) int omega (kappa + n.d omega / 2) dA
  double normal = 0;    // int n.d omega dA over the whole rim
  double corners = 0;   // sum of omega_k
  double area_ref = 0;  // area of the reference metric
  double area_new = 0;  // area of e^{-2 omega} times the reference metric
};

inline Pieces pieces(const ConformalPair& p) {
  Pieces out;
  // dV = d phi du on the unit sphere.
  out.bulk = 2 * pi * integrate_u([&](double u) { return p.omega(u) * (p.curvature + p.box_omega(u)); }) / (24 * pi);
  const double rim_length = 2 * pi, w0 = p.omega(0.0);
  out.rim = rim_length * w0 * (p.rim_curvature + 0.5 * p.rim_normal_derivative) / (12 * pi);
  out.normal = rim_length * p.rim_normal_derivative;
  for (double w : p.corner_values) out.corners += w;
  out.area_ref = 2 * pi;
  out.area_new = 2 * pi * integrate_u([&](double u) { return std::exp(-2 * p.omega(u)); });
  return out;
}

}  // namespace detail

// W[e^{-2 omega} g, g] for a boundary entirely D (N fraction 0), entirely N
// (fraction 1) or split in half. The all-N value carries the normalisation
// (1/2) log(A_g / A_gbar) of the omitted constant mode.
inline double cocycle_direct(const ConformalPair& p, double n_fraction) {
  require(n_fraction >= 0 && n_fraction <= 1, ErrorKind::domain, "cocycle: N fraction must be in [0, 1]");
  auto q = detail::pieces(p);
  return q.bulk + q.rim + (2 * n_fraction - 1) * q.normal / (8 * pi) - q.corners / 16;
}

inline double cocycle_eval(const ConformalPair& p, Layout layout) {
  auto q = detail::pieces(p);
  switch (layout) {
    case Layout::allD: return cocycle_direct(p, 0.0);
    case Layout::allN_nozero: return cocycle_direct(p, 1.0) + 0.5 * std::log(q.area_ref / q.area_new);
    case Layout::ND:
      for (double w : p.corner_values)
        require(w == 0.0, ErrorKind::domain, "cocycle: ND layout needs omega = 0 at the D/N meeting points");
      return 0.5 * (cocycle_eval(p, Layout::allD) + cocycle_eval(p, Layout::allN_nozero));
  }
  return 0;
}

struct DiscActionReport {
  double closed_form = 0;      // (1/2) zeta'(-1) + (11/24) log 2 - 1/24
  double hemisphere = 0;       // -zeta'_ND(0) / 2
  double cocycle = 0;          // ND layout, average of D and N
  double combined = 0;         // hemisphere + cocycle
  double difference = 0;       // combined - closed_form
  double direct_cocycle = 0;   // half-and-half boundary term evaluated directly
  double direct_combined = 0;
  double tolerance = 1e-6;
  bool agree = false;
};

inline DiscActionReport nd_disc_effective_action(double tolerance = 1e-6) {
  DiscActionReport r;
  r.tolerance = tolerance;
  r.closed_form = 0.5 * specfun::riemann_zeta_deriv(-1.0) + 11.0 / 24 * specfun::ln2 - 1.0 / 24;
  r.hemisphere = -zetafns::hemisphere_zeta_prime0(zetafns::HemiPair::ND) / 2;
  auto p = hemisphere_to_disc();
  r.cocycle = cocycle_eval(p, Layout::ND);
  r.combined = r.hemisphere + r.cocycle;
  r.difference = r.combined - r.closed_form;
  r.direct_cocycle = cocycle_direct(p, 0.5);
  r.direct_combined = r.hemisphere + r.direct_cocycle;
  r.agree = std::abs(r.difference) < tolerance;
  return r;
}

}  // namespace hybridspec::conformal
