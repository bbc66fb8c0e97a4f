#pragma once

// Closed-form heat-kernel coefficients: wedge and piecewise-smooth C_1, the
// right-angle C_{3/2} corner weights, Robin interval b_k, the
// cylinder-to-heat coefficient bridge and the logarithmic parts of the Robin
// interval and hemisphere cylinder kernels.

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "interval.hpp"
#include "numeric.hpp"

namespace hybridspec::coeffs {

using interval::BcKind;

enum class CornerPair { DD, NN, RR, DN, DR, NR };

inline const char* to_string(CornerPair p) {
  switch (p) {
    case CornerPair::DD: return "DD";
    case CornerPair::NN: return "NN";
    case CornerPair::RR: return "RR";
    case CornerPair::DN: return "DN";
    case CornerPair::DR: return "DR";
    case CornerPair::NR: return "NR";
  }
  return "?";
}

// C_1 contribution per unit length of a wedge of angle beta.
inline double c1_wedge(double beta, CornerPair pair) {
  require(std::isfinite(beta) && beta > 0 && beta <= 2 * pi, ErrorKind::domain, "c1_wedge: beta must be in (0, 2 pi]");
  switch (pair) {
    case CornerPair::DD:
    case CornerPair::NN:
    case CornerPair::RR:
      return (pi * pi - beta * beta) / (6 * beta);
    case CornerPair::DN:
    case CornerPair::DR:
    case CornerPair::NR:
      return -(pi * pi + 2 * beta * beta) / (12 * beta);
  }
  return 0;
}

struct BoundaryPiece {
  BcKind condition = BcKind::dirichlet;
  double kappa_integral = 0;  // integral of the extrinsic curvature
  double s_integral = 0;      // integral of the Robin function (Robin only)
  std::string label;
};

struct Corner {
  double beta = pi;
  CornerPair pair = CornerPair::DD;
  double length = 1;  // measure of the singular set (1 for a point in 2D)
  std::string label;
};

struct GeometrySpec {
  std::string name;
  double bulk_curvature_integral = 0;
  double xi = 0;
  std::vector<BoundaryPiece> pieces;
  std::vector<Corner> corners;

  void validate() const {
    require(std::isfinite(bulk_curvature_integral) && std::isfinite(xi), ErrorKind::domain, "geometry: non-finite bulk data");
    for (const auto& p : pieces) {
      require(std::isfinite(p.kappa_integral) && std::isfinite(p.s_integral), ErrorKind::domain, "geometry: non-finite piece data");
      require(p.condition == BcKind::robin || p.s_integral == 0, ErrorKind::domain, "geometry: S integral only on Robin pieces");
    }
    for (const auto& c : corners) {
      require(c.beta > 0 && c.beta <= 2 * pi, ErrorKind::domain, "geometry: corner angle must be in (0, 2 pi]");
      require(c.length > 0, ErrorKind::domain, "geometry: corner length must be positive");
    }
  }
};

struct C1Result {
  double value = 0;
  double bulk = 0, boundary = 0, robin = 0, corners = 0;
  std::string validity_note;
};

// C_1 = (1/6 - xi) int R + (1/3) sum int kappa - 2 sum int S + corner terms,
// with smearing function 1. Robin corners use the wedge form of the
// corresponding D/N pair with the Robin side replaced by N.
inline C1Result c1_geometry_detail(const GeometrySpec& g) {
  g.validate();
  C1Result r;
  r.bulk = (1.0 / 6.0 - g.xi) * g.bulk_curvature_integral;
  bool robin = false;
  for (const auto& p : g.pieces) {
    r.boundary += p.kappa_integral / 3;
    if (p.condition == BcKind::robin) {
      r.robin -= 2 * p.s_integral;
      robin = true;
    }
  }
  for (const auto& c : g.corners) {
    r.corners += c.length * c1_wedge(c.beta, c.pair);
    if (c.pair == CornerPair::DR || c.pair == CornerPair::NR || c.pair == CornerPair::RR) robin = true;
  }
  r.value = r.bulk + r.boundary + r.robin + r.corners;
  if (robin) r.validity_note = "Robin corner and S terms assume a bounded Robin function (small S^2 t regime)";
  return r;
}

inline double c1_geometry(const GeometrySpec& g) { return c1_geometry_detail(g).value; }

// Named examples.
inline GeometrySpec three_ball_dn() {
  // Unit 3-ball, D on the northern and N on the southern boundary hemisphere.
  // kappa = 2 on the unit sphere; the equator is a DN edge of angle pi.
  return {"3ball-DN", 0, 0,
          {{BcKind::dirichlet, 2 * 2 * pi, 0, "northern"}, {BcKind::neumann, 2 * 2 * pi, 0, "southern"}},
          {{pi, CornerPair::DN, 2 * pi, "equator"}}};
}

inline GeometrySpec unit_square_d() {
  return {"unit-square-D", 0, 0,
          {{BcKind::dirichlet, 0, 0, "sides"}},
          {{pi / 2, CornerPair::DD, 1, "c1"}, {pi / 2, CornerPair::DD, 1, "c2"}, {pi / 2, CornerPair::DD, 1, "c3"}, {pi / 2, CornerPair::DD, 1, "c4"}}};
}

// Unit hemisphere with -Laplacian + 1/4 (xi = 1/8 with R = 2), geodesic rim
// split into two semicircles carrying the conditions a and b.
inline GeometrySpec hemisphere(BcKind a, BcKind b) {
  auto pair_of = [](BcKind x, BcKind y) {
    if (x == y) return x == BcKind::dirichlet ? CornerPair::DD : CornerPair::NN;
    return CornerPair::DN;
  };
  return {"hemisphere", 4 * pi, 0.125,
          {{a, 0, 0, "phi=0"}, {b, 0, 0, "phi=pi"}},
          {{pi, pair_of(a, b), 1, "north"}, {pi, pair_of(a, b), 1, "south"}}};
}

// Unit half-disc: flat, straight diameter, arc of curvature 1 and length pi,
// two right-angled corners.
inline GeometrySpec half_disc(BcKind diameter, BcKind arc) {
  CornerPair p = diameter == arc ? (diameter == BcKind::dirichlet ? CornerPair::DD : CornerPair::NN) : CornerPair::DN;
  return {"half-disc", 0, 0,
          {{diameter, 0, 0, "diameter"}, {arc, pi, 0, "arc"}},
          {{pi / 2, p, 1, "left"}, {pi / 2, p, 1, "right"}}};
}

// Lune of angle beta on the unit sphere, all D, for -Laplacian + 1/4:
// area 2 beta, two geodesic edges, two DD corners of angle beta.
inline GeometrySpec lune_dd(double beta) {
  return {"lune-DD", 2 * 2 * beta, 0.125,
          {{BcKind::dirichlet, 0, 0, "edges"}},
          {{beta, CornerPair::DD, 1, "north"}, {beta, CornerPair::DD, 1, "south"}}};
}

inline GeometrySpec named_geometry(const std::string& name) {
  if (name == "3ball-DN") return three_ball_dn();
  if (name == "unit-square-D") return unit_square_d();
  if (name == "hemisphere-DN") return hemisphere(BcKind::dirichlet, BcKind::neumann);
  if (name == "hemisphere-DD") return hemisphere(BcKind::dirichlet, BcKind::dirichlet);
  if (name == "hemisphere-NN") return hemisphere(BcKind::neumann, BcKind::neumann);
  if (name == "half-disc-DD") return half_disc(BcKind::dirichlet, BcKind::dirichlet);
  if (name == "half-disc-ND") return half_disc(BcKind::neumann, BcKind::dirichlet);
  if (name == "half-disc-NN") return half_disc(BcKind::neumann, BcKind::neumann);
  if (name == "half-disc-DN") return half_disc(BcKind::dirichlet, BcKind::neumann);
  fail(ErrorKind::domain, "unknown geometry: " + name);
}

// Area and perimeter terms of a flat 2D heat trace:
// K(t) ~ area/(4 pi t) + (L_N - L_D)/(8 sqrt(pi t)) + ...
struct LeadingHeatTerms {
  double inverse_t = 0;
  double inverse_sqrt_t = 0;
};

inline LeadingHeatTerms leading_heat_terms(double area, double length_d, double length_n) {
  return {area / (4 * pi), (length_n - length_d) / (8 * std::sqrt(pi))};
}

// Right-angle C_{3/2} corner weights lambda(pi/2).
inline double c32_corner_structure(CornerPair pair, double beta = pi / 2) {
  require(beta == pi / 2, ErrorKind::unsupported, "c32_corner_structure: only beta = pi/2 is known");
  switch (pair) {
    case CornerPair::DD: return -3;
    case CornerPair::NN: return 9;
    case CornerPair::DN: return -9;
    case CornerPair::NR:
    case CornerPair::DR:
    case CornerPair::RR: break;
  }
  fail(ErrorKind::unsupported, "c32_corner_structure: pair not available");
}

// The N-diameter/D-arc ordering (ND) differs from DN at the C_{3/2} level.
inline double c32_corner_structure_nd() { return 3; }

// b_k = h^k / (2 Gamma(k/2 + 1)) for the Robin interval of length pi.
inline double robin_interval_bk(double h, int k) {
  require(k >= 1 && k <= 20, ErrorKind::domain, "robin_interval_bk: k must be in [1, 20]");
  require(std::isfinite(h), ErrorKind::domain, "robin_interval_bk: h must be finite");
  if (h == 0) return 0;
  return std::pow(h, k) / (2 * std::tgamma(0.5 * k + 1));
}

// -------------------------------------------------------------- bridge

struct Coefficient {
  enum class State { known, undetermined, absent };
  State state = State::absent;
  double value = 0;

  static Coefficient known(double v) { return {State::known, v}; }
  static Coefficient undetermined() { return {State::undetermined, 0}; }
  bool is_known() const { return state == State::known; }
};

enum class Side { heat, cylinder };

struct Entry {
  Coefficient plain;
  Coefficient log;
};

// Index k: heat side b_k multiplies t^{k/2}, cylinder side a_k multiplies t^k
// (both relative to the leading t^{-d/2} resp. t^{-d} normalisation).
struct CoefficientTable {
  Side side = Side::cylinder;
  int dimension = 1;
  std::map<int, Entry> entries;
  std::map<int, std::string> provenance;

  std::vector<int> undetermined() const {
    std::vector<int> out;
    for (const auto& [k, e] : entries)
      if (e.plain.state == Coefficient::State::undetermined || e.log.state == Coefficient::State::undetermined) out.push_back(k);
    return out;
  }
};

inline bool odd_positive(int k) { return k > 0 && (k % 2 != 0); }

inline double plain_factor(int k) { return std::pow(2.0, k) * std::sqrt(pi) / std::tgamma(0.5 * (1 - k)); }
inline double log_factor(int k) { return std::pow(2.0, k - 1) * std::sqrt(pi) / std::tgamma(0.5 * (1 - k)); }
inline double odd_factor(int k) {
  double sign = ((k + 1) / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(2.0, k - 1) * std::tgamma(0.5 * (k + 1)) * std::sqrt(pi);
}

inline void strict_check(const CoefficientTable& t, bool strict) {
  if (!strict) return;
  auto u = t.undetermined();
  if (u.empty()) return;
  std::string list;
  for (int k : u) list += (list.empty() ? "" : ", ") + std::to_string(k);
  fail(ErrorKind::missing_input, "bridge: undetermined indices " + list);
}

// Heat coefficients (b_k, b'_k) from cylinder coefficients (a_k, a'_k).
inline CoefficientTable bridge_a_to_b(const CoefficientTable& a, bool strict = false) {
  require(a.side == Side::cylinder, ErrorKind::domain, "bridge_a_to_b expects a cylinder table");
  const int d = a.dimension;
  require(d >= 1, ErrorKind::domain, "bridge: dimension must be positive");
  int K = a.entries.empty() ? 0 : a.entries.rbegin()->first;
  CoefficientTable b{Side::heat, d};
  auto get = [&](int k) -> Entry {
    auto it = a.entries.find(k);
    return it == a.entries.end() ? Entry{} : it->second;
  };
  for (int k = -d; k <= K; ++k) {
    Entry in = get(k), out;
    if (odd_positive(k)) {
      out.plain = in.log.is_known() ? Coefficient::known(odd_factor(k) * in.log.value) : Coefficient::undetermined();
      out.log = Coefficient::known(0.0);
      b.provenance[k] = "b_k from a'_k; b'_k = 0 for odd positive k";
    } else {
      out.plain = in.plain.is_known() ? Coefficient::known(plain_factor(k) * in.plain.value) : Coefficient::undetermined();
      if (k >= -d + 2)
        out.log = in.log.is_known() ? Coefficient::known(log_factor(k) * in.log.value) : Coefficient::undetermined();
      b.provenance[k] = "b_k from a_k, b'_k from a'_k";
    }
    b.entries[k] = out;
  }
  strict_check(b, strict);
  return b;
}

// Inverse map. For odd positive k the heat coefficient b_k fixes a'_k, while
// a_k itself is not determined by heat data.
inline CoefficientTable bridge_b_to_a(const CoefficientTable& b, bool strict = false) {
  require(b.side == Side::heat, ErrorKind::domain, "bridge_b_to_a expects a heat table");
  const int d = b.dimension;
  int K = b.entries.empty() ? 0 : b.entries.rbegin()->first;
  CoefficientTable a{Side::cylinder, d};
  auto get = [&](int k) -> Entry {
    auto it = b.entries.find(k);
    return it == b.entries.end() ? Entry{} : it->second;
  };
  for (int k = -d; k <= K; ++k) {
    Entry in = get(k), out;
    if (odd_positive(k)) {
      out.plain = Coefficient::undetermined();
      out.log = in.plain.is_known() ? Coefficient::known(in.plain.value / odd_factor(k)) : Coefficient::undetermined();
      a.provenance[k] = "a'_k from b_k; a_k not fixed by heat data";
    } else {
      out.plain = in.plain.is_known() ? Coefficient::known(in.plain.value / plain_factor(k)) : Coefficient::undetermined();
      if (k >= -d + 2)
        out.log = in.log.is_known() ? Coefficient::known(in.log.value / log_factor(k)) : Coefficient::undetermined();
      a.provenance[k] = "a_k from b_k, a'_k from b'_k";
    }
    a.entries[k] = out;
  }
  strict_check(a, strict);
  return a;
}

// ----------------------------------------------------------- log parts

// a'_{2n-1} = (-1)^n h^{2n-1} / (pi (2n-1)!), the t^{2n-1} log t coefficients
// of the Robin interval cylinder kernel.
inline double log_series_coefficient(double h, int n) {
  require(n >= 1 && n <= 85, ErrorKind::domain, "log_series_coefficient: n must be in [1, 85]");
  const int p = 2 * n - 1;
  double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * std::pow(h, p) / (pi * std::tgamma(p + 1.0));
}

// Partial sum of the a' series times log t.
inline double interval_log_series(double h, double t, int terms) {
  CompensatedSum<double> s;
  for (int n = 1; n <= terms; ++n) s += log_series_coefficient(h, n) * std::pow(t, 2 * n - 1);
  return s.value() * std::log(t);
}

enum class LogTarget { interval, hemisphere };

// Summed log parts: sum_n a'_{2n-1} t^{2n-1} = -sin(h t) / pi, and the
// hemisphere kernel carries the extra factor 1 / (2 sinh(t/2)).
inline double log_closed_forms(double h, double t, LogTarget which) {
  require(std::isfinite(t) && t > 0, ErrorKind::domain, "log_closed_forms: t must be positive");
  require(std::isfinite(h), ErrorKind::domain, "log_closed_forms: h must be finite");
  if (h == 0) return 0;
  double interval_part = -std::sin(h * t) / pi * std::log(t);
  if (which == LogTarget::interval) return interval_part;
  return interval_part / (2 * std::sinh(0.5 * t));
}

}  // namespace hybridspec::coeffs
