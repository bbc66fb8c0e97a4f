#pragma once

// One-dimensional eigenproblems -u'' = k^2 u on [0, L] with Dirichlet,
// Neumann or Robin ends.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"

namespace hybridspec::interval {

enum class BcKind { dirichlet, neumann, robin };

struct BoundaryCondition {
  BcKind kind = BcKind::dirichlet;
  double h = 0.0;  // used only for Robin

  static BoundaryCondition dirichlet() { return {BcKind::dirichlet, 0.0}; }
  static BoundaryCondition neumann() { return {BcKind::neumann, 0.0}; }
  static BoundaryCondition robin(double h) { return {BcKind::robin, h}; }

  void validate() const {
    require(std::isfinite(h), ErrorKind::domain, "Robin parameter must be finite");
    require(kind == BcKind::robin || h == 0.0, ErrorKind::domain, "Dirichlet/Neumann conditions carry no parameter");
  }
};

struct IntervalProblem {
  double length = pi;
  BoundaryCondition left = BoundaryCondition::dirichlet();
  BoundaryCondition right = BoundaryCondition::dirichlet();

  void validate() const {
    require(std::isfinite(length) && length > 0, ErrorKind::domain, "interval length must be positive");
    left.validate();
    right.validate();
  }
};

struct WaveNumbers {
  std::vector<double> values;
  bool excluded_imaginary = false;
  int zero_mode_count = 0;
  // Branch label m of values[0]; values[i] belongs to branch first_branch + i.
  int first_branch = 0;
};

// Unordered condition pair on the two ends.
enum class Pair { DD, NN, DN, DR, NR };

inline const char* to_string(Pair p) {
  switch (p) {
    case Pair::DD: return "DD";
    case Pair::NN: return "NN";
    case Pair::DN: return "DN";
    case Pair::DR: return "DR";
    case Pair::NR: return "NR";
  }
  return "?";
}

struct Classified {
  Pair pair;
  double h;
};

inline Classified classify(const IntervalProblem& p) {
  p.validate();
  auto a = p.left.kind, b = p.right.kind;
  if (a == BcKind::robin && b == BcKind::robin) fail(ErrorKind::unsupported, "two Robin ends are not supported");
  if (a == BcKind::robin || b == BcKind::robin) {
    const auto& robin = (a == BcKind::robin) ? p.left : p.right;
    auto other = (a == BcKind::robin) ? b : a;
    if (p.length != pi) fail(ErrorKind::unsupported, "Robin conditions are supported only on the interval of length pi");
    return {other == BcKind::dirichlet ? Pair::DR : Pair::NR, robin.h};
  }
  if (a == b) return {a == BcKind::dirichlet ? Pair::DD : Pair::NN, 0.0};
  return {Pair::DN, 0.0};
}

namespace detail {

// Robin root on branch m written as k = mu + delta with mu = m + 1/2 (D,R) or
// mu = m (N,R). Both k cot(k pi) = h and k tan(k pi) = -h reduce on the
// branch to  delta + arctan(h / (mu + delta)) / pi = 0  with |delta| < 1/2,
// which keeps delta accurate to full relative precision for large m.
inline double robin_offset(double mu, double h) {
  auto g = [&](double d) {
    double k = mu + d;
    double f = d + std::atan(h / k) / pi;
    double df = 1 - h / (pi * (k * k + h * h));
    return std::pair<double, double>{f, df};
  };
  double lo, hi;
  int slo;
  if (h > 0) {
    lo = -0.5;
    hi = 0.0;
  } else {
    lo = 0.0;
    hi = 0.5;
  }
  if (mu + lo <= 0) lo = -mu;
  // At the lower end g is negative (h < 0: arctan -> -pi/2 as k -> 0+; h > 0:
  // delta = -1/2 with arctan < pi/2). Upper end positive.
  slo = -1;
  double guess = -h / (pi * std::max(mu, 0.5));
  guess = std::clamp(guess, lo + 1e-3 * (hi - lo), hi - 1e-3 * (hi - lo));
  return solve_bracketed(g, {lo, hi, slo}, guess, 1e-17);
}

inline long double robin_residual(Pair pair, double k, double h) {
  const long double kl = k, a = std::numbers::pi_v<long double> * kl;
  if (pair == Pair::DR) return kl * std::cos(a) / std::sin(a) - h;
  return kl * std::sin(a) / std::cos(a) + h;
}

}  // namespace detail

// First `count` wavenumbers of the problem.
inline WaveNumbers wavenumbers(const IntervalProblem& problem, int count) {
  require(count >= 1 && count <= 100000, ErrorKind::domain, "wavenumbers: count must be in [1, 1e5]");
  auto [pair, h] = classify(problem);
  WaveNumbers out;
  out.values.reserve(count);
  // Closed forms are computed as q * (pi / (2L)) with q an integer count of
  // half-units so that spectra at L and 2L agree bit for bit.
  const double unit = pi / (2 * problem.length);
  switch (pair) {
    case Pair::DD:
      out.first_branch = 1;
      for (int m = 1; m <= count; ++m) out.values.push_back((2.0 * m) * unit);
      return out;
    case Pair::NN:
      out.first_branch = 1;
      out.zero_mode_count = 1;
      for (int m = 1; m <= count; ++m) out.values.push_back((2.0 * m) * unit);
      return out;
    case Pair::DN:
      for (int m = 0; m < count; ++m) out.values.push_back((2.0 * m + 1) * unit);
      return out;
    case Pair::DR:
    case Pair::NR:
      break;
  }
  if (h == 0.0) {
    IntervalProblem closed = problem;
    closed.left = closed.left.kind == BcKind::robin ? BoundaryCondition::neumann() : closed.left;
    closed.right = closed.right.kind == BcKind::robin ? BoundaryCondition::neumann() : closed.right;
    return wavenumbers(closed, count);
  }
  const double shift = pair == Pair::DR ? 0.5 : 0.0;
  int m = 0;
  if (pair == Pair::DR && h > 0) {
    // k cot(k pi) <= 1/pi on (0, 1/2): no real root on branch 0 once h >= 1/pi.
    if (h >= 1 / pi) {
      m = 1;
      out.excluded_imaginary = h > 1 / pi;
    }
  } else if (pair == Pair::NR && h > 0) {
    m = 1;
    out.excluded_imaginary = true;
  }
  out.first_branch = m;
  for (; static_cast<int>(out.values.size()) < count; ++m) {
    double mu = m + shift;
    double k = mu + detail::robin_offset(mu, h);
    if (!(k > 0)) fail(ErrorKind::bracket_failure, "Robin root left its branch");
    out.values.push_back(k);
  }
  return out;
}

inline long double robin_residual(const IntervalProblem& problem, double k) {
  auto [pair, h] = classify(problem);
  require(pair == Pair::DR || pair == Pair::NR, ErrorKind::domain, "robin_residual needs a Robin problem");
  return detail::robin_residual(pair, k, h);
}

// First-order small-h wavenumbers.
inline std::vector<double> perturbative_wavenumbers(const IntervalProblem& problem, int count) {
  require(count >= 1 && count <= 100000, ErrorKind::domain, "perturbative_wavenumbers: count must be in [1, 1e5]");
  auto [pair, h] = classify(problem);
  require(pair == Pair::DR || pair == Pair::NR, ErrorKind::domain, "perturbative wavenumbers need one Robin end");
  require(std::abs(h) < 0.5, ErrorKind::out_of_regime, "perturbative wavenumbers need |h| < 0.5");
  std::vector<double> out;
  if (pair == Pair::DR) {
    for (int m = 0; m < count; ++m) out.push_back(m + 0.5 - 2 * h / ((2 * m + 1) * pi));
    return out;
  }
  if (h < 0) out.push_back(std::sqrt(-h / pi));
  if (h == 0) {
    for (int m = 1; m <= count; ++m) out.push_back(m);
    return out;
  }
  for (int m = 1; static_cast<int>(out.size()) < count; ++m) out.push_back(m - h / (m * pi));
  return out;
}

// --------------------------------------------------------- union identities

struct Multiset {
  std::vector<double> values;  // sorted, repeated for multiplicity
  int zero_modes = 0;
};

struct IdentityResult {
  std::string name;
  double mismatch = 0;
  bool zero_modes_match = true;
  bool passed = false;
};

struct UnionReport {
  double length = 0;
  int count = 0;
  std::vector<IdentityResult> identities;
  double max_mismatch = 0;
  bool passed = false;
};

namespace detail {

inline Multiset closed_spectrum(Pair pair, double L, int count) {
  IntervalProblem p{L, BoundaryCondition::dirichlet(), BoundaryCondition::dirichlet()};
  if (pair == Pair::NN) p.left = p.right = BoundaryCondition::neumann();
  if (pair == Pair::DN) p.right = BoundaryCondition::neumann();
  auto w = wavenumbers(p, count);
  return {w.values, w.zero_mode_count};
}

// Periodic spectrum on a circle of circumference C: k = 2 pi n / C with
// multiplicity 2 for n >= 1 and one zero mode.
inline Multiset periodic_spectrum(double C, int count) {
  Multiset out;
  out.zero_modes = 1;
  const double unit = pi / C;  // k = (2n) * unit
  for (int n = 1; static_cast<int>(out.values.size()) < count; ++n) {
    out.values.push_back((2.0 * n) * unit);
    if (static_cast<int>(out.values.size()) < count) out.values.push_back((2.0 * n) * unit);
  }
  return out;
}

inline Multiset merge_first(const Multiset& a, const Multiset& b, int count) {
  Multiset out;
  out.values = a.values;
  out.values.insert(out.values.end(), b.values.begin(), b.values.end());
  std::sort(out.values.begin(), out.values.end());
  out.values.resize(std::min<std::size_t>(count, out.values.size()));
  out.zero_modes = a.zero_modes + b.zero_modes;
  return out;
}

inline IdentityResult compare(const std::string& name, const Multiset& lhs, const Multiset& rhs, int count) {
  IdentityResult r{name};
  std::size_t n = std::min<std::size_t>({static_cast<std::size_t>(count), lhs.values.size(), rhs.values.size()});
  for (std::size_t i = 0; i < n; ++i) r.mismatch = std::max(r.mismatch, std::abs(lhs.values[i] - rhs.values[i]));
  if (n < static_cast<std::size_t>(count)) r.mismatch = std::numeric_limits<double>::infinity();
  r.zero_modes_match = lhs.zero_modes == rhs.zero_modes;
  r.passed = r.zero_modes_match && r.mismatch < 1e-14;
  return r;
}

}  // namespace detail

// Multiset identities between spectra on [0, L], [0, 2L] and the circle of
// circumference 2L, compared on their first `count` wavenumbers.
inline UnionReport union_identity_check(double L, int count) {
  require(std::isfinite(L) && L > 0, ErrorKind::domain, "union_identity_check: length must be positive");
  require(count >= 1 && count <= 10000, ErrorKind::domain, "union_identity_check: count must be in [1, 1e4]");
  using detail::closed_spectrum;
  UnionReport rep{L, count};
  auto dd = closed_spectrum(Pair::DD, L, count);
  auto nn = closed_spectrum(Pair::NN, L, count);
  auto dn = closed_spectrum(Pair::DN, L, count);
  rep.identities.push_back(detail::compare("DN(L) + DD(L) = DD(2L)", detail::merge_first(dn, dd, count),
                                           closed_spectrum(Pair::DD, 2 * L, count), count));
  rep.identities.push_back(detail::compare("DN(L) + NN(L) = NN(2L)", detail::merge_first(dn, nn, count),
                                           closed_spectrum(Pair::NN, 2 * L, count), count));
  rep.identities.push_back(detail::compare("DD(L) + NN(L) = P(2L)", detail::merge_first(dd, nn, count),
                                           detail::periodic_spectrum(2 * L, count), count));
  rep.passed = true;
  for (const auto& r : rep.identities) {
    rep.max_mismatch = std::max(rep.max_mismatch, r.mismatch);
    rep.passed = rep.passed && r.passed;
  }
  return rep;
}

}  // namespace hybridspec::interval
