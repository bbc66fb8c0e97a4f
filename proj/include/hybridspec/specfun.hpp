#pragma once

// Special functions: Hurwitz/Riemann zeta and s-derivatives, Barnes double
// zeta, digamma, Bessel J with zeros, Ferrers functions of real order,
// Bernoulli numbers.

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "numeric.hpp"

namespace hybridspec::specfun {

struct PrecisionConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  long max_terms = 1000000;

  void validate() const {
    require(abs_tol > 0 && rel_tol > 0, ErrorKind::domain, "tolerances must be positive");
    require(max_terms >= 10, ErrorKind::domain, "max_terms must be at least 10");
  }
};

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct Constants {
  double gamma_euler;
  std::vector<Rational> bernoulli;  // B_0 .. B_20, with B_1 = -1/2
  double log2;
};

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double ln2 = 0.69314718055994530941723212145817657;

namespace detail {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline const std::vector<cpp_rational>& bernoulli_exact() {
  static const std::vector<cpp_rational> table = [] {
    const int n_max = 40;
    std::vector<cpp_rational> b(n_max + 1);
    b[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
      cpp_rational acc = 0;
      cpp_int binom = 1;  // C(n+1, k)
      for (int k = 0; k < n; ++k) {
        acc += cpp_rational(binom) * b[k];
        binom = binom * (n + 1 - k) / (k + 1);
      }
      b[n] = -acc / (n + 1);
    }
    return b;
  }();
  return table;
}

// B_{2k}/(2k)! for k = 1..20, used by the Euler-Maclaurin tails.
inline const std::vector<long double>& em_coefficients() {
  static const std::vector<long double> c = [] {
    const auto& b = bernoulli_exact();
    std::vector<long double> out(21, 0.0L);
    cpp_int fact = 1;
    for (int n = 1; n <= 40; ++n) {
      fact *= n;
      if (n % 2 == 0) {
        cpp_rational r = b[n] / cpp_rational(fact);
        out[n / 2] = static_cast<long double>(r);
      }
    }
    return out;
  }();
  return c;
}

struct ZetaPair {
  long double value;
  long double deriv;
};

// Euler-Maclaurin evaluation of zeta(s, a) and d/ds zeta(s, a).
inline ZetaPair hurwitz_em(double s_in, double a_in) {
  const long double s = s_in, a = a_in;
  const auto& c = em_coefficients();
  long shift = static_cast<long>(std::ceil(std::abs(s_in) + 10.0 - a_in));
  if (shift < 0) shift = 0;
  const long double x = a + shift;
  const long double lx = std::log(x);

  CompensatedSum<long double> v, d;
  for (long n = 0; n < shift; ++n) {
    long double base = a + n;
    long double p = std::pow(base, -s);
    v += p;
    d += -std::log(base) * p;
  }
  long double x1s = std::pow(x, 1 - s);
  v += x1s / (s - 1);
  d += -lx * x1s / (s - 1) - x1s / ((s - 1) * (s - 1));
  long double xs = std::pow(x, -s);
  v += xs / 2;
  d += -lx * xs / 2;

  // P_k(s) = s (s+1) ... (s+2k-2) and its s-derivative, built incrementally.
  long double P = s, dP = 1;
  long double xp = xs / x;  // x^{-s-1}
  long double prev = std::numeric_limits<long double>::infinity();
  long double last = 0;
  for (int k = 1; k <= 20; ++k) {
    if (k > 1) {
      for (int j = 2 * k - 3; j <= 2 * k - 2; ++j) {
        dP = dP * (s + j) + P;
        P *= (s + j);
      }
      xp /= x * x;
    }
    long double term = c[k] * P * xp;
    long double dterm = c[k] * (dP - lx * P) * xp;
    v += term;
    d += dterm;
    // For negative integer s the value tail terminates but the derivative
    // tail does not, so convergence is judged on both.
    last = std::max(std::abs(term), std::abs(dterm));
    if (k > 3 && last > prev && last > 1e-30L) fail(ErrorKind::divergence, "Euler-Maclaurin correction terms do not decrease");
    prev = last;
  }
  long double val = v.value();
  long double scale = std::max({std::abs(val), std::abs(d.value()), 1e-300L});
  if (last > 1e-15L * scale && last > 1e-25L) fail(ErrorKind::divergence, "Euler-Maclaurin tail not converged");
  return {val, d.value()};
}

inline void check_zeta_args(double s, double a, const PrecisionConfig& cfg) {
  cfg.validate();
  require(std::isfinite(s), ErrorKind::domain, "zeta: s must be finite");
  require(std::isfinite(a) && a > 0, ErrorKind::domain, "zeta: a must be positive");
  require(std::abs(s - 1) >= cfg.abs_tol, ErrorKind::pole, "zeta: pole at s = 1");
}

}  // namespace detail

inline Constants basic_constants() {
  Constants out{euler_gamma, {}, ln2};
  const auto& b = detail::bernoulli_exact();
  for (int n = 0; n <= 20; ++n) {
    auto num = boost::multiprecision::numerator(b[n]);
    auto den = boost::multiprecision::denominator(b[n]);
    out.bernoulli.push_back({static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)});
  }
  return out;
}

inline double bernoulli(int n) {
  require(n >= 0 && n <= 40, ErrorKind::domain, "bernoulli: index must be in [0, 40]");
  return static_cast<double>(detail::bernoulli_exact()[n]);
}

// Hurwitz zeta(s, a), a > 0, s != 1.
inline double hurwitz_zeta(double s, double a, const PrecisionConfig& cfg = {}) {
  detail::check_zeta_args(s, a, cfg);
  return static_cast<double>(detail::hurwitz_em(s, a).value);
}

// d/ds zeta(s, a).
inline double hurwitz_zeta_deriv(double s, double a, const PrecisionConfig& cfg = {}) {
  detail::check_zeta_args(s, a, cfg);
  return static_cast<double>(detail::hurwitz_em(s, a).deriv);
}

inline double riemann_zeta(double s, double a = 1.0, const PrecisionConfig& cfg = {}) {
  return hurwitz_zeta(s, a, cfg);
}

inline double riemann_zeta_deriv(double s, const PrecisionConfig& cfg = {}) {
  if (s == 0.0) return -0.5 * std::log(2 * pi);
  if (s == -1.0) {
    static const double cached = hurwitz_zeta_deriv(-1.0, 1.0);
    return cached;
  }
  return hurwitz_zeta_deriv(s, 1.0, cfg);
}

// log of Glaisher's constant, from zeta'(-1) = 1/12 - log A.
inline double log_glaisher() { return 1.0 / 12.0 - riemann_zeta_deriv(-1.0); }

inline double digamma(double x_in) {
  require(std::isfinite(x_in) && x_in > 0, ErrorKind::domain, "digamma: argument must be positive");
  long double x = x_in, acc = 0;
  while (x < 12) {
    acc -= 1 / x;
    x += 1;
  }
  long double x2 = 1 / (x * x), pw = x2, series = 0;
  for (int k = 1; k <= 10; ++k) {
    series += static_cast<long double>(bernoulli(2 * k)) / (2 * k) * pw;
    pw *= x2;
  }
  return static_cast<double>(acc + std::log(x) - 1 / (2 * x) - series);
}

// zeta_2(s, a | 1, 1) = zeta(s-1, a) + (1-a) zeta(s, a).
inline double barnes_zeta2(double s, double a, const PrecisionConfig& cfg = {}) {
  require(std::abs(s - 1) >= cfg.abs_tol && std::abs(s - 2) >= cfg.abs_tol, ErrorKind::pole,
          "barnes_zeta2: poles at s = 1 and s = 2");
  double v = hurwitz_zeta(s - 1, a, cfg);
  if (a != 1.0) v += (1 - a) * hurwitz_zeta(s, a, cfg);
  return v;
}

// Residue of zeta_2(s, a | 1, 1) at s = 2 from a symmetric limit.
inline double barnes_zeta2_residue(double a) {
  const double eps = 1e-5;
  return 0.5 * (eps * barnes_zeta2(2 + eps, a) - eps * barnes_zeta2(2 - eps, a));
}

// ---------------------------------------------------------------- Bessel J

namespace detail {

inline void check_bessel_args(double nu, double x) {
  require(std::isfinite(nu) && nu >= 0 && nu <= 201, ErrorKind::domain, "bessel_j: order must be in [0, 200]");
  require(std::isfinite(x) && x >= 0 && x <= 1e4, ErrorKind::domain, "bessel_j: x must be in [0, 1e4]");
}

inline double bessel_series(double nu, double x) {
  long double q = -0.25L * x * x;
  long double term = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
  CompensatedSum<long double> sum;
  sum += term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (nu + k));
    sum += term;
    if (std::abs(term) < 1e-19L * std::abs(sum.value())) break;
  }
  return static_cast<double>(sum.value());
}

// Hankel asymptotic expansion; returns false when the series cannot reach
// double precision before it starts to diverge.
inline bool bessel_hankel(double nu, double x, double& out) {
  const long double mu = 4.0L * nu * nu;
  long double term = 1, P = 1, Q = 0, prev = 1;
  bool converged = false;
  for (int k = 1; k < 200; ++k) {
    long double f = (mu - (2.0L * k - 1) * (2.0L * k - 1)) / (k * 8.0L * x);
    term *= f;
    long double at = std::abs(term);
    if (at > prev && k > 2) break;
    prev = at;
    int r = k % 4;
    if (r == 1) Q += term;
    else if (r == 2) P -= term;
    else if (r == 3) Q -= term;
    else P += term;
    if (at < 1e-18L) {
      converged = true;
      break;
    }
  }
  if (!converged) return false;
  long double chi = static_cast<long double>(x) - (0.5L * nu + 0.25L) * std::numbers::pi_v<long double>;
  out = static_cast<double>(std::sqrt(2.0L / (std::numbers::pi_v<long double> * x)) * (P * std::cos(chi) - Q * std::sin(chi)));
  return true;
}

// Miller backward recurrence normalised by
//   (x/2)^mu = sum_j (mu + 2j) Gamma(mu + j) / j! J_{mu+2j}(x),   0 < mu < 1,
//   1 = J_0 + 2 sum_j J_{2j},                                     mu = 0.
// Returns {J_nu, J_{nu+1}}.
inline std::pair<double, double> bessel_miller(double nu, double x) {
  const int n = static_cast<int>(std::floor(nu));
  const double mu = nu - n;
  const double top = std::max<double>(n + 1, x);
  int N = static_cast<int>(top + 30 + 6 * std::sqrt(top));
  if (N % 2) ++N;
  long double f_next = 0, f = 1e-30L;
  long double keep_n = 0, keep_n1 = 0;
  CompensatedSum<long double> norm;
  auto weight = [&](int j) -> long double {
    if (mu == 0) return j == 0 ? 1.0L : 2.0L;
    if (j == 0) return std::exp(std::lgamma(mu + 1.0L));
    return (mu + 2.0L * j) * std::exp(std::lgamma(mu + j) - std::lgamma(j + 1.0L));
  };
  for (int k = N; k >= 0; --k) {
    // f holds J_{mu+k} (unnormalised), f_next holds J_{mu+k+1}.
    if (k == n) keep_n = f;
    if (k == n + 1) keep_n1 = f;
    if (k % 2 == 0) norm += weight(k / 2) * f;
    if (k == 0) break;
    long double f_prev = (2.0L * (mu + k) / x) * f - f_next;
    f_next = f;
    f = f_prev;
    if (std::abs(f) > 1e250L) {
      const long double s = 1e-250L;
      f *= s;
      f_next *= s;
      keep_n *= s;
      keep_n1 *= s;
      CompensatedSum<long double> rescaled;
      rescaled += norm.value() * s;
      norm = rescaled;
    }
  }
  long double target = (mu == 0) ? 1.0L : std::pow(0.5L * x, static_cast<long double>(mu));
  long double c = target / norm.value();
  return {static_cast<double>(keep_n * c), static_cast<double>(keep_n1 * c)};
}

inline double bessel_j_unchecked(double nu, double x) {
  if (x == 0) return nu == 0 ? 1.0 : 0.0;
  if (x * x <= 2 * (nu + 1)) return bessel_series(nu, x);
  double v;
  if (x >= 30 && x >= nu * nu && bessel_hankel(nu, x, v)) return v;
  return bessel_miller(nu, x).first;
}

inline std::pair<double, double> bessel_j_pair_unchecked(double nu, double x) {
  if (x == 0) return {nu == 0 ? 1.0 : 0.0, 0.0};
  if (x * x <= 2 * (nu + 1)) return {bessel_series(nu, x), bessel_series(nu + 1, x)};
  double a, b;
  if (x >= 30 && x >= (nu + 1) * (nu + 1) && bessel_hankel(nu, x, a) && bessel_hankel(nu + 1, x, b)) return {a, b};
  return bessel_miller(nu, x);
}

}  // namespace detail

inline double bessel_j(double order, double x) {
  detail::check_bessel_args(order, x);
  return detail::bessel_j_unchecked(order, x);
}

// J'_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x).
inline double bessel_j_derivative(double order, double x) {
  detail::check_bessel_args(order, x);
  if (x == 0) {
    if (order == 1) return 0.5;
    require(order == 0 || order > 1, ErrorKind::domain, "bessel_j_derivative: unbounded at x = 0 for 0 < order < 1");
    return 0.0;
  }
  auto [j, j1] = detail::bessel_j_pair_unchecked(order, x);
  return order / x * j - j1;
}

enum class ZeroKind { function, derivative };

namespace detail {

inline int sign_of(double v) { return v > 0 ? 1 : -1; }

inline double refine_bessel_zero(int m, double lo, double hi) {
  auto fdf = [m](double x) {
    auto [j, j1] = bessel_j_pair_unchecked(m, x);
    return std::pair<double, double>{j, m / x * j - j1};
  };
  int slo = sign_of(bessel_j_unchecked(m, lo));
  int shi = sign_of(bessel_j_unchecked(m, hi));
  if (slo == shi) fail(ErrorKind::bracket_failure, "Bessel zero bracket does not change sign");
  // McMahon-style midpoint start; the bracket safeguards the Newton steps.
  double z = solve_bracketed(fdf, {lo, hi, slo}, 0.5 * (lo + hi));
  if (std::abs(bessel_j_unchecked(m, z)) > 1e-9) fail(ErrorKind::accuracy_loss, "Bessel zero residual above 1e-9");
  return z;
}

inline double refine_bessel_derivative_zero(int m, double lo, double hi) {
  auto deriv = [m](double x) {
    auto [j, j1] = bessel_j_pair_unchecked(m, x);
    return std::pair<double, double>{j, m / x * j - j1};
  };
  auto fdf = [&](double x) {
    auto [j, dj] = deriv(x);
    double d2 = -dj / x - (1 - double(m) * m / (x * x)) * j;
    return std::pair<double, double>{dj, d2};
  };
  int slo = sign_of(deriv(lo).second);
  int shi = sign_of(deriv(hi).second);
  if (slo == shi) fail(ErrorKind::bracket_failure, "Bessel derivative zero bracket does not change sign");
  double z = solve_bracketed(fdf, {lo, hi, slo}, 0.5 * (lo + hi));
  if (std::abs(deriv(z).second) > 1e-9) fail(ErrorKind::accuracy_loss, "Bessel derivative zero residual above 1e-9");
  return z;
}

}  // namespace detail

// Zeros of J_0, J_1, J_2, ... generated order by order. Level 0 holds the
// first n0 zeros of J_0, bracketed in ((k - 1/2) pi, k pi); level m + 1 is
// obtained from the interlacing j_{m,k} < j_{m+1,k} < j_{m,k+1} and so holds
// one zero fewer than level m.
class BesselZeroLadder {
 public:
  explicit BesselZeroLadder(int n0) {
    require(n0 >= 1, ErrorKind::domain, "zero ladder needs at least one zero");
    require((n0 + 0.5) * pi <= 1e4, ErrorKind::domain, "zero ladder exceeds the validated range x <= 1e4");
    zeros_.resize(n0);
    for (int k = 1; k <= n0; ++k) zeros_[k - 1] = detail::refine_bessel_zero(0, (k - 0.5) * pi, k * pi);
  }

  int order() const { return order_; }
  const std::vector<double>& zeros() const { return zeros_; }

  bool advance() {
    if (zeros_.size() < 2 || order_ >= 200) return false;
    std::vector<double> next(zeros_.size() - 1);
    const int m = order_ + 1;
    for (std::size_t k = 0; k + 1 < zeros_.size(); ++k) next[k] = detail::refine_bessel_zero(m, zeros_[k], zeros_[k + 1]);
    zeros_ = std::move(next);
    order_ = m;
    return true;
  }

  // Zeros of J'_m (m = order() >= 1) below x_max; each lies in
  // (j_{m,k-1}, j_{m,k}) with j_{m,0} := m.
  std::vector<double> derivative_zeros(double x_max) const {
    require(order_ >= 1, ErrorKind::domain, "derivative zeros of J_0 are the zeros of J_1");
    std::vector<double> out;
    double lo = order_;
    for (double hi : zeros_) {
      if (lo > x_max) break;
      double z = detail::refine_bessel_derivative_zero(order_, lo, hi);
      if (z > x_max) break;
      out.push_back(z);
      lo = hi;
    }
    return out;
  }

 private:
  int order_ = 0;
  std::vector<double> zeros_;
};

// First `count` positive zeros of J_m (function) or J'_m (derivative). The
// trivial zero of J'_0 at x = 0 is excluded, so its zeros are those of J_1.
inline std::vector<double> bessel_j_zeros(int order, ZeroKind kind, int count) {
  require(order >= 0 && order <= 200, ErrorKind::domain, "bessel_j_zeros: order must be in [0, 200]");
  require(count >= 1 && count <= 10000, ErrorKind::domain, "bessel_j_zeros: count must be in [1, 1e4]");
  int level = order;
  if (kind == ZeroKind::derivative && order == 0) level = 1;
  BesselZeroLadder ladder(count + level);
  while (ladder.order() < level) ladder.advance();
  const auto& z = ladder.zeros();
  if (kind == ZeroKind::function || order == 0) return {z.begin(), z.begin() + count};
  std::vector<double> out;
  double lo = order;
  for (int k = 0; k < count; ++k) {
    out.push_back(detail::refine_bessel_derivative_zero(order, lo, z[k]));
    lo = z[k];
  }
  return out;
}

// ------------------------------------------------------------- Legendre

// P^{-k}_{n+k}(x) / (1 - x^2)^{k/2}: a polynomial of degree n in (1-x)/2,
// equal to 1/(2^k Gamma(k+1)) at x = 1.
inline double legendre_p_reduced(double k, int n, double x) {
  require(k >= 0 && n >= 0, ErrorKind::domain, "legendre_p_reduced: need k >= 0, n >= 0");
  require(std::abs(x) <= 1, ErrorKind::domain, "legendre_p_reduced: |x| must be <= 1");
  const long double z = 0.5L * (1 - static_cast<long double>(x));
  long double term = 1;
  CompensatedSum<long double> sum;
  sum += term;
  for (int j = 0; j < n; ++j) {
    term *= (static_cast<long double>(j) - n) * (n + 2 * k + 1 + j) / ((1 + k + j) * (j + 1.0L)) * z;
    sum += term;
  }
  long double pref = std::exp(-k * std::log(2.0L) - std::lgamma(k + 1.0L));
  return static_cast<double>(pref * sum.value());
}

// Ferrers function P^mu_nu(x), mu <= 0, |x| < 1.
inline double legendre_p(double mu, double nu, double x, const PrecisionConfig& cfg = {}) {
  cfg.validate();
  require(std::isfinite(mu) && mu <= 0, ErrorKind::domain, "legendre_p: order must be <= 0");
  require(std::isfinite(nu), ErrorKind::domain, "legendre_p: degree must be finite");
  require(std::abs(x) < 1, ErrorKind::domain, "legendre_p: |x| must be < 1");
  const double k = -mu;
  const double n_real = nu - k;
  const double n_round = std::round(n_real);
  if (n_round >= 0 && std::abs(n_real - n_round) < 1e-12) {
    double red = legendre_p_reduced(k, static_cast<int>(n_round), x);
    return red * std::pow(1 - x * x, 0.5 * k);
  }
  // General degree: ((1+x)/(1-x))^{mu/2} F(-nu, nu+1; 1-mu; (1-x)/2) / Gamma(1-mu).
  const long double z = 0.5L * (1 - static_cast<long double>(x));
  long double term = 1;
  CompensatedSum<long double> sum;
  sum += term;
  int small_run = 0;
  for (long j = 0; j < cfg.max_terms; ++j) {
    term *= (j - static_cast<long double>(nu)) * (nu + 1 + j) / ((1 - mu + j) * (j + 1.0L)) * z;
    sum += term;
    if (std::abs(term) < cfg.abs_tol * std::abs(sum.value())) {
      if (++small_run >= 10) {
        long double pref = std::pow((1 + static_cast<long double>(x)) / (1 - static_cast<long double>(x)), 0.5L * mu) /
                           std::tgamma(1 - static_cast<long double>(mu));
        return static_cast<double>(pref * sum.value());
      }
    } else {
      small_run = 0;
    }
  }
  fail(ErrorKind::non_convergence, "legendre_p: hypergeometric series did not converge within max_terms");
}

}  // namespace hybridspec::specfun
