#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "error.hpp"

namespace hybridspec {

inline constexpr double pi = std::numbers::pi;

// Neumaier's variant of compensated summation.
template <class T = double>
class CompensatedSum {
 public:
  void add(T x) {
    T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_ = 0;
  T comp_ = 0;
};

// Safeguarded Newton iteration on a bracket [lo, hi] with f(lo) and f(hi) of
// opposite sign. fdf returns {f(x), f'(x)}. The endpoints are never evaluated
// when their signs are supplied, which allows brackets that end on a
// singularity of f.
struct RootBracket {
  double lo;
  double hi;
  int sign_lo;  // sign of f just inside lo
};

template <class FdF>
double solve_bracketed(FdF&& fdf, RootBracket b, double x0, double xtol = 0.0, int max_iter = 200) {
  double lo = b.lo, hi = b.hi;
  if (!(lo < hi)) fail(ErrorKind::bracket_failure, "empty root bracket");
  const int slo = b.sign_lo;
  double x = (x0 > lo && x0 < hi) ? x0 : 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    auto [f, df] = fdf(x);
    if (f == 0.0) return x;
    if ((f > 0) == (slo > 0))
      lo = x;
    else
      hi = x;
    double tol = xtol > 0 ? xtol : 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(x));
    double xn = (df != 0.0 && std::isfinite(df)) ? x - f / df : 0.5 * (lo + hi);
    if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    if (std::abs(xn - x) <= tol || hi - lo <= tol) return xn;
    x = xn;
  }
  fail(ErrorKind::non_convergence, "bracketed root iteration did not converge");
}

// Plain bisection used as an independent oracle and for functions without a
// derivative.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol = 1e-15) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0)) fail(ErrorKind::bracket_failure, "bisection endpoints do not bracket a root");
  for (int i = 0; i < 300 && hi - lo > xtol * std::max(1.0, std::abs(lo)); ++i) {
    double mid = 0.5 * (lo + hi);
    double fm = f(mid);
    if (fm == 0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

struct QuadratureResult {
  double value;
  double error;
};

// Adaptive Gauss-Kronrod (61 points) on a finite interval with a smooth integrand.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol = 1e-13, unsigned max_depth = 20) {
  double err = 0;
  double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, max_depth, rel_tol, &err);
  if (!std::isfinite(v)) fail(ErrorKind::quadrature, "non-finite quadrature result");
  return {v, err};
}

// Double-exponential rule for integrable endpoint singularities.
template <class F>
QuadratureResult integrate_singular(F&& f, double a, double b, double rel_tol = 1e-13) {
  boost::math::quadrature::tanh_sinh<double> rule;
  double err = 0, l1 = 0;
  double v = rule.integrate(f, a, b, rel_tol, &err, &l1);
  if (!std::isfinite(v)) fail(ErrorKind::quadrature, "non-finite quadrature result");
  return {v, err};
}

// Semi-infinite interval [a, inf) for integrands with exponential decay.
template <class F>
QuadratureResult integrate_to_infinity(F&& f, double a, double rel_tol = 1e-13) {
  boost::math::quadrature::exp_sinh<double> rule;
  double err = 0, l1 = 0;
  auto g = [&](double u) { return f(a + u); };
  double v = rule.integrate(g, rel_tol, &err, &l1);
  if (!std::isfinite(v)) fail(ErrorKind::quadrature, "non-finite quadrature result");
  return {v, err};
}

// Central difference with one Richardson step: error O(step^4).
template <class F>
double richardson_derivative(F&& f, double x, double step) {
  auto d = [&](double s) { return (f(x + s) - f(x - s)) / (2 * s); };
  return (4 * d(step / 2) - d(step)) / 3;
}

inline std::vector<double> log_grid(double t_min, double t_max, int points) {
  require(t_min > 0 && t_max > t_min, ErrorKind::domain, "log grid needs 0 < t_min < t_max");
  require(points >= 2, ErrorKind::domain, "log grid needs at least two points");
  std::vector<double> t(points);
  double a = std::log(t_min), b = std::log(t_max);
  for (int i = 0; i < points; ++i) t[i] = std::exp(a + (b - a) * i / (points - 1));
  t.front() = t_min;
  t.back() = t_max;
  return t;
}

// Worker count from HYBRIDSPEC_THREADS, falling back to the hardware count.
inline unsigned thread_count() {
  if (const char* env = std::getenv("HYBRIDSPEC_THREADS")) {
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end != env && n >= 1 && n <= 1024) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 16u);
}

// Runs body(i) for i in [0, n). Each index is handled by exactly one worker,
// so results written per index are independent of the thread count.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  unsigned workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace hybridspec
