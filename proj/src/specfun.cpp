#include "expot/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace expot::specfun {

double laguerre(int n, double alpha, double x) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + alpha + 1.0 - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_derivative(int n, double alpha, double x) {
  return n == 0 ? 0.0 : -laguerre(n - 1, alpha + 1.0, x);
}

double laguerre_derivative(int n, double alpha, double x, int k) {
  if (k > n) return 0.0;
  const double v = laguerre(n - k, alpha + k, x);
  return (k % 2 == 0) ? v : -v;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma: argument must be positive, got " + std::to_string(x));
  if (std::isinf(x)) return x;
  static constexpr std::array<double, 14> kCoef = {
      57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;  // g + 1/2 with g = 671/128
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : kCoef) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

double pochhammer(double a, int k) {
  double p = 1.0;
  for (int j = 0; j < k; ++j) p *= a + j;
  return p;
}

double hyp1f1_poly(int n, double sigma, double xi) {
  if (n < 0) throw DomainError("hyp1f1_poly: degree must be non-negative");
  double term = 1.0;
  double sum = 1.0;
  for (int m = 0; m < n; ++m) {
    const double denom = (sigma + m) * (m + 1.0);
    if (sigma + m == 0.0)
      throw DomainError("hyp1f1_poly: pole, sigma + " + std::to_string(m) + " = 0");
    term *= -(n - m) * xi / denom;
    sum += term;
  }
  return sum;
}

double hyp3f2_unit(int m, double a, double b, double d, double e) {
  if (m < 0) throw DomainError("hyp3f2_unit: degree must be non-negative");
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < m; ++k) {
    if (d + k == 0.0 || e + k == 0.0)
      throw DomainError("hyp3f2_unit: denominator Pochhammer vanishes at k = " + std::to_string(k));
    term *= (-m + k) * (a + k) * (b + k) / ((d + k) * (e + k) * (k + 1.0));
    sum += term;
  }
  return sum;
}

double laguerre_weighted_integral(double alpha, double delta, int m, double lambda, int n,
                                  double betap) {
  if (!(alpha > 0.0)) throw DomainError("laguerre_weighted_integral: alpha must be positive");
  if (!(delta > 0.0)) throw DomainError("laguerre_weighted_integral: delta must be positive");
  if (m < 0 || n < 0) throw DomainError("laguerre_weighted_integral: negative degree");
  const double series = hyp3f2_unit(m, alpha, alpha - betap, -n + alpha - betap, lambda + 1.0);
  const double ratio = pochhammer(1.0 - alpha + betap, n) * pochhammer(1.0 + lambda, m);
  const double log_pref = log_gamma(alpha) - alpha * std::log(delta) - log_gamma(m + 1.0) -
                          log_gamma(n + 1.0);
  return std::exp(log_pref) * ratio * series;
}

QuadratureResult integrate_halfline(const std::function<double(double)>& f, double scale,
                                    double split) {
  if (!(scale > 0.0)) throw DomainError("integrate_halfline: scale must be positive");
  if (!(split > 0.0)) split = 1.0 / scale;

  // Boost evaluates close to the endpoints; non-finite samples there are
  // underflow/overflow artefacts of a decaying integrand.
  auto guarded = [&f](double t) {
    const double v = f(t);
    return std::isfinite(v) ? v : 0.0;
  };

  constexpr double kInnerTol = 1e-13;
  thread_local boost::math::quadrature::tanh_sinh<double> ts;
  double err_head = 0.0;
  double l1_head = 0.0;
  const double head = ts.integrate(guarded, 0.0, split, kInnerTol, &err_head, &l1_head);

  double err_tail = 0.0;
  double l1_tail = 0.0;
  const double tail = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double s) { return guarded(split + s); }, 0.0, std::numeric_limits<double>::infinity(),
      15, kInnerTol, &err_tail, &l1_tail);

  QuadratureResult r{head + tail, err_head + err_tail, l1_head + l1_tail};
  const double scale_mag = std::max(r.l1, std::numeric_limits<double>::min());
  if (!std::isfinite(r.value) || r.error > kQuadratureRelTarget * scale_mag)
    throw NumericalError("integrate_halfline: relative error target not met", r.value, r.error);
  return r;
}

}  // namespace expot::specfun
