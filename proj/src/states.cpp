#include "expot/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace expot {

using specfun::laguerre;
using specfun::laguerre_derivative;

namespace {

double laguerre_factor(const BoundState& s, double z) {
  return laguerre(s.n, 2.0 * s.epsilon, 2.0 * s.a1 * z);
}

// int_0^inf z^{2eps-1+p} e^{-2 a1 z} L_m^{2eps} L_n^{2eps} dz, done in u = 2 a1 z
// with the weight's peak factored out.
specfun::QuadratureResult weighted_overlap(int m, int n, double eps, double a1, double p) {
  const double alpha = 2.0 * eps;
  const double power = alpha - 1.0 + p;
  const double peak = std::max(power, 1.0);
  const double log_peak = power * std::log(peak) - peak;
  auto integrand = [&](double u) {
    const double lm = laguerre(m, alpha, u);
    const double ln = laguerre(n, alpha, u);
    const double prod = lm * ln;
    if (prod == 0.0) return 0.0;
    const double mag = std::exp(power * std::log(u) - u - log_peak + std::log(std::abs(prod)));
    return prod < 0.0 ? -mag : mag;
  };
  auto q = specfun::integrate_halfline(integrand, 1.0, peak);
  const double back = std::exp(log_peak - (power + 1.0) * std::log(2.0 * a1));
  return {q.value * back, q.error * back, q.l1 * back};
}

}  // namespace

BoundState build_state(const DerivedParams& params, int n, StateConvention convention,
                       Normalize normalize) {
  if (n < 0) throw DomainError("build_state: level index must be non-negative");
  BoundState s;
  s.n = n;
  s.a1 = params.a1;
  s.convention = convention.kind;
  s.epsilon = convention.kind == StateConvention::Kind::physical ? epsilon_of(params, n)
                                                                  : convention.eps;
  if (normalize == Normalize::yes) {
    if (s.formal())
      throw DivergentNormError("build_state: level " + std::to_string(n) + " has eps = " +
                               std::to_string(s.epsilon) + " <= 0; norm integral diverges");
    const auto sq = squared_norm_quadrature(s, params.beta);
    s.norm = 1.0 / std::sqrt(sq.value);
    s.normalized = true;
  }
  return s;
}

double log_envelope(const BoundState& s, double z) {
  return s.epsilon * std::log(z) - s.a1 * z;
}

double eval_state(const BoundState& s, double z) {
  if (!(z > 0.0)) throw DomainError("eval_state: z must be positive");
  const double lf = laguerre_factor(s, z);
  if (lf == 0.0) return 0.0;
  return s.norm * std::exp(log_envelope(s, z)) * lf;
}

double eval_state_x(const BoundState& s, double x, double beta) {
  const double log_z = beta * x;
  const double z = std::exp(log_z);
  const double lf = laguerre(s.n, 2.0 * s.epsilon, 2.0 * s.a1 * z);
  if (lf == 0.0) return 0.0;
  return s.norm * std::exp(s.epsilon * log_z - s.a1 * z) * lf;
}

Jet eval_jet(const BoundState& s, double z, double log_shift) {
  const double eps = s.epsilon;
  const double alpha = 2.0 * eps;
  const double w = 2.0 * s.a1 * z;
  const double k = 2.0 * s.a1;

  const double g = std::exp(log_envelope(s, z) - log_shift);
  const double h1 = eps / z - s.a1;
  const double h2 = -eps / (z * z);
  const double h3 = 2.0 * eps / (z * z * z);
  const double g1 = g * h1;
  const double g2 = g * (h1 * h1 + h2);
  const double g3 = g * (h1 * h1 * h1 + 3.0 * h1 * h2 + h3);

  const double L0 = laguerre(s.n, alpha, w);
  const double L1 = k * laguerre_derivative(s.n, alpha, w, 1);
  const double L2 = k * k * laguerre_derivative(s.n, alpha, w, 2);
  const double L3 = k * k * k * laguerre_derivative(s.n, alpha, w, 3);

  Jet j;
  j.v = s.norm * g * L0;
  j.d1 = s.norm * (g1 * L0 + g * L1);
  j.d2 = s.norm * (g2 * L0 + 2.0 * g1 * L1 + g * L2);
  j.d3 = s.norm * (g3 * L0 + 3.0 * g2 * L1 + 3.0 * g1 * L2 + g * L3);
  return j;
}

specfun::QuadratureResult squared_norm_quadrature(const BoundState& s, double beta) {
  if (s.formal()) throw DivergentNormError("squared_norm_quadrature: eps <= 0");
  if (!(beta > 0.0)) throw DomainError("squared_norm_quadrature: beta must be positive");
  auto q = weighted_overlap(s.n, s.n, s.epsilon, s.a1, 0.0);
  return {q.value / beta, q.error / beta, q.l1 / beta};
}

double norm_closed_form(const BoundState& s, double beta) {
  if (s.formal()) throw DomainError("norm_closed_form: eps must be positive");
  if (!(beta > 0.0)) throw DomainError("norm_closed_form: beta must be positive");
  return family_overlap_closed_form(s.n, s.n, s.epsilon, s.a1) / beta;
}

specfun::QuadratureResult family_overlap_quadrature(int m, int n, double eps, double a1,
                                                    double extra_power) {
  if (!(2.0 * eps + extra_power > 0.0))
    throw DomainError("family_overlap_quadrature: weight not integrable at z = 0");
  return weighted_overlap(m, n, eps, a1, extra_power);
}

double family_overlap_closed_form(int m, int n, double eps, double a1) {
  const double alpha = 2.0 * eps;
  // the closed form is written for m <= n; the integrand is symmetric
  return specfun::laguerre_weighted_integral(alpha, 2.0 * a1, std::min(m, n), alpha,
                                             std::max(m, n), alpha);
}

double trapezoid_norm_x(const BoundState& s, double beta, double x_lo, double x_hi,
                        int points) {
  if (points < 2 || !(x_hi > x_lo)) throw DomainError("trapezoid_norm_x: bad interval");
  const double h = (x_hi - x_lo) / (points - 1);
  double sum = 0.0;
  for (int i = 0; i < points; ++i) {
    const double v = eval_state_x(s, x_lo + h * i, beta);
    const double w = (i == 0 || i == points - 1) ? 0.5 : 1.0;
    sum += w * v * v;
  }
  return sum * h;
}

std::vector<double> default_z_grid(const BoundState& s, const DerivedParams& params, int points) {
  if (points < 2) throw DomainError("default_z_grid: need at least two points");
  const double eps = s.epsilon;
  const double a1 = s.a1;
  const double z_peak = std::max(std::abs(eps), 1.0) / a1;

  double z_turn = (4.0 * s.n + 4.0 * std::abs(eps) + 2.0) / (2.0 * a1);
  const double disc = params.a2sq * params.a2sq - 4.0 * a1 * a1 * eps * eps;
  if (disc >= 0.0) {
    const double root = (-params.a2sq + std::sqrt(disc)) / (2.0 * a1 * a1);
    if (root > 0.0) z_turn = root;
  }
  const double lo = z_peak * 1e-3;
  const double hi = std::max(3.0 * z_turn, 2.0 * z_peak);

  std::vector<double> grid(static_cast<std::size_t>(points));
  const double ratio = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) grid[static_cast<std::size_t>(i)] = lo * std::exp(ratio * i);
  return grid;
}

double ode_residual(const BoundState& s, const DerivedParams& params,
                    std::span<const double> z_grid) {
  if (z_grid.empty()) return 0.0;
  double shift = -std::numeric_limits<double>::infinity();
  for (double z : z_grid) {
    if (!(z > 0.0)) throw DomainError("ode_residual: grid points must be positive");
    shift = std::max(shift, log_envelope(s, z));
  }

  const double a1sq = s.a1 * s.a1;
  const double eps2 = s.epsilon * s.epsilon;
  std::vector<Jet> jets;
  jets.reserve(z_grid.size());
  double phi_max = 0.0;
  for (double z : z_grid) {
    jets.push_back(eval_jet(s, z, shift));
    phi_max = std::max(phi_max, std::abs(jets.back().v));
  }

  double res_max = 0.0;
  for (std::size_t i = 0; i < z_grid.size(); ++i) {
    const double z = z_grid[i];
    const Jet& j = jets[i];
    if (std::abs(j.v) <= 1e-12 * phi_max) continue;
    const double r = j.d2 + j.d1 / z - (a1sq + params.a2sq / z + eps2 / (z * z)) * j.v;
    res_max = std::max(res_max, std::abs(r));
  }
  return res_max / (a1sq * phi_max);
}

namespace {

// The three routes are alternating sums that cancel heavily near Laguerre
// roots, so they are carried in 113-bit arithmetic to make a plain relative
// comparison meaningful.
using Quad = boost::multiprecision::cpp_bin_float_quad;

// Gamma(sigma)/Gamma(sigma + k); below zero through the rising factorial.
Quad gamma_ratio(const Quad& sigma, int k) {
  if (sigma > 0) return boost::math::tgamma_delta_ratio(sigma, Quad(k));
  Quad p = 1;
  for (int j = 0; j < k; ++j) p *= sigma + j;
  if (p == 0) throw DomainError("gamma pole in series (2 eps + 1 + k = 0)");
  return 1 / p;
}

// sum_k (-1)^k C(n,k) Gamma(sigma)/Gamma(sigma+k) xi^k
Quad explicit_sum(int n, const Quad& sigma, const Quad& xi) {
  Quad sum = 0;
  for (int k = 0; k <= n; ++k) {
    const Quad binom = boost::math::binomial_coefficient<Quad>(static_cast<unsigned>(n),
                                                               static_cast<unsigned>(k));
    const Quad term = binom * gamma_ratio(sigma, k) * boost::multiprecision::pow(xi, k);
    sum += (k % 2 == 0) ? term : Quad(-term);
  }
  return sum;
}

// 1F1(-n; sigma; xi) by the ratio of successive terms
Quad hyp1f1_terms(int n, const Quad& sigma, const Quad& xi) {
  Quad term = 1;
  Quad sum = 1;
  for (int m = 0; m < n; ++m) {
    if (sigma + m == 0) throw DomainError("gamma pole in series (2 eps + 1 + k = 0)");
    term *= Quad(m - n) / (sigma + m) * xi / (m + 1);
    sum += term;
  }
  return sum;
}

// L_n^alpha(x) by the three-term recurrence
Quad laguerre_recurrence(int n, const Quad& alpha, const Quad& x) {
  if (n == 0) return 1;
  Quad prev = 1;
  Quad cur = 1 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const Quad next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

double rel_dev(const Quad& a, const Quad& b) {
  const Quad scale = std::max(abs(a), abs(b));
  return scale == 0 ? 0.0 : static_cast<double>(abs(a - b) / scale);
}

}  // namespace

double series_identity_check(int n, double eps, double a1, std::span<const double> z_grid) {
  if (n < 0) throw DomainError("series_identity_check: negative level");
  const Quad sigma = 2 * Quad(eps) + 1;
  const Quad lag_pref = gamma_ratio(sigma, n) * boost::math::factorial<Quad>(static_cast<unsigned>(n));

  double worst = 0.0;
  for (double z : z_grid) {
    const Quad xi = 2 * Quad(a1) * Quad(z);
    const Quad e = explicit_sum(n, sigma, xi);
    const Quad h = hyp1f1_terms(n, sigma, xi);
    const Quad l = lag_pref * laguerre_recurrence(n, 2 * Quad(eps), xi);
    worst = std::max({worst, rel_dev(e, h), rel_dev(e, l), rel_dev(h, l)});
  }
  return worst;
}

double laplace_solution(double eps, double a1, double a2sq, double t) {
  const double c = 2.0 * eps + 1.0;
  const double p = -a2sq / (2.0 * a1) - 0.5 * c;
  return std::exp(-c * std::log(t + a1) + p * (std::log(t - a1) - std::log(t + a1)));
}

double laplace_solution_check(double eps, double a1, double a2sq, std::span<const double> t_grid,
                              LaplaceCoefficient coefficient) {
  if (!(a1 > 0.0)) throw DomainError("laplace_solution_check: a1 must be positive");
  const double c = 2.0 * eps + 1.0;
  const double p = -a2sq / (2.0 * a1) - 0.5 * c;
  const double coef = coefficient == LaplaceCoefficient::derived ? c : eps + 1.0;

  double worst = 0.0;
  for (double t : t_grid) {
    if (!(t - a1 >= 0.1 * a1))
      throw DomainError("laplace_solution_check: t = " + std::to_string(t) +
                        " too close to the branch point t = a1");
    // f'/f from the logarithmic derivative of f
    const double dlog = -c / (t + a1) + p * (1.0 / (t - a1) - 1.0 / (t + a1));
    const double first = (t * t - a1 * a1) * dlog;
    const double second = coef * t;
    const double scale = std::abs(first) + std::abs(second) + std::abs(a2sq);
    worst = std::max(worst, std::abs(first + second + a2sq) / scale);
  }
  return worst;
}

}  // namespace expot
