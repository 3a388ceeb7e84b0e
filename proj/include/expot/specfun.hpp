#pragma once

// Special functions needed by the closed-form eigenstates: associated Laguerre
// polynomials, log-gamma, terminating 1F1 / 3F2 series and half-line
// quadrature.

#include <functional>

#include "expot/errors.hpp"

namespace expot::specfun {

/// L_n^alpha(x) by upward three-term recurrence. L_{-1} is taken as 0.
double laguerre(int n, double alpha, double x);

/// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x).
double laguerre_derivative(int n, double alpha, double x);

/// k-th derivative, (-1)^k L_{n-k}^{alpha+k}(x); zero for k > n.
double laguerre_derivative(int n, double alpha, double x, int k);

/// ln Gamma(x) for x > 0 (Lanczos, g = 671/128, 15 coefficients).
double log_gamma(double x);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1) as a running product.
double pochhammer(double a, int k);

/// Terminating 1F1(-n; sigma; xi) = sum_m (-n)_m / (sigma)_m xi^m / m!.
/// Throws DomainError when (sigma)_m vanishes for some m <= n.
double hyp1f1_poly(int n, double sigma, double xi);

/// Terminating 3F2(-m, a, b; d, e; 1). Throws DomainError on a vanishing
/// denominator Pochhammer before termination.
double hyp3f2_unit(int m, double a, double b, double d, double e);

/// Closed form of
///   int_0^inf t^{alpha-1} e^{-delta t} L_m^lambda(delta t) L_n^betap(delta t) dt
/// = delta^{-alpha} Gamma(alpha) (1-alpha+betap)_n (1+lambda)_m / (m! n!)
///   * 3F2(-m, alpha, alpha-betap; -n+alpha-betap, lambda+1; 1).
/// The superscript of the second polynomial is `betap` to keep it apart from
/// the potential's beta. Requires alpha > 0, delta > 0.
double laguerre_weighted_integral(double alpha, double delta, int m, double lambda, int n,
                                  double betap);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
  double l1 = 0.0;     // int |f|, the scale for relative accuracy
};

inline constexpr double kQuadratureRelTarget = 1e-10;

/// int_0^inf f(t) dt for integrands decaying at least like e^{-scale t} and
/// integrable at 0. `split` (default 1/scale) separates a tanh-sinh panel on
/// [0, split], which tolerates endpoint singularities, from an adaptive
/// Gauss-Kronrod panel on [split, inf). Place it near the integrand's peak.
///
/// Throws NumericalError (with the best estimate) if the reported error
/// exceeds kQuadratureRelTarget relative to int |f|.
QuadratureResult integrate_halfline(const std::function<double(double)>& f, double scale,
                                    double split = 0.0);

}  // namespace expot::specfun
