#pragma once

// Closed-form eigenfunctions phi_n(z) = N z^eps e^{-a1 z} L_n^{2 eps}(2 a1 z),
// z = e^{beta x}, together with the checks that tie them back to the
// Schroedinger equation.

#include <span>
#include <vector>

#include "expot/core.hpp"
#include "expot/specfun.hpp"

namespace expot {

/// How eps is chosen for a state. `physical` uses eps_n = (A - 2n - 1)/2 so
/// the state solves the Hamiltonian for the given parameters; `fixed_eps`
/// keeps one eps for all n (the family on which the Laguerre recurrences act).
struct StateConvention {
  enum class Kind { physical, fixed_eps };
  Kind kind = Kind::physical;
  double eps = 0.0;

  static StateConvention physical() { return {}; }
  static StateConvention fixed(double eps) { return {Kind::fixed_eps, eps}; }
};

enum class Normalize { yes, no };

struct BoundState {
  int n = 0;
  double epsilon = 0.0;
  double a1 = 0.0;
  double norm = 1.0;  // multiplies the unnormalized form
  StateConvention::Kind convention = StateConvention::Kind::physical;
  bool normalized = false;

  /// eps <= 0: solves the ODE but is not square integrable.
  bool formal() const { return !(epsilon > 0.0); }
};

/// Value and first three z-derivatives at one point.
struct Jet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

/// Builds a state. With Normalize::yes the norm is 1/sqrt(int |phi(x)|^2 dx),
/// dx = dz/(beta z), by quadrature; eps <= 0 then throws DivergentNormError.
/// With Normalize::no, norm = 1.
BoundState build_state(const DerivedParams& params, int n,
                       StateConvention convention = StateConvention::physical(),
                       Normalize normalize = Normalize::yes);

/// norm * z^eps e^{-a1 z} L_n^{2eps}(2 a1 z), evaluated through the log domain.
double eval_state(const BoundState& state, double z);

/// eval_state at z = e^{beta x}.
double eval_state_x(const BoundState& state, double x, double beta);

/// phi and its derivatives at z, all scaled by exp(-log_shift). A shared
/// shift keeps values finite when eps or a1 z is large.
Jet eval_jet(const BoundState& state, double z, double log_shift = 0.0);

/// eps ln z - a1 z, the log of the envelope z^eps e^{-a1 z}.
double log_envelope(const BoundState& state, double z);

/// Quadrature of int |phi_unnormalized(x)|^2 dx.
specfun::QuadratureResult squared_norm_quadrature(const BoundState& state, double beta);

/// The same squared norm from the Laguerre weighted-integral closed form
/// (alpha = 2 eps, delta = 2 a1, both superscripts 2 eps). Requires eps > 0.
double norm_closed_form(const BoundState& state, double beta);

/// int_0^inf z^{2eps - 1 + extra_power} e^{-2 a1 z} L_m^{2eps}(2a1 z) L_n^{2eps}(2a1 z) dz.
/// extra_power = 1 gives the Laguerre orthogonality weight.
specfun::QuadratureResult family_overlap_quadrature(int m, int n, double eps, double a1,
                                                    double extra_power = 0.0);

/// Closed form of family_overlap_quadrature for extra_power = 0.
double family_overlap_closed_form(int m, int n, double eps, double a1);

/// Trapezoid rule for int |phi(x)|^2 dx over [x_lo, x_hi], x-space samples of
/// eval_state_x. Independent of the z-space quadrature used by build_state.
double trapezoid_norm_x(const BoundState& state, double beta, double x_lo, double x_hi,
                        int points);

/// Geometric grid of `points` values over [z_peak 1e-3, 3 z_turn]; z_turn is
/// the outer zero of -a1^2 - a2sq/z - eps^2/z^2, or a Laguerre-extent
/// fallback when that has no positive root (formal states).
std::vector<double> default_z_grid(const BoundState& state, const DerivedParams& params,
                                   int points = 200);

/// Max over the grid of |phi'' + phi'/z - (a1^2 + a2sq/z + eps^2/z^2) phi|,
/// relative to max |a1^2 phi|, ignoring points where |phi| < 1e-12 max|phi|.
double ode_residual(const BoundState& state, const DerivedParams& params,
                    std::span<const double> z_grid);

/// Max pairwise relative deviation between the explicit gamma-ratio sum, the
/// terminating 1F1(-n; 2eps+1; 2 a1 z) and n!/(2eps+1)_n L_n^{2eps}(2 a1 z).
/// All three are evaluated in 113-bit floating point.
double series_identity_check(int n, double eps, double a1, std::span<const double> z_grid);

/// Coefficient multiplying t in the first-order Laplace-space equation.
/// `derived` is 2eps + 1; `printed` is eps + 1.
enum class LaplaceCoefficient { derived, printed };

/// f(t) = (t + a1)^{-(2eps+1)} ((t - a1)/(t + a1))^{-a2sq/(2a1) - (2eps+1)/2}, t > a1.
double laplace_solution(double eps, double a1, double a2sq, double t);

/// Max over t of |(t^2 - a1^2) f' + (c t + a2sq) f| / |f|, divided by the sum
/// of the magnitudes of the three terms. Throws DomainError for t within
/// 0.1 a1 of +-a1 or t <= a1.
double laplace_solution_check(double eps, double a1, double a2sq, std::span<const double> t_grid,
                              LaplaceCoefficient coefficient = LaplaceCoefficient::derived);

}  // namespace expot
