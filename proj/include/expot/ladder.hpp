#pragma once

// Step-down / step-up operator cores acting on the fixed-eps family
//   phi_n(z) = z^eps e^{-a1 z} L_n^{2eps}(2 a1 z),
// and measurement of the coefficients and commutators they produce.
//
// Every quantity here is measured on a grid with analytic derivatives and a
// least-squares fit against the expected family member; nothing is assumed.

#include <optional>
#include <span>
#include <vector>

#include "expot/core.hpp"
#include "expot/states.hpp"

namespace expot::ladder {

enum class CoreKind { lowering, raising };

/// `printed` swaps the raising core's -a1 z term for (a1 - 1) z, the form that
/// fails the Laguerre recurrence. Kept as a negative control.
enum class CoreForm { derived, printed };

/// s z d/dz + m z + c, instantiated at level n:
///   lowering: -z d/dz - a1 z + n + eps
///   raising:   z d/dz - a1 z + n + eps + 1
struct OperatorCore {
  CoreKind kind = CoreKind::lowering;
  int n = 0;
  double eps = 0.0;
  double a1 = 0.0;
  CoreForm form = CoreForm::derived;

  /// Applies the core to a jet. The result's d3 is not available (NaN).
  Jet apply(double z, const Jet& f) const;
};

struct Fit {
  double coefficient = 0.0;
  double residual = 0.0;  // max |g - c target| / max |g|
};

/// Fits (-z d/dz - a1 z + n + eps) phi_n to c phi_{n-1}. For n = 0 returns
/// c = 0 and residual = max|g| / max|phi_0|.
Fit apply_lowering(const BoundState& state, std::span<const double> grid);

/// Fits (z d/dz - a1 z + n + eps + 1) phi_n to c phi_{n+1}.
Fit apply_raising(const BoundState& state, std::span<const double> grid,
                  CoreForm form = CoreForm::derived);

struct CommutatorResult {
  double mu = 0.0;
  double residual = 0.0;
};

/// [L+, L-] phi_n = L+(L- phi_n) - L-(L+ phi_n), each core instantiated at the
/// level of its operand, fitted to mu phi_n.
CommutatorResult commutator_pm(const BoundState& state, std::span<const double> grid);

/// Uniform grid in w = 2 a1 z covering the family members up to n_max + 1.
std::vector<double> family_grid(double eps, double a1, int n_max, int points = 400);

struct LadderEntry {
  int n = 0;
  Fit lowering;                 // expected n + 2 eps
  Fit raising;                  // expected n + 1
  Fit raise_then_lower;         // expected (n + 1)(n + 1 + 2 eps)
  CommutatorResult commutator;  // expected -(2n + 2 eps + 1)
  std::optional<Fit> c_minus;   // [L-, L0] = c L-, expected 2; absent for n = 0
  Fit c_plus;                   // [L+, L0] = c L+, expected -2

  // published values, reported only
  std::optional<double> published_ell_minus;  // (-n + A - 1) sqrt(n (n + 2 eps + 1))
  std::optional<double> published_ell_plus;   // sqrt((n + 1)/(-n + A + 1))
  double published_mu = 0.0;                  // 2n + 2 - A
};

struct LadderReport {
  double eps = 0.0;
  double a1 = 0.0;
  double A = 0.0;
  std::vector<LadderEntry> entries;
  double published_c_minus = 1.0;
  double published_c_plus = 1.0;
  // outer prefactors of the printed operators; empty when imaginary
  std::optional<double> prefactor_lowering;  // sqrt((eps + 1)/eps)
  std::optional<double> prefactor_raising;   // sqrt((eps - 1)/eps)
};

/// Index k in [n_lo, n_hi] whose family member best fits `values`.
int identify_level(std::span<const double> values, double eps, double a1,
                   std::span<const double> grid, int n_lo, int n_hi, double log_shift);

/// Measures every ladder quantity for n in [n_min, n_max] on the fixed-eps
/// family. L0 acts as 2k + 2 - A on a function identified as level k.
LadderReport structure_constants(const DerivedParams& params, double eps, int n_min, int n_max,
                                 std::span<const double> grid);

}  // namespace expot::ladder
