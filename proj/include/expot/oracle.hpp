#pragma once

// Independent check of the closed-form spectrum: three-point finite
// differences for -(1/M) psi'' + V psi = E psi with Dirichlet ends, and
// Sturm-sequence bisection on the resulting symmetric tridiagonal matrix.

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "expot/core.hpp"

namespace expot::oracle {

struct GridSpec {
  double x_min = 0.0;  // A
  double x_max = 0.0;  // A
  int points = 0;      // N, including both Dirichlet ends

  double spacing() const { return (x_max - x_min) / (points - 1); }
  void validate() const;
};

struct OracleResult {
  std::vector<double> eigenvalues;  // eV, ascending, bound only
  GridSpec grid;
  std::optional<std::vector<double>> richardson;  // extrapolated, when requested
  bool truncated = false;  // fewer bound levels than requested
};

/// Symmetric tridiagonal matrix, diagonal `diag`, off-diagonal `off`
/// (off.size() == diag.size() - 1).
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

/// Number of eigenvalues strictly below `lambda` (Sturm sequence count).
int sturm_count(const Tridiagonal& t, double lambda);

/// k-th smallest eigenvalue (0-based) by bisection to absolute tolerance
/// 1e-10 max(1, |E|).
double kth_eigenvalue(const Tridiagonal& t, int k);

/// Builds H on the interior points of `grid`.
Tridiagonal discretize(const std::function<double(double)>& V, double M, const GridSpec& grid);

/// Lowest k eigenvalues lying below min(V(x_min), V(x_max)). Throws DomainError
/// on NaN in V or invalid inputs.
OracleResult solve_bound_states(const std::function<double(double)>& V, double M,
                                const GridSpec& grid, int k);

/// Runs at N and 2N points and extrapolates each level with the exact ratio
/// of the two spacings: E = (r^2 E_fine - E_coarse)/(r^2 - 1).
OracleResult solve_with_richardson(const std::function<double(double)>& V, double M,
                                   const GridSpec& coarse, int k);

/// D e^{-2 beta x} - 2 D e^{-beta x}: the decaying-exponential realization
/// whose spectrum is the Morse-branch closed form.
std::function<double(double)> morse_potential(const MoleculeParams& mol);

/// x / r0 in [-1, 12], N = 8000.
GridSpec default_grid(const MoleculeParams& mol);

struct ComparisonRow {
  int n = 0;
  bool bound = false;
  double closed_form = 0.0;  // eV
  double oracle = 0.0;       // eV, Richardson-extrapolated
  double difference = 0.0;   // oracle - closed form
};

/// Closed-form Morse-branch levels against the oracle on `grid`
/// (default_grid when absent). Unbound levels are marked, not solved.
std::vector<ComparisonRow> compare_with_closed_form(const MoleculeParams& mol,
                                                    std::span<const int> levels,
                                                    std::optional<GridSpec> grid = std::nullopt);

}  // namespace expot::oracle
