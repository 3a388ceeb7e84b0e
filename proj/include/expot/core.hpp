#pragma once

// Physical inputs of the potential V(x) = V1 e^{2 beta x} + V2 e^{beta x} and
// the dimensionless quantities that drive the closed-form solution.
//
// Units: energies in eV, lengths in Angstrom, M = 2m/hbar^2 in eV^-1 A^-2.

#include <optional>
#include <string>

#include "expot/errors.hpp"

namespace expot {

/// Which sign of the cross term is used. `morse_flip` negates V2 in a2^2,
/// giving the Morse spectrum (the usual "beta -> -beta" substitution is a
/// no-op on the even quantities a1^2, a2^2 themselves).
enum class Branch { exponential, morse_flip };

std::string to_string(Branch b);
/// Accepts "exp"/"exponential" and "morse"/"morse_flip".
std::optional<Branch> parse_branch(const std::string& s);

struct PotentialSpec {
  double V1 = 0.0;    // eV, > 0
  double V2 = 0.0;    // eV, any sign
  double beta = 0.0;  // 1/A, > 0
  double M = 0.0;     // 1/(eV A^2), > 0
};

/// Spectroscopic constants for a diatomic. E0 = hbar^2/(m r0^2) is the
/// authoritative mass scale; mass_amu is only used for a consistency check.
struct MoleculeParams {
  std::string name;
  double D = 0.0;       // eV
  double r0 = 0.0;      // A
  double alpha = 0.0;   // beta * r0
  double E0 = 0.0;      // eV
  std::optional<double> mass_amu;

  double M() const { return 2.0 / (E0 * r0 * r0); }
  double beta() const { return alpha / r0; }

  /// V1 = D, V2 = 2D; pair with Branch::morse_flip for the Morse well.
  PotentialSpec potential() const;

  /// Throws DomainError naming the first invalid field.
  void validate() const;

  /// |hbar^2/(m r0^2) - E0| / E0 from CODATA constants; nullopt without a mass.
  std::optional<double> mass_consistency() const;
};

struct DerivedParams {
  double a1 = 0.0;    // sqrt(M V1)/beta
  double a2sq = 0.0;  // +-M V2/beta^2, sign flipped on the Morse branch
  double A = 0.0;     // -a2sq/a1
  Branch branch = Branch::exponential;
  double beta = 0.0;  // carried for x <-> z mapping and energies
  double M = 0.0;
};

void validate(const PotentialSpec& spec);

DerivedParams derive_params(const PotentialSpec& spec, Branch branch);

/// eps_n = (A - 2n - 1)/2. Negative values are formal (non-normalizable) roots.
double epsilon_of(const DerivedParams& params, int n);

/// Number of levels with eps_n > 0, i.e. 2n + 1 < A.
int bound_state_count(const DerivedParams& params);

}  // namespace expot
