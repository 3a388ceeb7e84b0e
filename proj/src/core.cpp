#include "expot/core.hpp"

#include <cmath>

namespace expot {

namespace {

// CODATA 2018
constexpr double kHbarC_eVA = 1973.269804;     // hbar c in eV A
constexpr double kAmu_eV = 931.49410242e6;      // atomic mass unit in eV/c^2

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string(field) + " must be finite and positive");
}

}  // namespace

std::string to_string(Branch b) {
  return b == Branch::exponential ? "exp" : "morse";
}

std::optional<Branch> parse_branch(const std::string& s) {
  if (s == "exp" || s == "exponential") return Branch::exponential;
  if (s == "morse" || s == "morse_flip") return Branch::morse_flip;
  return std::nullopt;
}

PotentialSpec MoleculeParams::potential() const {
  return PotentialSpec{D, 2.0 * D, beta(), M()};
}

void MoleculeParams::validate() const {
  require_positive(D, "D");
  require_positive(r0, "r0");
  require_positive(alpha, "alpha");
  require_positive(E0, "E0");
  if (mass_amu) require_positive(*mass_amu, "mass_amu");
  require_positive(M(), "M");
  require_positive(beta(), "beta");
}

std::optional<double> MoleculeParams::mass_consistency() const {
  if (!mass_amu) return std::nullopt;
  const double from_mass = kHbarC_eVA * kHbarC_eVA / (*mass_amu * kAmu_eV * r0 * r0);
  return std::abs(from_mass - E0) / E0;
}

void validate(const PotentialSpec& spec) {
  require_positive(spec.V1, "V1");
  require_positive(spec.beta, "beta");
  require_positive(spec.M, "M");
  if (!std::isfinite(spec.V2)) throw DomainError("V2 must be finite");
}

DerivedParams derive_params(const PotentialSpec& spec, Branch branch) {
  validate(spec);
  DerivedParams p;
  p.branch = branch;
  p.beta = spec.beta;
  p.M = spec.M;
  p.a1 = std::sqrt(spec.M * spec.V1) / spec.beta;
  const double sign = branch == Branch::morse_flip ? -1.0 : 1.0;
  p.a2sq = sign * spec.M * spec.V2 / (spec.beta * spec.beta);
  p.A = -p.a2sq / p.a1;
  if (p.A == 0.0) p.A = 0.0;  // no negative zero for V2 = 0
  return p;
}

double epsilon_of(const DerivedParams& params, int n) {
  return 0.5 * (params.A - 1.0) - n;
}

int bound_state_count(const DerivedParams& params) {
  if (params.A <= 1.0) return 0;
  // count of integers n >= 0 with n < (A - 1)/2
  return static_cast<int>(std::ceil(0.5 * (params.A - 1.0)));
}

}  // namespace expot
