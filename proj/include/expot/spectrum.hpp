#pragma once

#include <vector>

#include "expot/core.hpp"

namespace expot {

struct EnergyLevel {
  int n = 0;
  double energy = 0.0;   // eV
  double epsilon = 0.0;  // eps_n
  bool physical = false; // eps_n > 0
};

/// E_n = -(beta^2 / 4M) (2n + 1 - A)^2 with A = -(sqrt(M)/beta) V2/sqrt(V1)
/// on the exponential branch and the sign of A flipped on the Morse branch.
EnergyLevel energy_level(const PotentialSpec& spec, Branch branch, int n);

/// Levels 0..n_max, formal ones included with physical = false.
std::vector<EnergyLevel> spectrum(const PotentialSpec& spec, Branch branch, int n_max);

/// Same closed form but through -beta^2 eps_n^2 / M.
double energy_from_epsilon(const DerivedParams& params, double eps);

}  // namespace expot
