#include "expot/spectrum.hpp"

namespace expot {

EnergyLevel energy_level(const PotentialSpec& spec, Branch branch, int n) {
  if (n < 0) throw DomainError("energy_level: level index must be non-negative");
  const DerivedParams p = derive_params(spec, branch);
  const double shifted = 2.0 * n + 1.0 - p.A;
  EnergyLevel lvl;
  lvl.n = n;
  lvl.energy = -(spec.beta * spec.beta) / (4.0 * spec.M) * shifted * shifted;
  lvl.epsilon = epsilon_of(p, n);
  lvl.physical = lvl.epsilon > 0.0;
  return lvl;
}

std::vector<EnergyLevel> spectrum(const PotentialSpec& spec, Branch branch, int n_max) {
  if (n_max < 0) throw DomainError("spectrum: n_max must be non-negative");
  std::vector<EnergyLevel> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) out.push_back(energy_level(spec, branch, n));
  return out;
}

double energy_from_epsilon(const DerivedParams& params, double eps) {
  return -params.beta * params.beta * eps * eps / params.M;
}

}  // namespace expot
