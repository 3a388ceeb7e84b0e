#include "expot/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace expot::ladder {

namespace {

using Samples = std::vector<double>;
using Jets = std::vector<Jet>;

BoundState member(int n, double eps, double a1) {
  BoundState s;
  s.n = n;
  s.epsilon = eps;
  s.a1 = a1;
  s.convention = StateConvention::Kind::fixed_eps;
  return s;
}

double shift_for(double eps, double a1, std::span<const double> grid) {
  const BoundState env = member(0, eps, a1);
  double shift = -std::numeric_limits<double>::infinity();
  for (double z : grid) shift = std::max(shift, log_envelope(env, z));
  return shift;
}

Jets family_jets(int n, double eps, double a1, std::span<const double> grid, double shift) {
  const BoundState s = member(n, eps, a1);
  Jets out;
  out.reserve(grid.size());
  for (double z : grid) out.push_back(eval_jet(s, z, shift));
  return out;
}

Jets apply_core(const OperatorCore& core, std::span<const double> grid, const Jets& in) {
  Jets out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) out.push_back(core.apply(grid[i], in[i]));
  return out;
}

Samples values(const Jets& j) {
  Samples v;
  v.reserve(j.size());
  for (const Jet& x : j) v.push_back(x.v);
  return v;
}

double max_abs(const Samples& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Fit fit(const Samples& g, const Samples& target) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    num += g[i] * target[i];
    den += target[i] * target[i];
  }
  Fit f;
  f.coefficient = den > 0.0 ? num / den : 0.0;
  const double gmax = max_abs(g);
  if (gmax == 0.0) return f;
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst, std::abs(g[i] - f.coefficient * target[i]));
  f.residual = worst / gmax;
  return f;
}

Jets scale(const Jets& j, double c) {
  Jets out = j;
  for (Jet& x : out) {
    x.v *= c;
    x.d1 *= c;
    x.d2 *= c;
    x.d3 *= c;
  }
  return out;
}

Samples diff(const Samples& a, const Samples& b) {
  Samples out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

OperatorCore lowering_at(int n, double eps, double a1) {
  return {CoreKind::lowering, n, eps, a1, CoreForm::derived};
}

OperatorCore raising_at(int n, double eps, double a1, CoreForm form = CoreForm::derived) {
  return {CoreKind::raising, n, eps, a1, form};
}

}  // namespace

Jet OperatorCore::apply(double z, const Jet& f) const {
  double s = 0.0;
  double m = 0.0;
  double c = 0.0;
  if (kind == CoreKind::lowering) {
    s = -1.0;
    m = -a1;
    c = n + eps;
  } else {
    s = 1.0;
    m = form == CoreForm::derived ? -a1 : a1 - 1.0;
    c = n + eps + 1.0;
  }
  const double b = m * z + c;
  Jet out;
  out.v = s * z * f.d1 + b * f.v;
  out.d1 = s * (f.d1 + z * f.d2) + m * f.v + b * f.d1;
  out.d2 = s * (2.0 * f.d2 + z * f.d3) + 2.0 * m * f.d1 + b * f.d2;
  out.d3 = std::numeric_limits<double>::quiet_NaN();
  return out;
}

std::vector<double> family_grid(double eps, double a1, int n_max, int points) {
  if (points < 2) throw DomainError("family_grid: need at least two points");
  if (!(a1 > 0.0)) throw DomainError("family_grid: a1 must be positive");
  const double w_lo = 1e-2;
  const double w_hi = 4.0 * (n_max + 1) + 4.0 * std::abs(eps) + 40.0;
  std::vector<double> grid(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    const double w = w_lo + (w_hi - w_lo) * i / (points - 1);
    grid[static_cast<std::size_t>(i)] = w / (2.0 * a1);
  }
  return grid;
}

Fit apply_lowering(const BoundState& state, std::span<const double> grid) {
  const double shift = shift_for(state.epsilon, state.a1, grid);
  const Jets phi = family_jets(state.n, state.epsilon, state.a1, grid, shift);
  const Samples g = values(apply_core(lowering_at(state.n, state.epsilon, state.a1), grid, phi));
  if (state.n == 0) {
    const double pmax = max_abs(values(phi));
    return Fit{0.0, pmax > 0.0 ? max_abs(g) / pmax : 0.0};
  }
  const Jets target = family_jets(state.n - 1, state.epsilon, state.a1, grid, shift);
  return fit(g, values(target));
}

Fit apply_raising(const BoundState& state, std::span<const double> grid, CoreForm form) {
  const double shift = shift_for(state.epsilon, state.a1, grid);
  const Jets phi = family_jets(state.n, state.epsilon, state.a1, grid, shift);
  const Samples g =
      values(apply_core(raising_at(state.n, state.epsilon, state.a1, form), grid, phi));
  const Jets target = family_jets(state.n + 1, state.epsilon, state.a1, grid, shift);
  return fit(g, values(target));
}

CommutatorResult commutator_pm(const BoundState& state, std::span<const double> grid) {
  const int n = state.n;
  const double eps = state.epsilon;
  const double a1 = state.a1;
  const double shift = shift_for(eps, a1, grid);
  const Jets phi = family_jets(n, eps, a1, grid, shift);

  const Jets down = apply_core(lowering_at(n, eps, a1), grid, phi);
  const Jets up = apply_core(raising_at(n, eps, a1), grid, phi);
  const Samples up_down = values(apply_core(raising_at(n - 1, eps, a1), grid, down));
  const Samples down_up = values(apply_core(lowering_at(n + 1, eps, a1), grid, up));

  const Fit f = fit(diff(up_down, down_up), values(phi));
  return {f.coefficient, f.residual};
}

int identify_level(std::span<const double> vals, double eps, double a1,
                   std::span<const double> grid, int n_lo, int n_hi, double log_shift) {
  const Samples g(vals.begin(), vals.end());
  int best = std::max(n_lo, 0);
  double best_res = std::numeric_limits<double>::infinity();
  for (int k = std::max(n_lo, 0); k <= n_hi; ++k) {
    const Fit f = fit(g, values(family_jets(k, eps, a1, grid, log_shift)));
    if (f.residual < best_res) {
      best_res = f.residual;
      best = k;
    }
  }
  return best;
}

LadderReport structure_constants(const DerivedParams& params, double eps, int n_min, int n_max,
                                 std::span<const double> grid) {
  if (n_min < 0 || n_max < n_min) throw DomainError("structure_constants: bad level range");
  const double a1 = params.a1;
  const double A = params.A;

  LadderReport report;
  report.eps = eps;
  report.a1 = a1;
  report.A = A;
  if (eps != 0.0 && (eps + 1.0) / eps >= 0.0) report.prefactor_lowering = std::sqrt((eps + 1.0) / eps);
  if (eps != 0.0 && (eps - 1.0) / eps >= 0.0) report.prefactor_raising = std::sqrt((eps - 1.0) / eps);

  const double shift = shift_for(eps, a1, grid);
  // L0 on a sampled function: identify its level k, multiply by 2k + 2 - A.
  auto number_eigenvalue = [&](const Samples& v, int near) {
    const int k = identify_level(v, eps, a1, grid, near - 2, near + 2, shift);
    return 2.0 * k + 2.0 - A;
  };

  for (int n = n_min; n <= n_max; ++n) {
    const BoundState s = member(n, eps, a1);
    LadderEntry e;
    e.n = n;
    e.lowering = apply_lowering(s, grid);
    e.raising = apply_raising(s, grid);
    e.commutator = commutator_pm(s, grid);

    const Jets phi = family_jets(n, eps, a1, grid, shift);
    const Samples phi_v = values(phi);
    const Jets down = apply_core(lowering_at(n, eps, a1), grid, phi);
    const Jets up = apply_core(raising_at(n, eps, a1), grid, phi);
    const Samples down_v = values(down);
    const Samples up_v = values(up);

    e.raise_then_lower = fit(values(apply_core(lowering_at(n + 1, eps, a1), grid, up)), phi_v);

    const double l0_phi = number_eigenvalue(phi_v, n);
    if (n >= 1) {
      // [L-, L0] phi = L-(L0 phi) - L0(L- phi)
      const Samples a = values(apply_core(lowering_at(n, eps, a1), grid, scale(phi, l0_phi)));
      const double l0_down = number_eigenvalue(down_v, n - 1);
      Samples b = down_v;
      for (double& x : b) x *= l0_down;
      e.c_minus = fit(diff(a, b), down_v);
    }
    {
      const Samples a = values(apply_core(raising_at(n, eps, a1), grid, scale(phi, l0_phi)));
      const double l0_up = number_eigenvalue(up_v, n + 1);
      Samples b = up_v;
      for (double& x : b) x *= l0_up;
      e.c_plus = fit(diff(a, b), up_v);
    }

    const double minus_rad = n * (n + 2.0 * eps + 1.0);
    if (minus_rad >= 0.0) e.published_ell_minus = (-n + A - 1.0) * std::sqrt(minus_rad);
    const double plus_den = -n + A + 1.0;
    if (plus_den != 0.0 && (n + 1.0) / plus_den >= 0.0)
      e.published_ell_plus = std::sqrt((n + 1.0) / plus_den);
    e.published_mu = 2.0 * n + 2.0 - A;
    report.entries.push_back(e);
  }
  return report;
}

}  // namespace expot::ladder
