#include "expot/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "expot/ladder.hpp"
#include "expot/oracle.hpp"
#include "expot/spectrum.hpp"
#include "expot/states.hpp"

namespace expot::verify {

namespace {

using json = nlohmann::json;

Check make(const std::string& suite, std::string name, double measured, double tolerance,
           Relation rel, json detail = json::object()) {
  Check c;
  c.suite = suite;
  c.name = std::move(name);
  c.measured = measured;
  c.tolerance = tolerance;
  c.relation = rel;
  c.pass = std::isfinite(measured) &&
           (rel == Relation::at_most ? measured <= tolerance : measured > tolerance);
  c.detail = std::move(detail);
  return c;
}

double rel_error(double measured, double expected) {
  return std::abs(measured - expected) / std::max(std::abs(expected), 1e-300);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

DerivedParams params_of(const MoleculeParams& mol, Branch b) {
  return derive_params(mol.potential(), b);
}

BoundState member(int n, double eps, double a1) {
  BoundState s;
  s.n = n;
  s.epsilon = eps;
  s.a1 = a1;
  s.convention = StateConvention::Kind::fixed_eps;
  return s;
}

std::vector<Check> suite_ode(const MoleculeRegistry& reg) {
  std::vector<Check> out;
  for (const auto& [name, mol] : reg.entries()) {
    for (Branch b : {Branch::morse_flip, Branch::exponential}) {
      const auto p = params_of(mol, b);
      double worst = 0.0;
      json per_n = json::array();
      for (int n = 0; n <= 5; ++n) {
        const auto s = build_state(p, n, StateConvention::physical(), Normalize::no);
        const double r = ode_residual(s, p, default_z_grid(s, p));
        per_n.push_back({{"n", n}, {"epsilon", s.epsilon}, {"residual", r}});
        worst = std::max(worst, r);
      }
      out.push_back(make("ode", name + " " + to_string(b) + " n=0..5", worst, 1e-8,
                         Relation::at_most, {{"levels", per_n}}));
    }
    // eps off by 0.1 must not solve the equation
    const auto p = params_of(mol, Branch::morse_flip);
    double smallest = std::numeric_limits<double>::infinity();
    for (int n = 0; n <= 5; ++n) {
      const auto s = build_state(p, n, StateConvention::fixed(epsilon_of(p, n) + 0.1), Normalize::no);
      smallest = std::min(smallest, ode_residual(s, p, default_z_grid(s, p)));
    }
    out.push_back(make("ode", name + " perturbed eps (negative control)", smallest, 1e-3,
                       Relation::above));
  }
  return out;
}

std::vector<Check> suite_series(const MoleculeRegistry& reg) {
  std::vector<Check> out;
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> eps_d(0.2, 20.0);
  std::uniform_real_distribution<double> a1_d(0.5, 30.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst = 0.0;
  const int trials = 500;
  for (int t = 0; t < trials; ++t) {
    const int n = t % 11;
    const double eps = eps_d(rng);
    const double a1 = a1_d(rng);
    std::vector<double> zs;
    for (int i = 0; i < 10; ++i) zs.push_back((0.01 + 1.5 * unit(rng)) * (n + eps + 2.0) / a1);
    worst = std::max(worst, series_identity_check(n, eps, a1, zs));
  }
  out.push_back(make("series", "random parameters, n<=10", worst, 1e-10, Relation::at_most,
                     {{"trials", trials}}));

  for (const auto& [name, mol] : reg.entries()) {
    const auto p = params_of(mol, Branch::morse_flip);
    const int top = std::min(10, bound_state_count(p) - 1);
    double w = 0.0;
    for (int n = 0; n <= top; ++n) {
      const auto s = build_state(p, n, StateConvention::physical(), Normalize::no);
      w = std::max(w, series_identity_check(n, s.epsilon, s.a1, default_z_grid(s, p)));
    }
    out.push_back(make("series", name + " physical levels", w, 1e-10, Relation::at_most,
                       {{"n_max", top}}));
  }
  return out;
}

std::vector<Check> suite_laplace(const MoleculeRegistry& reg) {
  std::vector<Check> out;
  struct Case {
    std::string label;
    double eps, a1, a2sq;
  };
  std::vector<Case> cases = {{"eps=1 a1=1 a2sq=-4", 1.0, 1.0, -4.0},
                             {"eps=2.5 a1=1.3 a2sq=-2", 2.5, 1.3, -2.0}};
  for (const auto& [name, mol] : reg.entries()) {
    const auto p = params_of(mol, Branch::morse_flip);
    for (int n : {0, 3}) cases.push_back({name + " n=" + std::to_string(n), epsilon_of(p, n), p.a1, p.a2sq});
  }
  double worst = 0.0;
  double weakest_control = std::numeric_limits<double>::infinity();
  json detail = json::array();
  for (const auto& c : cases) {
    const auto ts = linspace(1.5 * c.a1, 10.0 * c.a1, 60);
    const double d = laplace_solution_check(c.eps, c.a1, c.a2sq, ts);
    const double pr = laplace_solution_check(c.eps, c.a1, c.a2sq, ts, LaplaceCoefficient::printed);
    detail.push_back({{"case", c.label}, {"derived", d}, {"printed", pr}});
    worst = std::max(worst, d);
    weakest_control = std::min(weakest_control, pr);
  }
  out.push_back(make("laplace", "coefficient 2eps+1", worst, 1e-10, Relation::at_most, {{"cases", detail}}));
  out.push_back(make("laplace", "coefficient eps+1 (negative control)", weakest_control, 1e-2,
                     Relation::above));
  return out;
}

std::vector<Check> suite_norm(const MoleculeRegistry& reg) {
  std::vector<Check> out;
  for (const auto& [name, mol] : reg.entries()) {
    const auto p = params_of(mol, Branch::morse_flip);
    const int top = std::min(6, bound_state_count(p) - 1);
    double worst_unit = 0.0;
    double worst_closed = 0.0;
    json per_n = json::array();
    for (int n = 0; n <= top; ++n) {
      const auto s = build_state(p, n);
      // independent x-space trapezoid over the whole support
      const double z_lo = s.epsilon / s.a1 * 1e-3;
      const double z_hi = (4.0 * n + 4.0 * s.epsilon + 60.0) / (2.0 * s.a1);
      const double unit =
          trapezoid_norm_x(s, p.beta, std::log(z_lo) / p.beta, std::log(z_hi) / p.beta, 20000);
      const double quad = squared_norm_quadrature(s, p.beta).value;
      const double closed = norm_closed_form(s, p.beta);
      const double rc = rel_error(closed, quad);
      per_n.push_back({{"n", n}, {"integral", unit}, {"closed_vs_quadrature", rc}});
      worst_unit = std::max(worst_unit, std::abs(unit - 1.0));
      worst_closed = std::max(worst_closed, rc);
    }
    out.push_back(make("norm", name + " |integral - 1|, n<=" + std::to_string(top), worst_unit, 1e-8,
                       Relation::at_most, {{"levels", per_n}}));
    out.push_back(make("norm", name + " closed form vs quadrature", worst_closed, 1e-8,
                       Relation::at_most));
  }
  return out;
}

std::vector<Check> suite_ladder(const MoleculeRegistry& reg) {
  std::vector<Check> out;
  std::vector<std::pair<double, double>> cases;  // (eps, a1)
  for (double eps : {0.5, 1.0, 2.5, 7.3, 13.0, 20.0})
    for (double a1 : {0.8, 5.0}) cases.emplace_back(eps, a1);
  for (const auto& [name, mol] : reg.entries()) {
    const auto p = params_of(mol, Branch::morse_flip);
    cases.emplace_back(epsilon_of(p, 0), p.a1);
  }

  double annihilation = 0.0, lowering = 0.0, raising = 0.0, fit_res = 0.0, commutator = 0.0,
         round_trip = 0.0;
  double printed = std::numeric_limits<double>::infinity();
  for (const auto& [eps, a1] : cases) {
    const auto grid = ladder::family_grid(eps, a1, 10);
    for (int n = 0; n <= 10; ++n) {
      const auto s = member(n, eps, a1);
      const auto low = ladder::apply_lowering(s, grid);
      if (n == 0) {
        annihilation = std::max(annihilation, low.residual);
      } else {
        lowering = std::max(lowering, rel_error(low.coefficient, n + 2.0 * eps));
        fit_res = std::max(fit_res, low.residual);
      }
      const auto up = ladder::apply_raising(s, grid);
      raising = std::max(raising, rel_error(up.coefficient, n + 1.0));
      fit_res = std::max(fit_res, up.residual);
      const auto c = ladder::commutator_pm(s, grid);
      commutator = std::max({commutator, rel_error(c.mu, -(2.0 * n + 2.0 * eps + 1.0)), c.residual});
      printed = std::min(printed, ladder::apply_raising(s, grid, ladder::CoreForm::printed).residual);
    }
  }
  for (const auto& [eps, a1] : cases) {
    const auto grid = ladder::family_grid(eps, a1, 11);
    DerivedParams dp;
    dp.a1 = a1;
    const auto r = ladder::structure_constants(dp, eps, 0, 10, grid);
    for (const auto& e : r.entries)
      round_trip = std::max({round_trip, e.raise_then_lower.residual,
                             rel_error(e.raise_then_lower.coefficient, (e.n + 1.0) * (e.n + 1.0 + 2 * eps))});
  }
  const json info = {{"cases", cases.size()}, {"n_max", 10}};
  out.push_back(make("ladder", "ground state annihilation", annihilation, 1e-12, Relation::at_most, info));
  out.push_back(make("ladder", "lowering coefficient n+2eps (relative)", lowering, 1e-10, Relation::at_most, info));
  out.push_back(make("ladder", "raising coefficient n+1 (relative)", raising, 1e-10, Relation::at_most, info));
  out.push_back(make("ladder", "shift fit residual", fit_res, 1e-10, Relation::at_most, info));
  out.push_back(make("ladder", "commutator mu=-(2n+2eps+1)", commutator, 1e-9, Relation::at_most, info));
  out.push_back(make("ladder", "raise then lower (n+1)(n+1+2eps)", round_trip, 1e-9, Relation::at_most, info));
  out.push_back(make("ladder", "printed raising form (negative control)", printed, 1e-2, Relation::above, info));
  return out;
}

std::vector<Check> suite_su2(const MoleculeRegistry& reg) {
  std::vector<Check> out;
  for (const auto& [name, mol] : reg.entries()) {
    const auto p = params_of(mol, Branch::morse_flip);
    const double eps = epsilon_of(p, 0);
    const auto grid = ladder::family_grid(eps, p.a1, 11);
    const auto r = ladder::structure_constants(p, eps, 0, 10, grid);

    double worst = 0.0;
    json levels = json::array();
    for (const auto& e : r.entries) {
      const double mu_expected = -(2.0 * e.n + 2.0 * eps + 1.0);
      double dev = std::max({std::abs(e.c_plus.coefficient + 2.0), e.c_plus.residual,
                             rel_error(e.commutator.mu, mu_expected), e.commutator.residual});
      json measured = {nullptr, e.c_plus.coefficient, e.commutator.mu};
      if (e.c_minus) {
        dev = std::max({dev, std::abs(e.c_minus->coefficient - 2.0), e.c_minus->residual});
        measured[0] = e.c_minus->coefficient;
      }
      worst = std::max(worst, dev);
      json lv = {{"n", e.n},
                 {"measured", measured},
                 {"expected", {2.0, -2.0, mu_expected}},
                 {"paper", {r.published_c_minus, r.published_c_plus, e.published_mu}},
                 {"lowering_coefficient", e.lowering.coefficient},
                 {"raising_coefficient", e.raising.coefficient},
                 {"published_ell_minus", e.published_ell_minus ? json(*e.published_ell_minus) : json(nullptr)},
                 {"published_ell_plus", e.published_ell_plus ? json(*e.published_ell_plus) : json(nullptr)}};
      levels.push_back(std::move(lv));
    }
    json detail = {{"eps", eps},
                   {"a1", p.a1},
                   {"A", p.A},
                   {"fields", {"[L-,L0]", "[L+,L0]", "mu"}},
                   {"prefactor_lowering", r.prefactor_lowering ? json(*r.prefactor_lowering) : json(nullptr)},
                   {"prefactor_raising", r.prefactor_raising ? json(*r.prefactor_raising) : json(nullptr)},
                   {"levels", levels}};
    out.push_back(make("su2", name + " measured constants [2, -2, -(2n+2eps+1)], n<=10", worst, 1e-9,
                       Relation::at_most, std::move(detail)));
  }
  return out;
}

std::vector<Check> suite_oracle(const MoleculeRegistry& reg) {
  std::vector<Check> out;

  // box of width L: n^2 pi^2 / (M L^2)
  {
    const double L = 2.0, M = 1.5;
    const auto V = [L](double x) { return (x <= 0.0 || x >= L) ? 1e6 : 0.0; };
    const auto r = oracle::solve_bound_states(V, M, oracle::GridSpec{0.0, L, 4000}, 3);
    double worst = r.eigenvalues.size() == 3 ? 0.0 : INFINITY;
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      worst = std::max(worst, rel_error(r.eigenvalues[i], n * n * std::numbers::pi * std::numbers::pi / (M * L * L)));
    }
    out.push_back(make("oracle", "particle in a box n=1..3 (relative)", worst, 1e-3, Relation::at_most,
                       {{"eigenvalues", r.eigenvalues}}));
  }

  const MoleculeParams* h2 = reg.find("H2");
  if (h2) {
    const double closed = energy_level(h2->potential(), Branch::morse_flip, 0).energy;
    const auto V = oracle::morse_potential(*h2);
    // 1999 -> 3998 intervals halves h exactly
    const double coarse =
        oracle::solve_bound_states(V, h2->M(), {-h2->r0, 12 * h2->r0, 2000}, 1).eigenvalues.at(0);
    const double fine =
        oracle::solve_bound_states(V, h2->M(), {-h2->r0, 12 * h2->r0, 3999}, 1).eigenvalues.at(0);
    const double ratio = std::abs(coarse - closed) / std::abs(fine - closed);
    const json d = {{"error_coarse", coarse - closed}, {"error_fine", fine - closed}};
    out.push_back(make("oracle", "H2 ground state error ratio on halving h (>= 3.5)", ratio, 3.5,
                       Relation::above, d));
    // the upper end of the O(h^2) window, expressed as a bound
    out.push_back(make("oracle", "H2 ground state error ratio on halving h (<= 4.5)", ratio, 4.5,
                       Relation::at_most, d));
  }

  const std::map<std::string, std::vector<int>> levels = {{"H2", {0, 2, 4}}, {"LiH", {0, 2}}};
  for (const auto& [name, ns] : levels) {
    const MoleculeParams* mol = reg.find(name);
    if (!mol) continue;
    const auto rows = oracle::compare_with_closed_form(*mol, ns);
    double worst = 0.0;
    json detail = json::array();
    for (const auto& r : rows) {
      if (!r.bound) worst = INFINITY;
      worst = std::max(worst, std::abs(r.difference));
      detail.push_back({{"n", r.n}, {"closed_form", r.closed_form}, {"oracle", r.oracle}, {"difference", r.difference}});
    }
    std::string label = name + " Morse levels n=";
    for (std::size_t i = 0; i < ns.size(); ++i) label += (i ? "," : "") + std::to_string(ns[i]);
    out.push_back(make("oracle", label + " vs closed form (eV)", worst, 2e-3, Relation::at_most, {{"rows", detail}}));
  }
  return out;
}

using SuiteFn = std::function<std::vector<Check>(const MoleculeRegistry&)>;

const std::map<std::string, SuiteFn>& suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"ode", suite_ode},       {"series", suite_series}, {"laplace", suite_laplace},
      {"norm", suite_norm},     {"ladder", suite_ladder}, {"su2", suite_su2},
      {"oracle", suite_oracle}};
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"ode", "series", "laplace", "norm",
                                                 "ladder", "su2", "oracle"};
  return names;
}

std::vector<Check> run_suite(const std::string& suite, const MoleculeRegistry& registry) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw DomainError("unknown suite '" + suite + "'");
  return it->second(registry);
}

std::vector<TableRow> table1(const MoleculeRegistry& registry) {
  std::vector<TableRow> rows;
  for (const auto& v : published_table()) {
    const MoleculeParams* mol = registry.find(v.molecule);
    if (!mol) throw DomainError(std::string("molecule '") + v.molecule + "' not in registry");
    TableRow r;
    r.molecule = v.molecule;
    r.branch = v.branch;
    r.n = v.n;
    r.computed = energy_level(mol->potential(), v.branch, v.n).energy;
    r.published = v.energy;
    r.abs_diff = std::abs(r.computed - r.published);
    r.pass = r.abs_diff <= kTableTolerance;
    rows.push_back(r);
  }
  return rows;
}

std::string to_string(Relation r) { return r == Relation::at_most ? "<=" : ">"; }

nlohmann::json to_json(const Check& c) {
  return {{"suite", c.suite},
          {"name", c.name},
          {"measured", std::isfinite(c.measured) ? json(c.measured) : json(nullptr)},
          {"tolerance", c.tolerance},
          {"relation", to_string(c.relation)},
          {"pass", c.pass},
          {"detail", c.detail}};
}

}  // namespace expot::verify
