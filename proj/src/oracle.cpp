#include "expot/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "expot/spectrum.hpp"

namespace expot::oracle {

void GridSpec::validate() const {
  if (!(x_min < x_max)) throw DomainError("GridSpec: x_min must be below x_max");
  if (points < 100) throw DomainError("GridSpec: at least 100 points required");
}

int sturm_count(const Tridiagonal& t, double lambda) {
  // Signs of the LDL^T pivots of (T - lambda I).
  constexpr double kTiny = 1e-300;
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    d = t.diag[i] - lambda - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -kTiny;
    if (d < 0.0) ++count;
  }
  return count;
}

namespace {

std::pair<double, double> gershgorin(const Tridiagonal& t) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t n = t.diag.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  return {lo, hi};
}

}  // namespace

double kth_eigenvalue(const Tridiagonal& t, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= t.diag.size())
    throw DomainError("kth_eigenvalue: index out of range");
  auto [lo, hi] = gershgorin(t);
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-10 * std::max(1.0, std::abs(mid)) || mid == lo || mid == hi) return mid;
    // eigenvalue k lies below mid iff more than k eigenvalues do
    if (sturm_count(t, mid) > k)
      hi = mid;
    else
      lo = mid;
  }
}

Tridiagonal discretize(const std::function<double(double)>& V, double M, const GridSpec& grid) {
  grid.validate();
  if (!(M > 0.0)) throw DomainError("discretize: M must be positive");
  const double h = grid.spacing();
  const double kin = 1.0 / (M * h * h);
  const std::size_t interior = static_cast<std::size_t>(grid.points - 2);
  Tridiagonal t;
  t.diag.resize(interior);
  t.off.assign(interior - 1, -kin);
  for (std::size_t i = 0; i < interior; ++i) {
    const double v = V(grid.x_min + h * static_cast<double>(i + 1));
    if (std::isnan(v)) throw DomainError("discretize: potential is NaN on the grid");
    t.diag[i] = 2.0 * kin + v;
  }
  return t;
}

OracleResult solve_bound_states(const std::function<double(double)>& V, double M,
                                const GridSpec& grid, int k) {
  if (k < 1) throw DomainError("solve_bound_states: k must be at least 1");
  const Tridiagonal t = discretize(V, M, grid);
  const double threshold = std::min(V(grid.x_min), V(grid.x_max));
  if (std::isnan(threshold)) throw DomainError("solve_bound_states: potential is NaN at the ends");

  const int available = std::min(sturm_count(t, threshold), static_cast<int>(t.diag.size()));
  const int wanted = std::min(k, available);

  // levels are independent; the result does not depend on scheduling
  std::vector<std::future<double>> jobs;
  jobs.reserve(static_cast<std::size_t>(wanted));
  for (int i = 0; i < wanted; ++i)
    jobs.push_back(std::async(std::launch::async, [&t, i] { return kth_eigenvalue(t, i); }));

  OracleResult r;
  r.grid = grid;
  r.truncated = wanted < k;
  for (auto& j : jobs) r.eigenvalues.push_back(j.get());
  return r;
}

OracleResult solve_with_richardson(const std::function<double(double)>& V, double M,
                                   const GridSpec& coarse, int k) {
  GridSpec fine = coarse;
  fine.points = 2 * coarse.points;
  OracleResult rc = solve_bound_states(V, M, coarse, k);
  OracleResult rf = solve_bound_states(V, M, fine, k);

  const double r = coarse.spacing() / fine.spacing();
  const double r2 = r * r;
  const std::size_t common = std::min(rc.eigenvalues.size(), rf.eigenvalues.size());
  std::vector<double> extrapolated(common);
  for (std::size_t i = 0; i < common; ++i)
    extrapolated[i] = (r2 * rf.eigenvalues[i] - rc.eigenvalues[i]) / (r2 - 1.0);

  rf.richardson = std::move(extrapolated);
  rf.truncated = rf.truncated || rc.truncated;
  return rf;
}

std::function<double(double)> morse_potential(const MoleculeParams& mol) {
  const double D = mol.D;
  const double beta = mol.beta();
  return [D, beta](double x) {
    const double e = std::exp(-beta * x);
    return D * e * e - 2.0 * D * e;
  };
}

GridSpec default_grid(const MoleculeParams& mol) {
  return GridSpec{-1.0 * mol.r0, 12.0 * mol.r0, 8000};
}

std::vector<ComparisonRow> compare_with_closed_form(const MoleculeParams& mol,
                                                    std::span<const int> levels,
                                                    std::optional<GridSpec> grid) {
  mol.validate();
  const PotentialSpec spec = mol.potential();
  const DerivedParams p = derive_params(spec, Branch::morse_flip);

  std::vector<ComparisonRow> rows;
  int highest = -1;
  for (int n : levels) {
    ComparisonRow row;
    row.n = n;
    row.bound = n >= 0 && epsilon_of(p, n) > 0.0;
    if (row.bound) {
      row.closed_form = energy_level(spec, Branch::morse_flip, n).energy;
      highest = std::max(highest, n);
    }
    rows.push_back(row);
  }
  if (highest < 0) return rows;

  const GridSpec g = grid.value_or(default_grid(mol));
  const OracleResult r = solve_with_richardson(morse_potential(mol), mol.M(), g, highest + 1);
  const std::vector<double>& ev = *r.richardson;
  for (ComparisonRow& row : rows) {
    if (!row.bound) continue;
    if (static_cast<std::size_t>(row.n) >= ev.size()) {
      row.bound = false;  // the grid does not hold this level
      continue;
    }
    row.oracle = ev[static_cast<std::size_t>(row.n)];
    row.difference = row.oracle - row.closed_form;
  }
  return rows;
}

}  // namespace expot::oracle
