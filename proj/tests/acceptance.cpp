// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "expot/oracle.hpp"
#include "expot/registry.hpp"
#include "expot/verify.hpp"

using namespace expot;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string summary;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Every check from the given suites, optionally filtered by name.
Outcome suites(const MoleculeRegistry& reg, const std::vector<std::string>& names,
               const std::function<bool(const verify::Check&)>& keep = nullptr) {
  Outcome o{true, ""};
  int count = 0;
  for (const auto& s : names) {
    for (const auto& c : verify::run_suite(s, reg)) {
      if (keep && !keep(c)) continue;
      ++count;
      if (!c.pass) {
        o.pass = false;
        o.summary += " [" + c.name + ": " + fmt("%.3g", c.measured) + " " + verify::to_string(c.relation) +
                     " " + fmt("%.3g", c.tolerance) + " fails]";
      }
    }
  }
  o.summary = std::to_string(count) + " checks" + (o.summary.empty() ? ", all within tolerance" : o.summary);
  return o;
}

Outcome published_eigenvalues(const MoleculeRegistry& reg) {
  const auto t0 = Clock::now();
  const auto rows = verify::table1(reg);
  const double elapsed = seconds_since(t0);
  double worst = 0.0;
  bool all = rows.size() == 16;
  for (const auto& r : rows) {
    worst = std::max(worst, r.abs_diff);
    all = all && r.pass;
  }
  const bool fast = elapsed < 1.0;
  return {all && fast, std::to_string(rows.size()) + " values, max |dE| = " + fmt("%.3g", worst) +
                           " eV (tol 5e-3), " + fmt("%.4f", elapsed) + " s (limit 1 s)"};
}

Outcome oracle_cross_validation(const MoleculeRegistry& reg) {
  const auto t0 = Clock::now();
  double worst = 0.0;
  bool all = true;
  const std::vector<std::pair<std::string, std::vector<int>>> cases = {{"H2", {0, 2, 4}}, {"LiH", {0, 2}}};
  for (const auto& [name, levels] : cases) {
    const MoleculeParams* mol = reg.find(name);
    if (!mol) return {false, "missing molecule " + name};
    for (const auto& r : oracle::compare_with_closed_form(*mol, levels)) {
      all = all && r.bound && std::abs(r.difference) <= 2e-3;
      worst = std::max(worst, std::abs(r.difference));
    }
  }
  const double elapsed = seconds_since(t0);
  return {all && elapsed < 60.0, "max |dE| = " + fmt("%.3g", worst) + " eV (tol 2e-3), " +
                                     fmt("%.2f", elapsed) + " s (limit 60 s)"};
}

}  // namespace

int main() {
  const MoleculeRegistry reg = MoleculeRegistry::builtin();
  const auto is_self_test = [](const verify::Check& c) {
    return c.name.find("vs closed form") == std::string::npos;
  };

  struct Criterion {
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"published eigenvalues reproduced", [&] { return published_eigenvalues(reg); }},
      {"finite-difference cross-validation", [&] { return oracle_cross_validation(reg); }},
      {"ODE residual and perturbed-eps control", [&] { return suites(reg, {"ode"}); }},
      {"normalization, quadrature and closed form", [&] { return suites(reg, {"norm"}); }},
      {"series identities", [&] { return suites(reg, {"series"}); }},
      {"Laplace-space equation and printed-coefficient control", [&] { return suites(reg, {"laplace"}); }},
      {"ladder algebra and measured structure constants", [&] { return suites(reg, {"ladder", "su2"}); }},
      {"oracle self-tests: box levels, O(h^2) convergence",
       [&] { return suites(reg, {"oracle"}, is_self_test); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] %zu. %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].title, o.summary.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
