#pragma once

// Named, tolerance-pinned checks grouped into suites. Each suite recomputes
// its quantities from scratch; the CLI and the acceptance runner both report
// from here.

#include <string>
#include <vector>

#include <json.hpp>

#include "expot/registry.hpp"

namespace expot::verify {

enum class Relation { at_most, above };

struct Check {
  std::string suite;
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  Relation relation = Relation::at_most;
  bool pass = false;
  nlohmann::json detail = nlohmann::json::object();
};

/// ode, series, laplace, norm, ladder, su2, oracle
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const MoleculeRegistry& registry);

struct TableRow {
  std::string molecule;
  Branch branch = Branch::exponential;
  int n = 0;
  double computed = 0.0;
  double published = 0.0;
  double abs_diff = 0.0;
  bool pass = false;
};

/// Closed-form energies for every published value, using the molecule
/// constants from `registry`. Throws DomainError if a molecule is missing.
std::vector<TableRow> table1(const MoleculeRegistry& registry);

std::string to_string(Relation r);
nlohmann::json to_json(const Check& c);

}  // namespace expot::verify
