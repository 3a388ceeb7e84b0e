#include "expot/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "expot/oracle.hpp"
#include "expot/registry.hpp"
#include "expot/spectrum.hpp"
#include "expot/states.hpp"
#include "expot/verify.hpp"

namespace expot::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr double kOracleTolerance = 2e-3;  // eV

struct Options {
  std::string format = "csv";
  std::string registry;
  std::string molecule = "H2";
  std::string branch = "morse";
  std::vector<int> levels;
  std::vector<std::string> suites;
  int n = 0;
  double x_min = -0.5;
  double x_max = 6.0;
  int points = 500;
  int oracle_points = 8000;
  bool normalized = false;
};

// Rows are ordered objects; CSV prints `columns` in order and skips other keys.
struct Report {
  std::string command;
  ojson inputs = ojson::object();
  std::vector<std::string> columns;
  std::vector<ojson> rows;
  bool pass = true;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

std::string csv_field(const ojson& v) {
  if (v.is_null()) return "";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return format_double(v.get<double>());
  const std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// JSON has no inf/nan; emit null instead.
ojson number(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

void render(const Report& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ojson doc;
    doc["command"] = r.command;
    doc["inputs"] = r.inputs;
    doc["rows"] = r.rows;
    doc["pass"] = r.pass;
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) {
      const auto it = row.find(r.columns[i]);
      out << (i ? "," : "") << (it == row.end() ? "" : csv_field(*it));
    }
    out << '\n';
  }
}

MoleculeRegistry load_registry(const Options& o) {
  MoleculeRegistry reg = MoleculeRegistry::builtin();
  if (!o.registry.empty()) {
    try {
      reg.load_file(o.registry);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return reg;
}

const MoleculeParams& molecule(const MoleculeRegistry& reg, const std::string& name) {
  const MoleculeParams* m = reg.find(name);
  if (!m) throw UsageError("unknown molecule '" + name + "'");
  return *m;
}

Branch branch(const std::string& s) {
  const auto b = parse_branch(s);
  if (!b) throw UsageError("unknown branch '" + s + "'");
  return *b;
}

ojson base_inputs(const MoleculeRegistry& reg) {
  ojson in;
  in["registry"] = reg.source();
  return in;
}

Report cmd_spectrum(const Options& o) {
  const auto reg = load_registry(o);
  const auto& mol = molecule(reg, o.molecule);
  const Branch b = branch(o.branch);
  const std::vector<int> levels = o.levels.empty() ? std::vector<int>{0, 2, 4, 10} : o.levels;
  for (int n : levels)
    if (n < 0) throw UsageError("levels must be non-negative");

  Report r;
  r.command = "spectrum";
  r.inputs = base_inputs(reg);
  r.inputs["molecule"] = mol.name;
  r.inputs["branch"] = to_string(b);
  r.inputs["levels"] = levels;
  r.columns = {"n", "E_eV", "epsilon", "physical"};
  for (int n : levels) {
    const auto lvl = energy_level(mol.potential(), b, n);
    ojson row;
    row["n"] = n;
    row["E_eV"] = lvl.energy;
    row["epsilon"] = lvl.epsilon;
    row["physical"] = lvl.physical;
    r.rows.push_back(row);
  }
  return r;
}

Report cmd_table1(const Options& o) {
  const auto reg = load_registry(o);
  std::vector<verify::TableRow> rows;
  try {
    rows = verify::table1(reg);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  Report r;
  r.command = "table1";
  r.inputs = base_inputs(reg);
  r.inputs["tolerance_eV"] = kTableTolerance;
  r.columns = {"molecule", "branch", "n", "E_computed", "E_published", "abs_diff"};
  for (const auto& t : rows) {
    ojson row;
    row["molecule"] = t.molecule;
    row["branch"] = to_string(t.branch);
    row["n"] = t.n;
    row["E_computed"] = number(t.computed);
    row["E_published"] = t.published;
    row["abs_diff"] = number(t.abs_diff);
    row["pass"] = t.pass;
    r.rows.push_back(row);
    r.pass = r.pass && t.pass;
  }
  return r;
}

Report cmd_verify(const Options& o) {
  const auto reg = load_registry(o);
  const auto& all = verify::suite_names();
  const std::vector<std::string> chosen = o.suites.empty() ? all : o.suites;
  for (const auto& s : chosen)
    if (std::find(all.begin(), all.end(), s) == all.end()) throw UsageError("unknown suite '" + s + "'");

  Report r;
  r.command = "verify";
  r.inputs = base_inputs(reg);
  r.inputs["suites"] = chosen;
  r.columns = {"suite", "name", "measured", "relation", "tolerance", "pass"};
  for (const auto& s : chosen) {
    for (const auto& c : verify::run_suite(s, reg)) {
      r.rows.push_back(ojson::parse(verify::to_json(c).dump()));
      r.pass = r.pass && c.pass;
    }
  }
  return r;
}

Report cmd_wavefn(const Options& o) {
  const auto reg = load_registry(o);
  const auto& mol = molecule(reg, o.molecule);
  const Branch b = branch(o.branch);
  if (o.n < 0) throw UsageError("--n must be non-negative");
  if (o.points < 2) throw UsageError("--points must be at least 2");
  if (!(o.x_min < o.x_max)) throw UsageError("--x-min must be below --x-max");

  const auto p = derive_params(mol.potential(), b);
  const bool physical = epsilon_of(p, o.n) > 0.0;
  // throws DivergentNormError for formal states when normalization is demanded
  const auto s = build_state(p, o.n, StateConvention::physical(),
                             physical || o.normalized ? Normalize::yes : Normalize::no);
  // the bound realization decays as x grows: z = e^{-beta x}
  const double zb = b == Branch::morse_flip ? -p.beta : p.beta;

  Report r;
  r.command = "wavefn";
  r.inputs = base_inputs(reg);
  r.inputs["molecule"] = mol.name;
  r.inputs["branch"] = to_string(b);
  r.inputs["n"] = o.n;
  r.inputs["x_min_r0"] = o.x_min;
  r.inputs["x_max_r0"] = o.x_max;
  r.inputs["points"] = o.points;
  r.inputs["epsilon"] = s.epsilon;
  r.inputs["normalized"] = s.normalized;
  r.inputs["formal"] = s.formal();
  r.columns = {"x_angstrom", "z", "phi", "formal"};
  for (int i = 0; i < o.points; ++i) {
    const double xr = o.x_min + (o.x_max - o.x_min) * i / (o.points - 1);
    const double x = xr * mol.r0;
    ojson row;
    row["x_angstrom"] = x;
    row["z"] = number(std::exp(zb * x));
    row["phi"] = number(eval_state_x(s, x, zb));
    row["formal"] = s.formal();
    r.rows.push_back(row);
  }
  return r;
}

Report cmd_oracle_compare(const Options& o) {
  const auto reg = load_registry(o);
  const auto& mol = molecule(reg, o.molecule);
  const std::vector<int> levels = o.levels.empty() ? std::vector<int>{0, 2, 4} : o.levels;
  auto grid = oracle::default_grid(mol);
  grid.points = o.oracle_points;
  try {
    grid.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }

  Report r;
  r.command = "oracle-compare";
  r.inputs = base_inputs(reg);
  r.inputs["molecule"] = mol.name;
  r.inputs["branch"] = "morse";
  r.inputs["levels"] = levels;
  r.inputs["x_min_angstrom"] = grid.x_min;
  r.inputs["x_max_angstrom"] = grid.x_max;
  r.inputs["points"] = grid.points;
  r.inputs["tolerance_eV"] = kOracleTolerance;
  r.columns = {"n", "bound", "E_closed", "E_oracle", "difference"};
  for (const auto& c : oracle::compare_with_closed_form(mol, levels, grid)) {
    ojson row;
    row["n"] = c.n;
    row["bound"] = c.bound;
    row["E_closed"] = c.bound ? number(c.closed_form) : ojson(nullptr);
    row["E_oracle"] = c.bound ? number(c.oracle) : ojson(nullptr);
    row["difference"] = c.bound ? number(c.difference) : ojson(nullptr);
    r.rows.push_back(row);
    if (c.bound) r.pass = r.pass && std::abs(c.difference) <= kOracleTolerance;
  }
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Closed-form spectra and eigenstates of exponential-type diatomic potentials", "expot"};
  app.require_subcommand(1);

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--registry", o.registry, "JSON molecule registry overriding the built-ins");
  };
  auto with_molecule = [&o](CLI::App* sub) {
    sub->add_option("--molecule", o.molecule, "Molecule name");
  };
  auto with_branch = [&o](CLI::App* sub) {
    sub->add_option("--branch", o.branch, "exp or morse")->check(CLI::IsMember({"exp", "morse"}));
  };

  auto* spectrum = app.add_subcommand("spectrum", "Closed-form energy levels");
  common(spectrum);
  with_molecule(spectrum);
  with_branch(spectrum);
  spectrum->add_option("--levels", o.levels, "Comma-separated levels")->delimiter(',');

  auto* table1 = app.add_subcommand("table1", "Published eigenvalues against the closed form");
  common(table1);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  common(verify);
  verify->add_option("--suites", o.suites, "Comma-separated subset of ode,series,laplace,norm,ladder,su2,oracle")
      ->delimiter(',');

  auto* wavefn = app.add_subcommand("wavefn", "Sample an eigenfunction on an x grid");
  common(wavefn);
  with_molecule(wavefn);
  with_branch(wavefn);
  wavefn->add_option("--n", o.n, "Level");
  wavefn->add_option("--x-min", o.x_min, "Window start in units of r0");
  wavefn->add_option("--x-max", o.x_max, "Window end in units of r0");
  wavefn->add_option("--points", o.points, "Sample count");
  wavefn->add_flag("--normalized", o.normalized, "Fail unless the state is normalizable");

  auto* compare = app.add_subcommand("oracle-compare", "Finite-difference levels against the closed form");
  common(compare);
  with_molecule(compare);
  compare->add_option("--levels", o.levels, "Comma-separated levels")->delimiter(',');
  compare->add_option("--points", o.oracle_points, "Coarse grid points (the fine grid doubles it)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    Report r;
    if (spectrum->parsed()) r = cmd_spectrum(o);
    else if (table1->parsed()) r = cmd_table1(o);
    else if (verify->parsed()) r = cmd_verify(o);
    else if (wavefn->parsed()) r = cmd_wavefn(o);
    else r = cmd_oracle_compare(o);
    render(r, o.format, out);
    if (!r.pass) {
      err << "expot: " << r.command << ": one or more checks failed\n";
      return kExitFailure;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "expot: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DivergentNormError& e) {
    err << "expot: " << e.what() << '\n';
    return kExitFailure;
  } catch (const DomainError& e) {
    err << "expot: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "expot: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace expot::cli
