#include <array>
#include <fstream>

#include <json.hpp>

#include "expot/registry.hpp"

namespace expot {

MoleculeRegistry MoleculeRegistry::builtin() {
  MoleculeRegistry r;
  r.entries_["H2"] = MoleculeParams{"H2", 4.7446, 0.7416, 1.440558, 1.508343932e-2, 0.50391};
  r.entries_["LiH"] = MoleculeParams{"LiH", 2.515287, 1.5956, 1.7998368, 1.865528199e-3, 0.8801221};
  return r;
}

void MoleculeRegistry::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open registry file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("registry file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) throw DomainError("registry file must hold a JSON object");

  for (const auto& [name, v] : doc.items()) {
    auto number = [&](const char* key) {
      if (!v.contains(key) || !v[key].is_number())
        throw DomainError("registry entry '" + name + "': missing numeric field '" + key + "'");
      return v[key].get<double>();
    };
    MoleculeParams m;
    m.name = name;
    m.D = number("D_eV");
    m.r0 = number("r0_angstrom");
    m.alpha = number("alpha");
    m.E0 = number("E0_eV");
    if (v.contains("mass_amu")) m.mass_amu = number("mass_amu");
    try {
      m.validate();
    } catch (const DomainError& e) {
      throw DomainError("registry entry '" + name + "': " + e.what());
    }
    entries_[name] = m;
  }
  source_ = path;
}

const MoleculeParams* MoleculeRegistry::find(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

const std::array<PublishedValue, 16>& published_table() {
  // Published as magnitudes of negative energies; each entry is computed from
  // the same E0/alpha constants as the built-in registry.
  static const std::array<PublishedValue, 16> table = {{
      {"H2", Branch::exponential, 0, -5.02101},
      {"H2", Branch::exponential, 2, -6.20491},
      {"H2", Branch::exponential, 4, -7.51402},
      {"H2", Branch::exponential, 10, -12.1926},
      {"H2", Branch::morse_flip, 0, -4.47601},
      {"H2", Branch::morse_flip, 2, -3.47992},
      {"H2", Branch::morse_flip, 4, -2.60903},
      {"H2", Branch::morse_flip, 10, -0.74759},
      {"LiH", Branch::exponential, 0, -2.60322},
      {"LiH", Branch::exponential, 2, -2.97007},
      {"LiH", Branch::exponential, 4, -3.36109},
      {"LiH", Branch::exponential, 10, -4.67918},
      {"LiH", Branch::morse_flip, 0, -2.42886},
      {"LiH", Branch::morse_flip, 2, -2.09828},
      {"LiH", Branch::morse_flip, 4, -1.79186},
      {"LiH", Branch::morse_flip, 10, -1.01766},
  }};
  return table;
}

}  // namespace expot
