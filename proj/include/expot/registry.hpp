#pragma once

#include <array>
#include <map>
#include <string>

#include "expot/core.hpp"

namespace expot {

/// Molecules by name. The built-in set holds H2 and LiH; a registry file
/// (JSON object: name -> {D_eV, r0_angstrom, alpha, E0_eV, mass_amu?})
/// overrides built-ins by name and may add new ones.
class MoleculeRegistry {
 public:
  static MoleculeRegistry builtin();

  /// Throws DomainError on unreadable files, malformed JSON or invalid values.
  void load_file(const std::string& path);

  const MoleculeParams* find(const std::string& name) const;
  const std::map<std::string, MoleculeParams>& entries() const { return entries_; }
  const std::string& source() const { return source_; }

 private:
  std::map<std::string, MoleculeParams> entries_;
  std::string source_ = "built-in";
};

struct PublishedValue {
  const char* molecule;
  Branch branch;
  int n;
  double energy;  // eV
};

/// The 16 published eigenvalues: {H2, LiH} x {exp, morse} x n in {0, 2, 4, 10}.
const std::array<PublishedValue, 16>& published_table();

inline constexpr double kTableTolerance = 5e-3;  // eV

}  // namespace expot
