#include <doctest.h>

#include <cmath>
#include <random>

#include "expot/core.hpp"
#include "expot/registry.hpp"

using namespace expot;

namespace {

MoleculeParams h2() { return *MoleculeRegistry::builtin().find("H2"); }

}  // namespace

TEST_CASE("derive_params on H2") {
  const auto mol = h2();
  const auto exp = derive_params(mol.potential(), Branch::exponential);
  const auto morse = derive_params(mol.potential(), Branch::morse_flip);

  // A = -2 sqrt(2 D / E0) / alpha, evaluated independently
  const double hand = -2.0 * std::sqrt(2.0 * mol.D / mol.E0) / mol.alpha;
  CHECK(exp.A == doctest::Approx(hand).epsilon(1e-14));
  CHECK(exp.A == doctest::Approx(-34.82281349960662).epsilon(1e-13));
  CHECK(morse.A == doctest::Approx(34.82281349960662).epsilon(1e-13));
  CHECK(exp.a1 == morse.a1);
  CHECK(exp.a1 == doctest::Approx(std::sqrt(mol.M() * mol.D) / mol.beta()));
  CHECK(exp.a2sq == -morse.a2sq);
}

TEST_CASE("V2 = 0 gives no cross term") {
  const PotentialSpec spec{1.0, 0.0, 1.0, 2.0};
  for (Branch b : {Branch::exponential, Branch::morse_flip}) {
    const auto p = derive_params(spec, b);
    CHECK(p.a2sq == 0.0);
    CHECK(p.A == 0.0);
    CHECK_FALSE(std::signbit(p.A));
  }
}

TEST_CASE("derive_params rejects bad inputs by field") {
  auto msg = [](PotentialSpec s) {
    try {
      derive_params(s, Branch::exponential);
    } catch (const DomainError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(msg({0.0, 1.0, 1.0, 1.0}).find("V1") != std::string::npos);
  CHECK(msg({1.0, 1.0, -1.0, 1.0}).find("beta") != std::string::npos);
  CHECK(msg({1.0, 1.0, 1.0, 0.0}).find("M") != std::string::npos);
  CHECK(msg({1.0, NAN, 1.0, 1.0}).find("V2") != std::string::npos);
}

TEST_CASE("epsilon_of examples") {
  DerivedParams p;
  p.A = 34.8246;
  CHECK(epsilon_of(p, 0) == doctest::Approx(16.9123));
  p.A = 3.0;
  CHECK(epsilon_of(p, 1) == 0.0);
  p.A = -34.8246;
  CHECK(epsilon_of(p, 0) == doctest::Approx(-17.9123));
}

TEST_CASE("bound_state_count") {
  DerivedParams p;
  p.A = 34.8246;
  CHECK(bound_state_count(p) == 17);
  p.A = 0.0;
  CHECK(bound_state_count(p) == 0);
  p.A = 3.5;
  CHECK(bound_state_count(p) == 2);
  p.A = 3.0;  // eps_1 = 0 is not bound
  CHECK(bound_state_count(p) == 1);
  p.A = 1.0;
  CHECK(bound_state_count(p) == 0);

  const auto morse = derive_params(h2().potential(), Branch::morse_flip);
  CHECK(bound_state_count(morse) == 17);
  CHECK(epsilon_of(morse, 16) > 0.0);
  CHECK(epsilon_of(morse, 17) < 0.0);
}

TEST_CASE("properties over random specs") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> pos(0.1, 10.0);
  std::uniform_real_distribution<double> any(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const PotentialSpec spec{pos(rng), any(rng), pos(rng), pos(rng)};
    const auto e = derive_params(spec, Branch::exponential);
    const auto m = derive_params(spec, Branch::morse_flip);
    CHECK(e.a1 > 0.0);
    CHECK(e.a1 == m.a1);
    CHECK(e.A == -m.A);
    CHECK(e.A == -e.a2sq / e.a1);
    for (int n = 0; n < 20; ++n)
      CHECK(std::abs(epsilon_of(e, n) - epsilon_of(e, n + 1) - 1.0) <=
            1e-14 * std::max(1.0, std::abs(epsilon_of(e, n))));
    const int count = bound_state_count(m);
    for (int n = 0; n < count; ++n) CHECK(epsilon_of(m, n) > 0.0);
    CHECK_FALSE(epsilon_of(m, count) > 0.0);
  }
}

TEST_CASE("molecule constants are consistent with their masses") {
  const auto reg = MoleculeRegistry::builtin();
  for (const auto& [name, mol] : reg.entries()) {
    CAPTURE(name);
    CHECK_NOTHROW(mol.validate());
    REQUIRE(mol.mass_consistency().has_value());
    CHECK(*mol.mass_consistency() <= 1e-3);
    CHECK(mol.M() > 0.0);
    CHECK(mol.beta() == doctest::Approx(mol.alpha / mol.r0));
  }
  MoleculeParams bad = h2();
  bad.alpha = -1.0;
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("branch names") {
  CHECK(parse_branch("exp") == Branch::exponential);
  CHECK(parse_branch("morse") == Branch::morse_flip);
  CHECK_FALSE(parse_branch("up").has_value());
  CHECK(to_string(Branch::morse_flip) == "morse");
}
