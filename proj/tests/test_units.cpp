#include <doctest.h>

#include "starkcp/error.hpp"
#include "starkcp/units.hpp"
#include "support.hpp"

using namespace starkcp;
using starkcp::test::rel;

TEST_CASE("default constants are CODATA 2018") {
  const ConstantsSet k = default_constants();
  CHECK(k.hbar == 1.054571817e-34);
  CHECK(k.c == 299792458.0);
  CHECK(k.q == 1.602176634e-19);
  CHECK(rel(k.a0, 5.29177210903e-11) < 1e-15);
  CHECK(rel(k.E1 / k.q, -13.605693122994) < 1e-15);
  CHECK(k.hartree() == 2.0 * -k.E1);
  CHECK(k.qa0() == k.q * k.a0);
  CHECK_NOTHROW(k.validate());
}

TEST_CASE("overrides") {
  const ConstantsSet k = with_override(default_constants(), "a0", 6e-11);
  CHECK(k.a0 == 6e-11);
  CHECK(k.c == default_constants().c);
  CHECK_THROWS_AS(with_override(default_constants(), "speed_of_light", 1.0), ConfigError);
  const ConstantsSet m = apply_overrides(default_constants(), {{"c", 3e8}, {"hbar", 1e-34}});
  CHECK(m.c == 3e8);
  CHECK(m.hbar == 1e-34);
  CHECK_THROWS_AS(with_override(default_constants(), "E1", 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(with_override(default_constants(), "q", -1.0).validate(), ConfigError);
}

TEST_CASE("energy units") {
  CHECK(parse_energy_unit("J") == EnergyUnit::joule);
  CHECK(parse_energy_unit("eV") == EnergyUnit::electronvolt);
  CHECK(parse_energy_unit("hartree") == EnergyUnit::hartree);
  CHECK(parse_energy_unit("Ha") == EnergyUnit::hartree);
  CHECK(parse_energy_unit("Eh") == EnergyUnit::hartree);
  CHECK_THROWS_AS(parse_energy_unit("kcal"), ConfigError);

  CHECK(rel(energy_convert(1.0, "hartree", "eV"), 27.211386245988) < 1e-14);
  CHECK(rel(energy_convert(1.0, "eV", "J"), 1.602176634e-19) < 1e-15);
  for (double v : {1e-30, -2.5, 7.0}) {
    CHECK(rel(energy_convert(energy_convert(v, EnergyUnit::joule, EnergyUnit::hartree), EnergyUnit::hartree,
                             EnergyUnit::joule),
              v) < 1e-15);
  }
  CHECK(to_string(EnergyUnit::electronvolt) == "eV");
}
