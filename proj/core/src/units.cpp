#include "starkcp/units.hpp"

#include <cmath>

#include "starkcp/error.hpp"

namespace starkcp {

namespace {

constexpr double kElectronVolt = 1.602176634e-19;  // exact

}  // namespace

void ConstantsSet::validate() const {
  auto positive = [](std::string_view name, double v) {
    if (!std::isfinite(v) || v <= 0.0)
      throw ConfigError("constant '" + std::string(name) + "' must be finite and > 0");
  };
  positive("hbar", hbar);
  positive("c", c);
  positive("epsilon0", epsilon0);
  positive("q", q);
  positive("a0", a0);
  if (!std::isfinite(E1) || E1 >= 0.0)
    throw ConfigError("constant 'E1' must be finite and < 0 (bound state)");
}

ConstantsSet default_constants() {
  return ConstantsSet{
      .hbar = 1.054571817e-34,
      .c = 299792458.0,
      .epsilon0 = 8.8541878128e-12,
      .q = 1.602176634e-19,
      .a0 = 5.29177210903e-11,
      .E1 = -13.605693122994 * kElectronVolt,
  };
}

ConstantsSet with_override(ConstantsSet base, std::string_view name, double value_si) {
  if (name == "hbar")
    base.hbar = value_si;
  else if (name == "c")
    base.c = value_si;
  else if (name == "epsilon0")
    base.epsilon0 = value_si;
  else if (name == "q")
    base.q = value_si;
  else if (name == "a0")
    base.a0 = value_si;
  else if (name == "E1")
    base.E1 = value_si;
  else
    throw ConfigError("unknown constant '" + std::string(name) + "'");
  base.validate();
  return base;
}

ConstantsSet apply_overrides(ConstantsSet base, const std::map<std::string, double>& overrides) {
  for (const auto& [name, value] : overrides) base = with_override(base, name, value);
  return base;
}

EnergyUnit parse_energy_unit(std::string_view token) {
  if (token == "J") return EnergyUnit::joule;
  if (token == "eV") return EnergyUnit::electronvolt;
  if (token == "hartree" || token == "Ha" || token == "Eh") return EnergyUnit::hartree;
  throw ConfigError("unknown energy unit '" + std::string(token) + "'");
}

std::string_view to_string(EnergyUnit unit) {
  switch (unit) {
    case EnergyUnit::joule:
      return "J";
    case EnergyUnit::electronvolt:
      return "eV";
    case EnergyUnit::hartree:
      return "hartree";
  }
  return "?";
}

namespace {

double joules_per(EnergyUnit unit, const ConstantsSet& k) {
  switch (unit) {
    case EnergyUnit::joule:
      return 1.0;
    case EnergyUnit::electronvolt:
      return k.q;
    case EnergyUnit::hartree:
      return k.hartree();
  }
  return 1.0;
}

}  // namespace

double energy_convert(double value, EnergyUnit from, EnergyUnit to, const ConstantsSet& constants) {
  if (from == to) return value;
  return value * (joules_per(from, constants) / joules_per(to, constants));
}

double energy_convert(double value, std::string_view from, std::string_view to,
                      const ConstantsSet& constants) {
  return energy_convert(value, parse_energy_unit(from), parse_energy_unit(to), constants);
}

}  // namespace starkcp
