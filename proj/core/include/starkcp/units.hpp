#pragma once

#include <map>
#include <string>
#include <string_view>

namespace starkcp {

/// Physical constants in SI. Every formula in the library is evaluated in SI;
/// conversions happen only at the input/output boundary.
struct ConstantsSet {
  double hbar;      ///< J s
  double c;         ///< m/s
  double epsilon0;  ///< F/m
  double q;         ///< elementary charge, C
  double a0;        ///< Bohr radius, m
  double E1;        ///< hydrogen ground-state energy, J (negative)

  double hbar_c() const { return hbar * c; }
  /// One hartree, taken as 2|E1| (non-relativistic hydrogen).
  double hartree() const { return 2.0 * (E1 < 0 ? -E1 : E1); }
  /// Dipole scale q*a0 (C m).
  double qa0() const { return q * a0; }

  /// Throws ConfigError unless E1 < 0 and all other constants are finite and > 0.
  void validate() const;

  bool operator==(const ConstantsSet&) const = default;
};

/// CODATA 2018 values; E1 = -13.605693122994 eV.
ConstantsSet default_constants();

/// Names accepted by with_override / apply_overrides: hbar, c, epsilon0, q, a0, E1.
ConstantsSet with_override(ConstantsSet base, std::string_view name, double value_si);
ConstantsSet apply_overrides(ConstantsSet base, const std::map<std::string, double>& overrides);

enum class EnergyUnit { joule, electronvolt, hartree };

/// Accepts "J", "eV", "hartree" (also "Ha", "Eh"). Unknown token -> ConfigError.
EnergyUnit parse_energy_unit(std::string_view token);
std::string_view to_string(EnergyUnit unit);

double energy_convert(double value, EnergyUnit from, EnergyUnit to,
                      const ConstantsSet& constants = default_constants());
double energy_convert(double value, std::string_view from, std::string_view to,
                      const ConstantsSet& constants = default_constants());

}  // namespace starkcp
