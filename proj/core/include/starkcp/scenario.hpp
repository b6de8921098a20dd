#pragma once

#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "starkcp/error.hpp"
#include "starkcp/units.hpp"

namespace starkcp {

/// Malformed scenario text: bad JSON, wrong types, unknown keys.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A well-formed scenario whose values break an invariant. field() names it.
class InvariantViolation : public Error {
 public:
  InvariantViolation(std::string field, const std::string& what) : Error(what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

enum class OutputKind { breakdown, sweep, verify, reproduce };

std::string_view to_string(OutputKind k);
OutputKind parse_output_kind(std::string_view token);  // ParseError on unknown

/// JSON object keys match the field names. Energies in constants_override are
/// SI (J for E1).
struct Scenario {
  double epsilon_A = 0.0;  ///< V/m
  double epsilon_B = 0.0;  ///< V/m
  double r_min = 1e-6;     ///< m
  double r_max = 1e-6;     ///< m
  int r_points = 1;
  int basis_max_n = 2;
  std::map<std::string, double> constants_override;
  std::vector<OutputKind> outputs = {OutputKind::breakdown};
  double lamb_shift_eV = 1e-6;  ///< hbar delta_omega_L for the vacuum estimator

  /// Throws InvariantViolation.
  void validate() const;
  ConstantsSet constants() const;
  /// Log-spaced separations (m).
  std::vector<double> radii() const;
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::filesystem::path& path);
nlohmann::json to_json(const Scenario& s);

}  // namespace starkcp
