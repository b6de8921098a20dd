#include "starkcp/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "starkcp/fitting.hpp"

namespace starkcp {

std::string_view to_string(OutputKind k) {
  switch (k) {
    case OutputKind::breakdown: return "breakdown";
    case OutputKind::sweep: return "sweep";
    case OutputKind::verify: return "verify";
    case OutputKind::reproduce: return "reproduce";
  }
  return "?";
}

OutputKind parse_output_kind(std::string_view token) {
  for (OutputKind k : {OutputKind::breakdown, OutputKind::sweep, OutputKind::verify, OutputKind::reproduce})
    if (token == to_string(k)) return k;
  throw ParseError("unknown output kind '" + std::string(token) + "'");
}

void Scenario::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(epsilon_A) || epsilon_A < 0.0) throw InvariantViolation("epsilon_A", "epsilon_A must be finite and >= 0");
  if (!finite(epsilon_B) || epsilon_B < 0.0) throw InvariantViolation("epsilon_B", "epsilon_B must be finite and >= 0");
  if (!finite(r_min) || !(r_min > 0.0)) throw InvariantViolation("r_min", "r_min must be finite and > 0");
  if (!finite(r_max) || r_max < r_min) throw InvariantViolation("r_max", "r_max must be finite and >= r_min");
  if (r_points < 1) throw InvariantViolation("r_points", "r_points must be >= 1");
  if (basis_max_n < 2 || basis_max_n > 10) throw InvariantViolation("basis_max_n", "basis_max_n must lie in [2, 10]");
  if (!finite(lamb_shift_eV) || lamb_shift_eV < 0.0)
    throw InvariantViolation("lamb_shift_eV", "lamb_shift_eV must be finite and >= 0");
  try {
    constants();
  } catch (const ConfigError& e) {
    throw InvariantViolation("constants_override", e.what());
  }
}

ConstantsSet Scenario::constants() const {
  ConstantsSet k = apply_overrides(default_constants(), constants_override);
  k.validate();
  return k;
}

std::vector<double> Scenario::radii() const { return fit::logspace(r_min, r_max, r_points); }

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {"epsilon_A",   "epsilon_B",          "r_min",   "r_max",
                                             "r_points",    "basis_max_n",        "outputs", "lamb_shift_eV",
                                             "constants_override"};
  return keys;
}

double number(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string(key) + " must be a number");
  return v.get<double>();
}

int integer(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string(key) + " must be an integer");
  return v.get<int>();
}

}  // namespace

Scenario parse_scenario(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("scenario must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!known_keys().contains(key)) throw ParseError("unknown scenario key '" + key + "'");

  Scenario s;
  if (j.contains("epsilon_A")) s.epsilon_A = number(j, "epsilon_A");
  if (j.contains("epsilon_B")) s.epsilon_B = number(j, "epsilon_B");
  if (j.contains("r_min")) s.r_min = number(j, "r_min");
  s.r_max = j.contains("r_max") ? number(j, "r_max") : s.r_min;
  if (j.contains("r_points")) s.r_points = integer(j, "r_points");
  if (j.contains("basis_max_n")) s.basis_max_n = integer(j, "basis_max_n");
  if (j.contains("lamb_shift_eV")) s.lamb_shift_eV = number(j, "lamb_shift_eV");
  if (j.contains("constants_override")) {
    const auto& o = j.at("constants_override");
    if (!o.is_object()) throw ParseError("constants_override must be an object");
    for (const auto& [key, v] : o.items()) {
      if (!v.is_number()) throw ParseError("constants_override." + key + " must be a number");
      s.constants_override[key] = v.get<double>();
    }
  }
  if (j.contains("outputs")) {
    const auto& o = j.at("outputs");
    if (!o.is_array()) throw ParseError("outputs must be an array");
    s.outputs.clear();
    for (const auto& v : o) {
      if (!v.is_string()) throw ParseError("outputs entries must be strings");
      s.outputs.push_back(parse_output_kind(v.get<std::string>()));
    }
  }
  return s;
}

Scenario parse_scenario_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("scenario is not valid JSON: ") + e.what());
  }
  return parse_scenario(j);
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open scenario file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

nlohmann::json to_json(const Scenario& s) {
  nlohmann::json outputs = nlohmann::json::array();
  for (OutputKind k : s.outputs) outputs.push_back(to_string(k));
  return {{"epsilon_A", s.epsilon_A},
          {"epsilon_B", s.epsilon_B},
          {"r_min", s.r_min},
          {"r_max", s.r_max},
          {"r_points", s.r_points},
          {"basis_max_n", s.basis_max_n},
          {"constants_override", s.constants_override},
          {"outputs", outputs},
          {"lamb_shift_eV", s.lamb_shift_eV}};
}

}  // namespace starkcp
