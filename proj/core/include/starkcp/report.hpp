#pragma once

#include <exception>
#include <filesystem>
#include <map>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "starkcp/oracle.hpp"
#include "starkcp/potentials.hpp"
#include "starkcp/scenario.hpp"

namespace starkcp::report {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  ///< ran to completion, some PASS/FAIL check failed
inline constexpr int kExitParse = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitNumeric = 4;

enum class Format { csv, json };
Format parse_format(std::string_view token);  // ParseError on unknown

/// Shortest decimal that round-trips to the same double.
std::string format_number(double v);

/// One breakdown per radius, computed on worker threads and returned in input
/// order. threads = 0 picks hardware_concurrency.
std::vector<PotentialBreakdown> sweep(const HydrogenContext& ctx, double epsA, double epsB,
                                      std::span<const double> radii, double lamb_shift_energy,
                                      unsigned threads = 0);

/// RFC 4180 with a header row; every column name carries its SI unit.
std::string to_csv(std::span<const PotentialBreakdown> rows);
std::vector<std::string> csv_header();

struct Check {
  std::string name;
  double value = 0.0;
  double target = 0.0;     ///< reference value or range centre
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  nlohmann::json details = nlohmann::json::object();

  bool all_pass() const;
  std::string text() const;  ///< one PASS/FAIL line per check
  nlohmann::json json() const;
};

/// epsA = epsB = 1e8 V/m, r = 1e-6 m, hbar delta_omega_L = 1e-6 eV. Passes when
/// r6 in [1e-7, 1e-5], r8 in [1e-22, 1e-19], threshold in [10^3.5, 10^4.5] V/m.
Report reproduce_paper(const ConstantsSet& constants = default_constants());

struct VerifyOptions {
  oracle::RegulatedIntegralConfig config;
  /// Replaces the target of the named check (test mode), e.g. {"M alpha_33", 21}.
  std::map<std::string, double> injected_targets;
  double m_tolerance = 1e-6;
  double d_tolerance = 1e-5;
  double tensor_tolerance = 1e-6;
  double dipole_tolerance = 1e-10;  ///< relative to q a0
};

/// One-photon tensor, M and D coefficients, and closed-form vs radial-oracle
/// dipole elements over n <= 2.
Report verify_oracles(const VerifyOptions& options = {}, const ConstantsSet& constants = default_constants());

/// Write to a sibling temporary and rename over the target.
void write_atomic(const std::filesystem::path& path, const std::string& content);

/// Exit code for an in-flight exception: ParseError 2; InvariantViolation,
/// DomainError, ConfigError, CapabilityError, DegeneracyError 3; NumericError 4.
int exit_code_for(std::exception_ptr e);
nlohmann::json error_record(std::exception_ptr e);

struct Artifact {
  std::string filename;
  std::string content;
};

struct RunOutcome {
  int exit_code = kExitOk;
  std::vector<std::filesystem::path> written;
  nlohmann::json error;  ///< null on success
};

/// Computes every requested artifact, then writes them all. Nothing is written
/// if any computation throws.
std::vector<Artifact> build_artifacts(const Scenario& s, Format format, bool* checks_passed = nullptr);
RunOutcome run_scenario(const Scenario& s, const std::filesystem::path& out_dir, Format format = Format::json);
RunOutcome run_scenario_file(const std::filesystem::path& path, const std::filesystem::path& out_dir,
                             Format format = Format::json);

}  // namespace starkcp::report
