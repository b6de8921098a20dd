// starkcp command-line front end.
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "starkcp/report.hpp"

namespace fs = std::filesystem;
using namespace starkcp;

namespace {

struct Common {
  std::string scenario_path;
  std::string out_dir;
  std::string format;  // empty: verb default
  std::vector<std::string> overrides;
};

std::map<std::string, double> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("override '" + item + "' is not key=value");
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() - eq - 1) throw ParseError("override '" + item + "' has a non-numeric value");
    out[item.substr(0, eq)] = v;
  }
  return out;
}

Scenario scenario_from(const Common& c) {
  Scenario s = c.scenario_path.empty() ? Scenario{} : load_scenario(c.scenario_path);
  for (const auto& [k, v] : parse_overrides(c.overrides)) s.constants_override[k] = v;
  return s;
}

fs::path default_out_dir(const Common& c) {
  if (!c.out_dir.empty()) return c.out_dir;
  if (const char* env = std::getenv("STARKCP_OUT_DIR"); env && *env) return env;
  return ".";
}

// Writes artifacts into --out when given, otherwise prints them.
int emit(const Common& c, const std::vector<report::Artifact>& artifacts) {
  if (c.out_dir.empty()) {
    for (const auto& a : artifacts) std::cout << a.content;
    return report::kExitOk;
  }
  fs::create_directories(c.out_dir);
  for (const auto& a : artifacts) report::write_atomic(fs::path(c.out_dir) / a.filename, a.content);
  return report::kExitOk;
}

int fail(std::exception_ptr e) {
  const auto rec = report::error_record(e);
  std::cerr << rec.dump() << "\n";
  return rec["exit_code"].get<int>();
}

void add_common(CLI::App* cmd, Common& c, bool with_scenario = true) {
  if (with_scenario) cmd->add_option("--scenario", c.scenario_path, "Scenario JSON file");
  cmd->add_option("--out", c.out_dir, "Output directory (default: print to stdout)");
  cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--override", c.overrides, "Constant override key=value (SI), repeatable");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stark-dressed hydrogen dispersion potentials"};
  app.require_subcommand(1);
  Common common;

  double eps_a = -1.0, eps_b = -1.0, r = -1.0, r_max = -1.0;
  int points = -1;

  auto* bd = app.add_subcommand("breakdown", "All potential terms at one separation (r_min of the scenario)");
  add_common(bd, common);
  bd->add_option("--eps-a", eps_a, "Field at atom A (V/m)");
  bd->add_option("--eps-b", eps_b, "Field at atom B (V/m)");
  bd->add_option("--r", r, "Separation (m)");

  auto* sw = app.add_subcommand("sweep", "Breakdown over a log-spaced separation grid");
  add_common(sw, common);
  sw->add_option("--eps-a", eps_a, "Field at atom A (V/m)");
  sw->add_option("--eps-b", eps_b, "Field at atom B (V/m)");
  sw->add_option("--r-min", r, "Smallest separation (m)");
  sw->add_option("--r-max", r_max, "Largest separation (m)");
  sw->add_option("--points", points, "Number of separations");

  auto* rp = app.add_subcommand("reproduce-paper", "Reference-point ratios and field threshold with PASS/FAIL");
  add_common(rp, common, false);

  auto* vf = app.add_subcommand("verify", "Run the tensor and dipole oracles");
  add_common(vf, common, false);
  std::vector<std::string> injections;
  vf->add_option("--inject-target", injections, "Test mode: replace a check's target, name=value");

  auto* cs = app.add_subcommand("constants", "Print the constants in effect");
  add_common(cs, common, false);

  auto* run = app.add_subcommand("run", "Execute every output a scenario requests");
  add_common(run, common);
  run->get_option("--scenario")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    // Defaults: sweep csv, everything else json; reproduce-paper prints text.
    const bool csv = common.format == "csv" || (common.format.empty() && *sw);
    const report::Format fmt = csv ? report::Format::csv : report::Format::json;

    if (*run) {
      Scenario s = scenario_from(common);
      const auto outcome = report::run_scenario(s, default_out_dir(common), fmt);
      if (!outcome.error.is_null()) std::cerr << outcome.error.dump() << "\n";
      for (const auto& p : outcome.written) std::cout << p.string() << "\n";
      return outcome.exit_code;
    }

    if (*bd || *sw) {
      Scenario s = scenario_from(common);
      if (eps_a >= 0) s.epsilon_A = eps_a;
      if (eps_b >= 0) s.epsilon_B = eps_b;
      if (r > 0) s.r_min = r;
      if (*bd) {
        s.r_max = s.r_min;
        s.r_points = 1;
      } else {
        if (r_max > 0) s.r_max = r_max;
        if (points > 0) s.r_points = points;
      }
      s.outputs = {*bd ? OutputKind::breakdown : OutputKind::sweep};
      return emit(common, report::build_artifacts(s, fmt));
    }

    const ConstantsSet k = apply_overrides(default_constants(), parse_overrides(common.overrides));
    k.validate();

    if (*rp) {
      const report::Report rep = report::reproduce_paper(k);
      const std::string body = common.format == "json" ? rep.json().dump(2) + "\n" : rep.text();
      emit(common, {{common.format == "json" ? "reproduce.json" : "reproduce.txt", body}});
      return rep.all_pass() ? report::kExitOk : report::kExitCheckFailed;
    }

    if (*vf) {
      report::VerifyOptions opt;
      opt.injected_targets = parse_overrides(injections);
      const report::Report rep = report::verify_oracles(opt, k);
      const std::string body = csv ? rep.text() : rep.json().dump(2) + "\n";
      emit(common, {{csv ? "verify.txt" : "verify.json", body}});
      return rep.all_pass() ? report::kExitOk : report::kExitCheckFailed;
    }

    if (*cs) {
      const nlohmann::json j = {{"hbar_J_s", k.hbar}, {"c_m_per_s", k.c},      {"epsilon0_F_per_m", k.epsilon0},
                                {"q_C", k.q},         {"a0_m", k.a0},          {"E1_J", k.E1},
                                {"E1_eV", energy_convert(k.E1, EnergyUnit::joule, EnergyUnit::electronvolt, k)},
                                {"hartree_J", k.hartree()}};
      if (csv) {
        std::string body = "name,value\r\n";
        for (const auto& [name, v] : j.items()) body += name + "," + report::format_number(v.get<double>()) + "\r\n";
        return emit(common, {{"constants.csv", body}});
      }
      return emit(common, {{"constants.json", j.dump(2) + "\n"}});
    }
  } catch (...) {
    return fail(std::current_exception());
  }
  return report::kExitOk;
}
