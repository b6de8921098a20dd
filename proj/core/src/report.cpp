#include "starkcp/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

#include "starkcp/error.hpp"
#include "starkcp/hydrogen.hpp"

namespace starkcp::report {

namespace fs = std::filesystem;

Format parse_format(std::string_view token) {
  if (token == "csv") return Format::csv;
  if (token == "json") return Format::json;
  throw ParseError("unknown format '" + std::string(token) + "' (expected csv or json)");
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::vector<PotentialBreakdown> sweep(const HydrogenContext& ctx, double epsA, double epsB,
                                      std::span<const double> radii, double lamb, unsigned threads) {
  std::vector<PotentialBreakdown> out(radii.size());
  std::vector<std::exception_ptr> errors(radii.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, radii.size())));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < radii.size(); i = next++) {
      try {
        out[i] = breakdown(ctx, epsA, epsB, radii[i], lamb);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::string> csv_header() {
  return {"r_m",
          "epsilon_A_V_per_m",
          "epsilon_B_V_per_m",
          "E4_classical_J",
          "U_cp_baseline_J",
          "E6_correction_J",
          "E8_correction_J",
          "E_vacuum_estimate_J",
          "E_quadrupole_estimate_J",
          "r6_dimensionless",
          "r8_dimensionless",
          "far_zone_bool",
          "validity_A",
          "validity_B"};
}

std::string to_csv(std::span<const PotentialBreakdown> rows) {
  std::string out;
  const auto header = csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\r\n";
  auto validity = [](Validity v) { return v == Validity::trusted ? "trusted" : "outside_perturbative_range"; };
  for (const auto& b : rows) {
    const double nums[] = {b.r,
                           b.epsilon_A,
                           b.epsilon_B,
                           b.E4_classical.value,
                           b.U_cp_baseline.value,
                           b.E6_correction.value,
                           b.E8_correction.value,
                           b.E_vacuum_estimate.value,
                           b.E_quadrupole_estimate.value,
                           b.r6,
                           b.r8};
    for (double v : nums) out += format_number(v) + ",";
    out += std::string(b.far_zone ? "true" : "false") + "," + validity(b.validity_A) + "," +
           validity(b.validity_B) + "\r\n";
  }
  return out;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::text() const {
  std::ostringstream os;
  os << title << "\n";
  for (const auto& c : checks)
    os << (c.pass ? "PASS " : "FAIL ") << c.name << "  value=" << format_number(c.value)
       << " target=" << format_number(c.target) << " residual=" << format_number(c.residual)
       << " tolerance=" << format_number(c.tolerance) << "\n";
  os << (all_pass() ? "ALL PASS" : "SOME CHECKS FAILED") << "\n";
  return os.str();
}

nlohmann::json Report::json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks)
    checks_json.push_back({{"name", c.name},
                           {"value", c.value},
                           {"target", c.target},
                           {"residual", c.residual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  return {{"title", title}, {"all_pass", all_pass()}, {"checks", checks_json}, {"details", details}};
}

namespace {

// Range check on log10(value): target is the range centre, tolerance its half-width.
Check decade_check(std::string name, double value, double lo_exp, double hi_exp) {
  const double l = std::log10(std::abs(value));
  const double centre = 0.5 * (lo_exp + hi_exp);
  return {std::move(name), value, std::pow(10.0, centre), std::abs(l - centre), 0.5 * (hi_exp - lo_exp),
          l >= lo_exp && l <= hi_exp};
}

}  // namespace

Report reproduce_paper(const ConstantsSet& k) {
  const double eps = 1e8, r = 1e-6;
  const double lamb = 1e-6 * k.q;
  const HydrogenContext ctx(k, 2);
  const PotentialBreakdown b = breakdown(ctx, eps, eps, r, lamb);
  const double threshold = field_threshold(lamb, k);

  Report rep;
  rep.title = "reproduce-paper: epsilon_A = epsilon_B = 1e8 V/m, r = 1e-6 m, lamb shift 1e-6 eV";
  rep.checks.push_back(decade_check("r6 = E6/U in [1e-7, 1e-5]", b.r6, -7.0, -5.0));
  rep.checks.push_back(decade_check("r8 = E8/U in [1e-22, 1e-19]", b.r8, -22.0, -19.0));
  rep.checks.push_back(decade_check("field threshold in [10^3.5, 10^4.5] V/m", threshold, 3.5, 4.5));
  rep.details = {{"breakdown", to_json(b)}, {"field_threshold_V_per_m", threshold}};
  return rep;
}

Report verify_oracles(const VerifyOptions& opt, const ConstantsSet& k) {
  Report rep;
  rep.title = "verify: tensor and dipole oracles";
  auto add = [&](std::string name, double value, double target, double scale, double tol) {
    if (auto it = opt.injected_targets.find(name); it != opt.injected_targets.end()) target = it->second;
    const double residual = std::abs(value - target) / scale;
    rep.checks.push_back({std::move(name), value, target, residual, tol, residual <= tol});
  };

  const oracle::OnePhotonResult one = oracle::one_photon_tensor(Vec3{0.0, 0.0, 1e-6}, opt.config);
  double ref_scale = 0.0;
  for (const auto& row : one.reference)
    for (double v : row) ref_scale = std::max(ref_scale, std::abs(v));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      add("T_" + std::to_string(i + 1) + std::to_string(j + 1), one.tensor[i][j], one.reference[i][j], ref_scale,
          opt.tensor_tolerance);

  for (const auto& c : oracle::m_coefficients(opt.config)) add("M " + c.label, c.raw, c.target, 1.0, opt.m_tolerance);
  for (const auto& c : oracle::d_coefficients(opt.config)) add("D " + c.label, c.raw, c.target, 1.0, opt.d_tolerance);

  const auto basis = hydrogen_basis(2);
  auto bare = [](const BasisState& s) {
    const std::string l = s.label();
    return l.substr(1, l.size() - 2);
  };
  int zeros = 0, zero_failures = 0;
  static constexpr const char* kAxisName = "xyz";
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      for (Axis ax : kAxes) {
        const double analytic = dipole_element(basis[a], basis[b], ax, k).value;
        if (!dipole_allowed(basis[a], basis[b], ax)) {
          ++zeros;
          if (analytic != 0.0 || radial_integral_oracle(basis[a], basis[b], ax, k) != 0.0) ++zero_failures;
          continue;
        }
        const double numeric = radial_integral_oracle(basis[a], basis[b], ax, k);
        add("dipole <" + bare(basis[a]) + "|" + kAxisName[index(ax)] + "|" + bare(basis[b]) + ">",
            numeric, analytic, k.qa0(), opt.dipole_tolerance);
      }
  add("selection-rule zeros (" + std::to_string(zeros) + " elements)", zero_failures, 0.0, 1.0, 0.0);

  rep.details = {{"one_photon", oracle::to_json(one)}};
  return rep;
}

void write_atomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw ConfigError("write to " + tmp.string() + " failed");
  }
  fs::rename(tmp, path);
}

int exit_code_for(std::exception_ptr e) {
  try {
    std::rethrow_exception(e);
  } catch (const ParseError&) {
    return kExitParse;
  } catch (const NumericError&) {
    return kExitNumeric;
  } catch (const Error&) {
    return kExitInvariant;
  } catch (...) {
    return kExitNumeric;
  }
}

nlohmann::json error_record(std::exception_ptr e) {
  nlohmann::json j = {{"exit_code", exit_code_for(e)}};
  try {
    std::rethrow_exception(e);
  } catch (const ParseError& x) {
    j["kind"] = "parse";
    j["message"] = x.what();
  } catch (const InvariantViolation& x) {
    j["kind"] = "invariant";
    j["field"] = x.field();
    j["message"] = x.what();
  } catch (const NumericError& x) {
    j["kind"] = "numeric";
    j["message"] = x.what();
    j["estimate"] = x.estimate();
    j["achieved_error"] = x.achieved_error();
  } catch (const Error& x) {
    j["kind"] = "invariant";
    j["message"] = x.what();
  } catch (const std::exception& x) {
    j["kind"] = "internal";
    j["message"] = x.what();
  } catch (...) {
    j["kind"] = "internal";
    j["message"] = "unknown exception";
  }
  return j;
}

std::vector<Artifact> build_artifacts(const Scenario& s, Format format, bool* checks_passed) {
  s.validate();
  const ConstantsSet k = s.constants();
  const double lamb = s.lamb_shift_eV * k.q;
  bool passed = true;
  std::vector<Artifact> out;
  const HydrogenContext ctx(k, s.basis_max_n);

  for (OutputKind kind : s.outputs) {
    switch (kind) {
      case OutputKind::breakdown: {
        const PotentialBreakdown b = breakdown(ctx, s.epsilon_A, s.epsilon_B, s.r_min, lamb);
        if (format == Format::csv)
          out.push_back({"breakdown.csv", to_csv(std::span(&b, 1))});
        else
          out.push_back({"breakdown.json", to_json(b).dump(2) + "\n"});
        break;
      }
      case OutputKind::sweep: {
        const auto radii = s.radii();
        const auto rows = sweep(ctx, s.epsilon_A, s.epsilon_B, radii, lamb);
        if (format == Format::csv) {
          out.push_back({"sweep.csv", to_csv(rows)});
        } else {
          nlohmann::json arr = nlohmann::json::array();
          for (const auto& b : rows) arr.push_back(to_json(b));
          out.push_back({"sweep.json", arr.dump(2) + "\n"});
        }
        break;
      }
      case OutputKind::verify: {
        const Report r = verify_oracles({}, k);
        passed = passed && r.all_pass();
        out.push_back({"verify.json", r.json().dump(2) + "\n"});
        break;
      }
      case OutputKind::reproduce: {
        const Report r = reproduce_paper(k);
        passed = passed && r.all_pass();
        out.push_back({"reproduce.json", r.json().dump(2) + "\n"});
        out.push_back({"reproduce.txt", r.text()});
        break;
      }
    }
  }
  if (checks_passed) *checks_passed = passed;
  return out;
}

RunOutcome run_scenario(const Scenario& s, const fs::path& out_dir, Format format) {
  RunOutcome o;
  try {
    bool passed = true;
    const auto artifacts = build_artifacts(s, format, &passed);
    fs::create_directories(out_dir);
    for (const auto& a : artifacts) {
      write_atomic(out_dir / a.filename, a.content);
      o.written.push_back(out_dir / a.filename);
    }
    o.exit_code = passed ? kExitOk : kExitCheckFailed;
  } catch (...) {
    o.error = error_record(std::current_exception());
    o.exit_code = o.error["exit_code"].get<int>();
  }
  return o;
}

RunOutcome run_scenario_file(const fs::path& path, const fs::path& out_dir, Format format) {
  try {
    return run_scenario(load_scenario(path), out_dir, format);
  } catch (...) {
    RunOutcome o;
    o.error = error_record(std::current_exception());
    o.exit_code = o.error["exit_code"].get<int>();
    return o;
  }
}

}  // namespace starkcp::report
