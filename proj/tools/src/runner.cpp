/*
 * Copyright 2026 The optotriplet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "optotriplet/app/runner.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "optotriplet/app/output.hpp"
#include "optotriplet/constants.hpp"
#include "optotriplet/errors.hpp"
#include "optotriplet/oracle.hpp"
#include "optotriplet/params_io.hpp"
#include "optotriplet/sqlimit.hpp"
#include "optotriplet/sweep.hpp"
#include "optotriplet/version.hpp"

namespace optotriplet::app {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json scenario_json(const Scenario& s, const PhysParams& p, const DerivedParams& d) {
  return {{"name", s.name},
          {"caption", s.caption},
          {"symmetry", s.symmetry == Symmetry::kSymmetric ? "symmetric" : "as_configured"},
          {"lossy", s.lossy},
          {"pump", s.pump},
          {"y_policy", s.y_policy.describe()},
          {"params", json::parse(to_config_json(p))},
          {"derived", json::parse(to_json(d))}};
}

json manifest_base(const std::string& command, const RunInputs& in) {
  return {{"schema_version", kManifestSchemaVersion},
          {"tool", "optotriplet"},
          {"version", kVersion},
          {"timestamp", utc_timestamp()},
          {"command", command},
          {"params", json::parse(to_config_json(in.params))},
          {"derived", json::parse(to_json(derive(in.params)))},
          {"grid", in.grid ? json(to_string(*in.grid)) : json(nullptr)}};
}

GridSpec grid_for(const Scenario& s, const RunInputs& in, double tau) {
  if (in.grid) return *in.grid;
  return s.name == "config" ? default_grid(tau) : figure_grid(tau);
}

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

}  // namespace

RunInputs resolve_inputs(const RunOptions& opts) {
  if (opts.config && opts.preset) {
    throw ParameterError("--config and --preset are mutually exclusive");
  }
  if (!opts.config && !opts.preset) {
    throw ParameterError("one of --config PATH or --preset table1 is required");
  }
  RunInputs in;
  std::vector<std::string> names = opts.scenarios;
  if (opts.preset) {
    if (*opts.preset != "table1") throw ParameterError("unknown preset '" + *opts.preset + "'");
    in.params = table1_preset();
  } else {
    std::ifstream f(*opts.config);
    if (!f) throw ParameterError("cannot read config " + opts.config->string());
    std::stringstream buf;
    buf << f.rdbuf();
    json doc;
    try {
      doc = json::parse(buf.str());
    } catch (const json::exception& e) {
      throw ParameterError("config is not valid JSON: " + std::string(e.what()));
    }
    if (doc.is_object() && doc.contains("schema_version")) {
      if (doc["schema_version"] != kManifestSchemaVersion) {
        throw ParameterError("unsupported manifest schema version");
      }
      in.params = parse_config(doc.at("params").dump(), false);
      if (names.empty()) {
        for (const auto& s : doc.at("scenarios")) names.push_back(s.at("name"));
      }
      if (!opts.grid && doc.contains("grid") && !doc["grid"].is_null()) {
        in.grid = parse_grid_spec(doc["grid"].get<std::string>());
      }
    } else {
      in.params = parse_config(buf.str(), false);
    }
  }
  if (opts.tau) in.params.tau = *opts.tau;
  validate(in.params);
  if (opts.grid) in.grid = parse_grid_spec(*opts.grid);
  if (names.empty()) names.push_back("config");
  in.scenarios = expand_scenarios(names);
  return in;
}

int run_sweep(const RunOptions& opts, std::ostream& out) {
  const RunInputs in = resolve_inputs(opts);
  json manifest = manifest_base("sweep", in);
  manifest["seeds"] = json::array();
  json list = json::array();
  for (const auto& s : in.scenarios) {
    const PhysParams p = apply(s, in.params);
    const DerivedParams d = derive(p);
    const GridSpec g = grid_for(s, in, p.tau);
    const auto records = spectrum_sweep(d, g.build(), s.y_policy, s.name);
    const std::string file = s.name + ".csv";
    write_atomic(opts.out_dir / file, spectrum_csv(records));
    json entry = scenario_json(s, p, d);
    entry["grid"] = to_string(g);
    entry["csv"] = file;
    list.push_back(entry);

    double best = records.front().ratio;
    std::size_t below = 0;
    for (const auto& r : records) {
      best = std::min(best, r.ratio);
      below += r.ratio < 1.0 ? 1 : 0;
    }
    out << s.name << ": " << records.size() << " points, min R = " << fixed(best)
        << ", " << below << " below SQL -> " << (opts.out_dir / file).string() << '\n';
  }
  manifest["scenarios"] = list;
  write_atomic(opts.out_dir / "manifest.json", manifest.dump(2) + '\n');
  return kExitOk;
}

int run_oracle_verb(const RunOptions& opts, std::ostream& out) {
  const RunInputs in = resolve_inputs(opts);
  json manifest = manifest_base("oracle", in);
  json list = json::array();
  json seeds = json::object();
  bool all_pass = true;
  for (const auto& s : in.scenarios) {
    const PhysParams p = apply(s, in.params);
    const DerivedParams d = derive(p);
    SimConfig cfg;
    cfg.trajectories = opts.trajectories;
    cfg.seed = opts.seed;
    if (opts.dt) cfg.dt = *opts.dt;
    if (opts.duration) cfg.duration = *opts.duration;
    cfg.y_policy = s.y_policy;
    cfg.scenario = s.name;
    cfg.threads = opts.threads;
    OracleOptions oo;
    oo.keep_first_trajectory = opts.dump_timeseries;
    const OracleResult r = run_oracle(d, cfg, oo);
    const ComparisonReport& rep = r.report;

    json report = {
        {"scenario", s.name},
        {"pass", rep.pass},
        {"band_rad_s", {rep.band.lo, rep.band.hi}},
        {"bins", rep.bins},
        {"bins_within", rep.bins_within},
        {"fraction_within", rep.fraction_within},
        {"mean_ratio", rep.mean_ratio},
        {"max_abs_z", rep.max_abs_z},
        {"max_relative_deviation", rep.max_relative_deviation},
        {"chi_square_per_bin", rep.chi_square_per_bin},
        {"criteria", {{"sigmas", 3.0}, {"required_fraction", 0.95}, {"mean_tolerance", 0.05}}},
        {"simulation",
         {{"dt", r.config.dt},
          {"duration", r.config.duration},
          {"trajectories", r.config.trajectories},
          {"segments", r.config.segments},
          {"segment_length", r.estimate.segment_length},
          {"seed", r.config.seed},
          {"y_policy", r.config.y_policy.describe()}}},
        {"trajectory_seeds", r.seeds},
    };
    const std::string stem = "oracle-" + s.name;
    write_atomic(opts.out_dir / (stem + ".json"), report.dump(2) + '\n');
    write_atomic(opts.out_dir / (stem + ".csv"), comparison_csv(rep));
    if (r.first_trajectory) {
      std::ostringstream ts;
      write_timeseries(ts, r.times, *r.first_trajectory);
      write_atomic(opts.out_dir / ("timeseries-" + s.name + ".csv"), ts.str());
    }
    json entry = scenario_json(s, p, d);
    entry["report"] = stem + ".json";
    list.push_back(entry);
    seeds[s.name] = r.seeds;
    all_pass = all_pass && rep.pass;

    out << s.name << ": " << (rep.pass ? "PASS" : "FAIL") << "  band [" << fixed(rep.band.lo)
        << ", " << fixed(rep.band.hi) << "] rad/s, " << rep.bins_within << '/' << rep.bins
        << " bins within 3 sigma, mean ratio " << fixed(rep.mean_ratio)
        << ", max deviation " << fixed(rep.max_relative_deviation) << '\n';
  }
  manifest["scenarios"] = list;
  manifest["seed"] = opts.seed;
  manifest["seeds"] = seeds;
  write_atomic(opts.out_dir / "manifest.json", manifest.dump(2) + '\n');
  return all_pass ? kExitOk : kExitComparison;
}

int run_regime(const RunOptions& opts, std::ostream& out) {
  const RunInputs in = resolve_inputs(opts);
  for (const auto& s : in.scenarios) {
    const PhysParams p = apply(s, in.params);
    const DerivedParams d = derive(p);
    const RegimeReport rep = check_regime(d, p);
    out << "scenario " << s.name << '\n' << format_report(rep);
    out << "B = n_T omega_m tau / Q = " << fixed(rep.thermal_factor, 4) << '\n';
  }
  return kExitOk;
}

int run_minforce(const RunOptions& opts, std::ostream& out) {
  if (opts.tau && !(*opts.tau > 0.0)) throw ParameterError("--tau must be positive");
  const RunInputs in = resolve_inputs(opts);
  for (const auto& s : in.scenarios) {
    const PhysParams p = apply(s, in.params);
    const DerivedParams d = derive(p);
    const ForceBudget b = min_force(d, p.tau);
    out << "scenario " << s.name << "\n"
        << "  tau                     " << fixed(b.tau) << " s\n"
        << "  thermal term            " << fixed(b.thermal_term) << " 1/s^2\n"
        << "  SQL term                " << fixed(b.sql_term) << " 1/s^2\n"
        << "  thermal / SQL           " << fixed(b.thermal_term / b.sql_term) << '\n'
        << "  min normalised force    " << fixed(b.min_normalized_force) << " 1/s\n"
        << "  F_s0                    " << fixed(b.force_min) << " N\n"
        << "  F_s0 (SQL only)         " << fixed(b.force_sql) << " N\n"
        << "  F_s0 (4 pi / tau^2)     " << fixed(b.force_alternate) << " N\n";
    const double k = optimal_strength(d.gamma_m, constants::kPi / b.tau);
    const BandIntegral bi = band_integral_check(d, k, b.tau);
    out << "  band integral, K = " << fixed(k) << ": numeric " << fixed(bi.numeric, 10)
        << ", closed form " << fixed(bi.closed_form, 10) << " (one-sided measure dOmega/2pi,"
        << " exact up to a factor of order unity)\n";
    if (!b.short_pulse) {
      out << "  warning: gamma_m tau = " << fixed(d.gamma_m * b.tau)
          << " >= 1, outside the short-pulse approximation\n";
    }
  }
  return kExitOk;
}

int run_presets(std::ostream& out) {
  out << "preset table1\n" << to_config_json(table1_preset()) << "\n\nscenarios\n";
  for (const auto& s : preset_scenarios()) out << "  " << s.name << "  " << s.caption << '\n';
  out << "  config  parameters as loaded\n"
      << "aliases\n  fig2, fig3, fig4, all\n";
  return kExitOk;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum-noise spectra and oracle checks for a three-mode optomechanical sensor",
               "optotriplet"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  RunOptions opts;
  std::optional<std::string> config;
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--config", config, "flat JSON parameter file or a run manifest");
    sub->add_option("--preset", opts.preset, "built-in parameter set")
        ->check(CLI::IsMember({"table1"}));
    sub->add_option("--scenario", opts.scenarios, "scenario or alias (repeatable)");
    sub->add_option("--tau", opts.tau, "signal duration override, s");
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
  };

  CLI::App* sweep = app.add_subcommand("sweep", "write S_qu / S_SQL spectra per scenario");
  add_inputs(sweep);
  add_output(sweep);
  sweep->add_option("--grid", opts.grid, "{log|linear}:N:lo:hi in rad/s");

  CLI::App* oracle = app.add_subcommand("oracle", "Monte Carlo check of the analytic spectrum");
  add_inputs(oracle);
  add_output(oracle);
  oracle->add_option("--seed", opts.seed, "base RNG seed")->capture_default_str();
  oracle->add_option("--trajectories", opts.trajectories, "trajectory count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  oracle->add_option("--duration", opts.duration, "record length, s");
  oracle->add_option("--dt", opts.dt, "time step, s");
  oracle->add_option("--threads", opts.threads, "worker threads, 0 = all cores");
  oracle->add_flag("--dump-timeseries", opts.dump_timeseries,
                   "write the first trajectory as CSV");

  CLI::App* regime = app.add_subcommand("regime", "print the validity-regime report");
  add_inputs(regime);
  CLI::App* minforce = app.add_subcommand("minforce", "print the minimum detectable force");
  add_inputs(minforce);
  app.add_subcommand("presets", "list presets and scenarios");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (config) opts.config = *config;

  try {
    if (sweep->parsed()) return run_sweep(opts, out);
    if (oracle->parsed()) return run_oracle_verb(opts, out);
    if (regime->parsed()) return run_regime(opts, out);
    if (minforce->parsed()) return run_minforce(opts, out);
    return run_presets(out);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed manifest: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace optotriplet::app
