// Command-line front end: single-point solves, parameter sweeps, scenario
// generation and config validation.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "hapsris/pipeline.hpp"
#include "hapsris/scenario.hpp"
#include "hapsris/sweep.hpp"
#include "hapsris/units.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kInfeasible = 2, kSolverFailure = 3 };

void print_warnings(const hapsris::Scenario& s) {
  for (const auto& w : hapsris::warnings(s)) {
    std::cerr << "warning: " << w << '\n';
  }
}

int cmd_solve(const hapsris::Scenario& base, const std::optional<std::string>& scheme) {
  hapsris::Scenario s = base;
  if (scheme) {
    s.scheme = hapsris::parse_scheme(*scheme);
  }
  print_warnings(s);
  const hapsris::PointResult r = hapsris::run_point(s);

  std::printf("scheme %s  N=%lld  T=%lld  Q=%lld  PA=%.2f dBm  beta=%.6g\n", hapsris::to_string(r.scheme).c_str(),
              static_cast<long long>(r.n_total), static_cast<long long>(r.group_size),
              static_cast<long long>(r.amplifiers), r.pa_power_dbm, r.beta.empty() ? 1.0 : r.beta.front());
  std::printf("%4s %10s %12s %12s %14s\n", "ue", "N_k", "P_k [dBm]", "SNR [dB]", "rate [Mbit/s]");
  for (std::size_t k = 0; k < r.allocation.n_elements.size(); ++k) {
    std::printf("%4zu %10lld %12.3f %12.3f %14.4f\n", k, static_cast<long long>(r.allocation.n_elements[k]),
                hapsris::watts_to_dbm(r.allocation.tx_power_w[k]), hapsris::linear_to_db(r.allocation.snr[k]),
                r.allocation.rate_bps[k] / 1e6);
  }
  std::printf("sum rate        %.6f Mbit/s\n", r.sum_rate_bps / 1e6);
  std::printf("min UE rate     %.6f Mbit/s\n", r.min_ue_rate_bps / 1e6);
  std::printf("total power     %.6f W\n", r.total_power_w);
  std::printf("energy eff.     %.6f kbit/J\n", r.energy_eff_bpj / 1e3);
  std::printf("solver          %s  kkt=%.3g\n", hapsris::gp::to_string(r.status), r.kkt_residual);
  std::printf("certified       %s (%zu violations, min slack %.6g)\n", r.certification.ok() ? "yes" : "no",
              r.certification.violations, r.certification.min_slack);
  std::printf("feasible        %s\n", r.feasible ? "yes" : "no");

  if (r.status == hapsris::gp::GpStatus::MaxIterations) {
    return kSolverFailure;
  }
  return r.feasible ? kOk : kInfeasible;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HAPS active-RIS sum-rate / energy-efficiency simulator"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> scheme;
  auto* solve = app.add_subcommand("solve", "Solve a single operating point");
  solve->add_option("config", config_path, "Scenario config (YAML)")->required();
  solve->add_option("--scheme", scheme, "Override the scheme: I, II, III, IV or passive");

  std::string var = "elements";
  std::string values;
  std::string schemes = "I,II,III,IV,passive";
  std::string out_path = "results.csv";
  std::optional<std::uint64_t> seed;
  int reps = 1;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Sweep elements or PA power across schemes; write CSV");
  sweep->add_option("config", config_path, "Scenario config (YAML)")->required();
  sweep->add_option("--var", var, "elements | pa-power")->check(CLI::IsMember({"elements", "pa-power"}));
  sweep->add_option("--values", values, "start:stop:step or v1,v2,... (default depends on --var)");
  sweep->add_option("--schemes", schemes, "Comma-separated schemes");
  sweep->add_option("--out", out_path, "Output CSV path");
  sweep->add_option("--seed", seed, "Base seed for UE placement (default: config seed)");
  sweep->add_option("--reps", reps, "Repetitions per point")->check(CLI::PositiveNumber);
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* gen = app.add_subcommand("gen-scenario", "Write the config back with explicit UE positions");
  gen->add_option("config", config_path, "Scenario config (YAML)")->required();
  gen->add_option("--out", out_path, "Output scenario file")->required();
  gen->add_option("--seed", seed, "Override the placement seed");

  auto* check = app.add_subcommand("validate", "Parse and validate a config");
  check->add_option("config", config_path, "Scenario config (YAML)")->required();

  CLI11_PARSE(app, argc, argv);

  hapsris::Scenario scenario;
  try {
    scenario = hapsris::load_scenario(config_path);
    if (seed && !gen->parsed() && !sweep->parsed()) {
      scenario.seed = *seed;
    }
  } catch (const hapsris::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (solve->parsed()) {
      return cmd_solve(scenario, scheme);
    }
    if (check->parsed()) {
      print_warnings(scenario);
      std::cout << config_path << ": ok\n";
      return kOk;
    }
    if (gen->parsed()) {
      if (seed) {
        scenario.seed = *seed;
        scenario.ue_positions.clear();
      }
      const hapsris::Scenario full = hapsris::generate_scenario(scenario);
      std::ofstream out(out_path);
      out << hapsris::dump_scenario(full);
      if (!out) {
        std::cerr << out_path << ": write failed\n";
        return kConfigError;
      }
      return kOk;
    }
    if (sweep->parsed()) {
      hapsris::SweepSpec sw;
      sw.variable = hapsris::parse_sweep_variable(var);
      sw.values = values.empty() ? (sw.variable == hapsris::SweepVariable::Elements
                                        ? hapsris::default_element_values()
                                        : hapsris::default_pa_power_values())
                                 : hapsris::parse_values(values);
      sw.schemes = hapsris::parse_schemes(schemes);
      sw.repetitions = reps;
      sw.seed = seed.value_or(scenario.seed);
      print_warnings(scenario);
      const auto rows = hapsris::run_sweep(scenario, sw, threads);
      hapsris::write_csv_file(out_path, rows);
      std::size_t infeasible = 0;
      for (const auto& r : rows) infeasible += r.feasible ? 0 : 1;
      std::cerr << "wrote " << rows.size() << " rows to " << out_path << " (" << infeasible << " infeasible)\n";
      return kOk;
    }
  } catch (const hapsris::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kSolverFailure;
  }
  return kOk;
}
