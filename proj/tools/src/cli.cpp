// Copyright 2026 The exdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "exdd_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "exdd/error.hpp"
#include "exdd/expansion.hpp"
#include "exdd/filter.hpp"
#include "exdd/io.hpp"
#include "exdd/search.hpp"
#include "exdd/simulator.hpp"
#include "exdd/solver.hpp"

namespace exdd::cli {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(RunConfig, command, group, order, sequence, mode, omega_t_min,
                                                omega_t_max, omega_t_points, spectrum, spectrum_amplitude,
                                                spectrum_width_mhz, spectrum_center_mhz, cutoff_mhz, function, kind,
                                                orders, T_start, T_stop, T_points, trials, bath_instances, states, seed,
                                                J_mhz, beta_khz, bath_rms_mhz, bath_omega_mhz, max_intervals, pool,
                                                restarts, threads, out, residual_tolerance, globalization_tolerance,
                                                exponent_tolerance)

namespace {

using nlohmann::json;

constexpr double kMHz = kTwoPi * 1e6;

std::string sci(double v, int digits = 3) {
  std::ostringstream ss;
  ss.precision(digits);
  ss << std::scientific << v;
  return ss.str();
}

std::filesystem::path output_path(const RunConfig& c, const std::string& name) {
  return std::filesystem::path(c.out) / name;
}

PulseSequence named_sequence(const std::string& group, int order) {
  if (group == "qdd3") return qdd3_sequence();
  switch (parse_group(group)) {
    case Group::udd:
      return udd_sequence(order);
    case Group::a3:
      return a3_sequence(order);
    case Group::s3:
      return s3_sequence(order);
    case Group::custom:
      break;
  }
  throw InputError("group must be udd, a3, s3 or qdd3");
}

PulseSequence selected_sequence(const RunConfig& c) {
  if (!c.sequence.empty()) return sequence_from_json(read_text(c.sequence));
  if (c.order < 0) throw InputError("order must be non-negative");
  return named_sequence(c.group, c.order);
}

std::string stem(const RunConfig& c) {
  if (!c.sequence.empty()) return std::filesystem::path(c.sequence).stem().string();
  return c.group == "qdd3" ? "qdd3" : c.group + "_n" + std::to_string(c.order);
}

json residual_json(const PulseSequence& seq, int order, double tolerance, double& worst) {
  const auto functions = switching_functions(seq);
  const Eigen::MatrixXd r = moment_residuals(seq, order);
  worst = max_decoupling_residual(functions, r);
  json j;
  j["mode"] = "classical";
  j["order"] = order;
  j["max_residual"] = worst;
  j["tolerance"] = tolerance;
  j["passed"] = worst <= tolerance;
  j["functions"] = json::array();
  for (std::size_t f = 0; f < functions.count(); ++f) {
    std::vector<double> row(r.cols());
    for (Eigen::Index p = 0; p < r.cols(); ++p) row[static_cast<std::size_t>(p)] = r(static_cast<Eigen::Index>(f), p);
    j["functions"].push_back({{"name", functions.names[f]}, {"normalization", static_cast<bool>(functions.normalization[f])},
                              {"residuals", row}});
  }
  return j;
}

int cmd_times(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const PulseSequence seq = named_sequence(c.group, c.order);
  double worst = 0.0;
  residual_json(seq, seq.order, c.residual_tolerance, worst);
  const std::string summary = "group " + c.group + " order " + std::to_string(seq.order) + " intervals " +
                              std::to_string(seq.intervals()) + " max_residual " + sci(worst) + "\n";
  if (c.out.empty()) {
    out << times_csv(seq);
    err << summary;
  } else {
    write_text(output_path(c, stem(c) + ".json"), sequence_to_json(seq));
    write_text(output_path(c, stem(c) + "_times.csv"), times_csv(seq));
    out << summary;
  }
  if (worst > c.residual_tolerance) {
    err << "moment residual " << sci(worst) << " exceeds tolerance " << sci(c.residual_tolerance) << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.sequence.empty()) throw InputError("verify needs --sequence");
  const PulseSequence seq = selected_sequence(c);
  std::string text;
  bool passed = false;
  if (c.mode == "classical") {
    double worst = 0.0;
    const json j = residual_json(seq, c.order, c.residual_tolerance, worst);
    passed = j["passed"].get<bool>();
    text = j.dump(2) + "\n";
  } else if (c.mode == "quantum") {
    const GlobalizationReport report = globalization_report(seq, c.order, c.globalization_tolerance);
    passed = report.verdict >= c.order;
    text = report_json(report);
    err << "verdict " << report.verdict << " (requested " << c.order << ")\n";
  } else {
    throw InputError("mode must be classical or quantum");
  }
  out << text;
  if (!c.out.empty()) write_text(c.out, text);
  return passed ? kExitOk : kExitValidation;
}

int cmd_filter(const RunConfig& c, std::ostream& out, std::ostream&) {
  const PulseSequence seq = selected_sequence(c);
  const auto functions = switching_functions(seq);
  const auto grid = log_grid(c.omega_t_min, c.omega_t_max, c.omega_t_points);
  const auto boundaries = seq.boundaries();
  out << "function,low_frequency_slope,expected\n";
  for (std::size_t f = 0; f < functions.count(); ++f) {
    const FilterCurve curve = filter_curve(seq, f, grid);
    if (!c.out.empty()) write_text(output_path(c, "filter_" + stem(c) + "_" + curve.function + ".csv"), filter_csv(curve));
    double slope = 0.0;
    try {
      slope = low_frequency_slope(functions.values[f], boundaries, c.omega_t_min);
    } catch (const ValidationError&) {
      slope = std::nan("");
    }
    out << curve.function << "," << slope << "," << 2 * (seq.order + 1) << "\n";
  }
  return kExitOk;
}

int cmd_chi(const RunConfig& c, std::ostream& out, std::ostream&) {
  const PulseSequence seq = selected_sequence(c);
  if (c.function < 0 || static_cast<std::size_t>(c.function) >= switching_functions(seq).count())
    throw InputError("switching function index out of range");
  SpectralDensity s;
  const double a = c.spectrum_amplitude, w = c.spectrum_width_mhz * kMHz, w0 = c.spectrum_center_mhz * kMHz;
  if (!(w > 0.0)) throw InputError("spectrum width must be positive");
  if (c.spectrum == "lorentzian") {
    s.density = [=](double x) { return a * w * w / (w * w + (x - w0) * (x - w0)); };
  } else if (c.spectrum == "gaussian") {
    s.density = [=](double x) { return a * std::exp(-0.5 * (x - w0) * (x - w0) / (w * w)); };
    if (w0 > 0.0) s.breakpoints = {std::max(0.0, w0 - 8 * w), w0, w0 + 8 * w};
  } else if (c.spectrum == "one-over-f") {
    s.density = [=](double x) { return a * w / x; };
  } else {
    throw InputError("spectrum must be lorentzian, gaussian or one-over-f");
  }
  if (c.cutoff_mhz > 0.0) s.cutoff = c.cutoff_mhz * kMHz;
  std::vector<ChiRecord> records;
  for (double T : log_grid(c.T_start, c.T_stop, c.T_points)) {
    const double x = chi(s, seq, static_cast<std::size_t>(c.function), T * 1e-6);
    records.push_back({T, x, decoherence_function(x)});
  }
  const std::string text = chi_json(records);
  out << text;
  if (!c.out.empty()) write_text(output_path(c, "chi_" + stem(c) + ".json"), text);
  return kExitOk;
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SweepOptions o;
  o.kind = parse_simulation_kind(c.kind);
  o.T_us = log_grid(c.T_start, c.T_stop, c.T_points);
  o.trials = c.trials;
  o.bath_instances = c.bath_instances;
  o.states = c.states;
  o.seed = c.seed;
  o.threads = c.threads;
  o.classical.rms = c.bath_rms_mhz * kMHz;
  o.classical.omega_max = c.bath_omega_mhz * kMHz;
  o.quantum.J = c.J_mhz * kMHz;
  o.quantum.beta = c.beta_khz * kMHz * 1e-3;
  SweepResult result;
  if (!c.sequence.empty()) {
    const PulseSequence seq = selected_sequence(c);
    o.orders = {seq.order};
    result = sweep_infidelity(o, {seq});
  } else {
    o.orders = c.orders;
    if (o.orders.empty())
      o.orders = o.kind == SimulationKind::classical ? std::vector<int>{0, 1, 2, 3, 4} : std::vector<int>{0, 1, 2, 3};
    result = sweep_infidelity(o);
  }
  const double tolerance =
      c.exponent_tolerance > 0.0 ? c.exponent_tolerance : (o.kind == SimulationKind::classical ? 0.10 : 0.15);
  const std::string kind(to_string(o.kind));
  if (!c.out.empty()) {
    write_text(output_path(c, "sweep_" + kind + ".csv"), sweep_csv(result));
    write_text(output_path(c, "fit_" + kind + ".json"), fit_json(result));
  } else {
    out << sweep_csv(result);
  }
  bool passed = true;
  err << "order expected exponent ci95 r2 points status\n";
  for (const auto& f : result.fits) {
    if (!f.valid) {
      err << f.order << " " << f.expected_exponent << " - - - - " << f.message << "\n";
      passed = false;
      continue;
    }
    const bool ok = std::abs(f.fit.exponent - f.expected_exponent) <= tolerance * f.expected_exponent;
    passed = passed && ok;
    std::ostringstream line;
    line.precision(4);
    line << f.order << " " << f.expected_exponent << " " << f.fit.exponent << " [" << f.fit.ci_low << ","
         << f.fit.ci_high << "] " << f.fit.r2 << " " << f.fit.points << " " << (ok ? "ok" : "off") << "\n";
    err << line.str();
  }
  return passed ? kExitOk : kExitValidation;
}

std::vector<HamiltonianType> parse_pool(const std::string& text) {
  std::vector<HamiltonianType> pool;
  if (text == "a3") {
    for (int l = 1; l <= 3; ++l) pool.emplace_back(l);
  } else if (text == "s3") {
    for (int l = 1; l <= 6; ++l) pool.emplace_back(l);
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty() && (item[0] == 'H' || item[0] == 'h')) item.erase(0, 1);
      try {
        pool.emplace_back(std::stoi(item));
      } catch (const std::exception&) {
        throw InputError("pool must be a3, s3 or a comma list of labels 1..6");
      }
    }
  }
  if (pool.empty()) throw InputError("empty Hamiltonian pool");
  return pool;
}

int cmd_search(const RunConfig& c, std::ostream& out, std::ostream& err) {
  SearchOptions o;
  o.seed = c.seed;
  o.threads = c.threads;
  o.restarts = c.restarts;
  const auto results = search_sequences(c.order, c.max_intervals, parse_pool(c.pool), o);
  json j = json::array();
  for (const auto& r : results) {
    std::vector<int> labels;
    for (const auto& h : r.sequence.hamiltonians) labels.push_back(h.label());
    j.push_back({{"hamiltonians", labels},
                 {"interval_lengths", r.sequence.interval_lengths()},
                 {"ratio", r.ratio},
                 {"residual", r.residual},
                 {"sequence", json::parse(sequence_to_json(r.sequence))}});
  }
  const std::string text = j.dump(2) + "\n";
  out << text;
  if (!c.out.empty()) write_text(c.out, text);
  err << results.size() << " sequence(s) found\n";
  return kExitOk;
}

}  // namespace

std::string config_to_json(const RunConfig& config) { return json(config).dump(2) + "\n"; }

RunConfig config_from_json(const std::string& text) {
  try {
    return json::parse(text).get<RunConfig>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed run configuration: ") + e.what());
  }
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "times") return cmd_times(config, out, err);
    if (config.command == "verify") return cmd_verify(config, out, err);
    if (config.command == "filter") return cmd_filter(config, out, err);
    if (config.command == "chi") return cmd_chi(config, out, err);
    if (config.command == "simulate") return cmd_simulate(config, out, err);
    if (config.command == "search") return cmd_search(config, out, err);
    throw InputError("unknown command '" + config.command + "'");
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << " (residual " << sci(e.residual_norm()) << ")\n";
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string config_path, save_path;
  CLI::App app{"Exchange-only decoupling sequences for the three-qubit decoherence-free subsystem"};
  app.require_subcommand(0, 1);
  app.add_option("--config", config_path, "Re-run a saved configuration")->check(CLI::ExistingFile);
  app.add_option("--save-config", save_path, "Write the parsed configuration before running");

  auto add_shared = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Output directory or file");
    sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  };
  auto add_sequence = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "udd, a3, s3 or qdd3")->capture_default_str();
    sub->add_option("--order", c.order, "Decoupling order")->capture_default_str();
    sub->add_option("--sequence", c.sequence, "Sequence JSON file (overrides --group/--order)");
  };

  auto* times = app.add_subcommand("times", "Solve switching times and export the sequence");
  times->add_option("--group", c.group, "udd, a3, s3 or qdd3")->capture_default_str();
  times->add_option("--order", c.order, "Decoupling order")->capture_default_str();
  times->add_option("--residual-tolerance", c.residual_tolerance)->capture_default_str();
  add_shared(times);

  auto* verify = app.add_subcommand("verify", "Check a sequence file against classical or quantum baths");
  verify->add_option("--sequence", c.sequence, "Sequence JSON file")->required();
  verify->add_option("--order", c.order, "Order to verify")->capture_default_str();
  verify->add_option("--mode", c.mode, "classical or quantum")->capture_default_str();
  verify->add_option("--residual-tolerance", c.residual_tolerance)->capture_default_str();
  verify->add_option("--globalization-tolerance", c.globalization_tolerance)->capture_default_str();
  add_shared(verify);

  auto* filter = app.add_subcommand("filter", "Filter-function curves");
  add_sequence(filter);
  filter->add_option("--omegaT-min", c.omega_t_min)->capture_default_str();
  filter->add_option("--omegaT-max", c.omega_t_max)->capture_default_str();
  filter->add_option("--points", c.omega_t_points)->capture_default_str();
  add_shared(filter);

  auto* chi_cmd = app.add_subcommand("chi", "Decoherence integral and W(T) for a model spectrum");
  add_sequence(chi_cmd);
  chi_cmd->add_option("--function", c.function, "Switching function index")->capture_default_str();
  chi_cmd->add_option("--spectrum", c.spectrum, "lorentzian, gaussian or one-over-f")->capture_default_str();
  chi_cmd->add_option("--amplitude", c.spectrum_amplitude, "Spectral amplitude (rad/s)")->capture_default_str();
  chi_cmd->add_option("--width-mhz", c.spectrum_width_mhz)->capture_default_str();
  chi_cmd->add_option("--center-mhz", c.spectrum_center_mhz)->capture_default_str();
  chi_cmd->add_option("--cutoff-mhz", c.cutoff_mhz, "Hard cutoff (0 = none)")->capture_default_str();
  chi_cmd->add_option("--T-start", c.T_start, "First total time (us)")->capture_default_str();
  chi_cmd->add_option("--T-stop", c.T_stop, "Last total time (us)")->capture_default_str();
  chi_cmd->add_option("--T-points", c.T_points)->capture_default_str();
  add_shared(chi_cmd);

  auto* simulate = app.add_subcommand("simulate", "Infidelity-versus-time sweeps with exponent fits");
  simulate->add_option("--kind", c.kind, "classical or quantum")->capture_default_str();
  simulate->add_option("--orders", c.orders, "Orders to sweep (default: all available)");
  simulate->add_option("--sequence", c.sequence, "Simulate this sequence file instead");
  simulate->add_option("--T-start", c.T_start, "First total time (us)")->capture_default_str();
  simulate->add_option("--T-stop", c.T_stop, "Last total time (us)")->capture_default_str();
  simulate->add_option("--T-points", c.T_points, "Log-spaced grid points")->capture_default_str();
  simulate->add_option("--trials", c.trials, "Quantum trials")->capture_default_str();
  simulate->add_option("--bath-instances", c.bath_instances, "Classical bath instances")->capture_default_str();
  simulate->add_option("--states", c.states, "Classical initial states per bath")->capture_default_str();
  simulate->add_option("--seed", c.seed)->capture_default_str();
  simulate->add_option("--J-mhz", c.J_mhz, "System-bath scale J/2pi")->capture_default_str();
  simulate->add_option("--beta-khz", c.beta_khz, "Intra-bath scale beta/2pi")->capture_default_str();
  simulate->add_option("--bath-rms-mhz", c.bath_rms_mhz, "Classical field RMS /2pi")->capture_default_str();
  simulate->add_option("--bath-omega-mhz", c.bath_omega_mhz, "Classical mode bandwidth /2pi")->capture_default_str();
  simulate->add_option("--exponent-tolerance", c.exponent_tolerance, "Relative tolerance (0 = by kind)");
  add_shared(simulate);

  auto* search = app.add_subcommand("search", "Search short quantum-bath sequences");
  search->add_option("--order", c.order, "1 or 2")->capture_default_str();
  search->add_option("--max-intervals", c.max_intervals)->capture_default_str();
  search->add_option("--pool", c.pool, "a3, s3 or labels such as 1,2,3")->capture_default_str();
  search->add_option("--restarts", c.restarts)->capture_default_str();
  search->add_option("--seed", c.seed)->capture_default_str();
  add_shared(search);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (!config_path.empty()) {
      c = config_from_json(read_text(config_path));
    } else {
      const auto subs = app.get_subcommands();
      if (subs.empty()) {
        err << app.help();
        return kExitInput;
      }
      c.command = subs.front()->get_name();
    }
    if (!save_path.empty()) write_text(save_path, config_to_json(c));
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInput;
  }
  return execute(c, out, err);
}

}  // namespace exdd::cli
