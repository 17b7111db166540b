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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace exdd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitInput = 3;

/// Every input of one command; persisted with --save-config and replayed
/// with --config.
struct RunConfig {
  std::string command;
  // Sequence selection.
  std::string group = "a3";
  int order = 1;
  std::string sequence;
  // verify
  std::string mode = "classical";
  // filter
  double omega_t_min = 1e-2;
  double omega_t_max = 1e3;
  int omega_t_points = 400;
  // chi
  std::string spectrum = "lorentzian";
  double spectrum_amplitude = 1e6;
  double spectrum_width_mhz = 1.0;
  double spectrum_center_mhz = 0.0;
  double cutoff_mhz = 0.0;
  int function = 0;
  // simulate
  std::string kind = "classical";
  std::vector<int> orders;
  double T_start = 1e-9;
  double T_stop = 1e-1;
  int T_points = 49;
  int trials = 16;
  int bath_instances = 10;
  int states = 20;
  std::uint64_t seed = 1;
  double J_mhz = 100.0;
  double beta_khz = 10.0;
  double bath_rms_mhz = 100.0;
  double bath_omega_mhz = 100.0;
  // search
  int max_intervals = 5;
  std::string pool = "a3";
  int restarts = 8;
  // Shared.
  int threads = 0;
  std::string out;
  double residual_tolerance = 1e-12;
  double globalization_tolerance = 1e-10;
  /// Relative exponent tolerance for simulate; 0 selects 10% (classical) or 15% (quantum).
  double exponent_tolerance = 0.0;
};

std::string config_to_json(const RunConfig& config);
/// Throws exdd::InputError on malformed text.
RunConfig config_from_json(const std::string& text);

/// Executes a parsed configuration; returns the exit code.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] excluded); returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exdd::cli
