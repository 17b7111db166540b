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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exdd/expansion.hpp"
#include "exdd/filter.hpp"
#include "exdd/sequence.hpp"
#include "exdd/simulator.hpp"

namespace exdd {

/// Sequence JSON: group, order, hamiltonians (labels), times (decimal
/// strings, 16 significant digits), pulses (names).
std::string sequence_to_json(const PulseSequence& seq);
/// Throws InputError on malformed text or an inconsistent sequence.
PulseSequence sequence_from_json(std::string_view text);

/// 16-significant-digit decimal form used in sequence files.
std::string format_time(double t);

/// Header `t`, one switching time per row.
std::string times_csv(const PulseSequence& seq);
/// Columns omegaT, filter_value.
std::string filter_csv(const FilterCurve& curve);
/// Columns kind, order, T_us, trials, mean_infidelity, stderr.
std::string sweep_csv(const SweepResult& result);
/// Array of {kind, order, exponent, expected_exponent, r2, window, ...}.
std::string fit_json(const SweepResult& result);
std::string report_json(const GlobalizationReport& report);

struct ChiRecord {
  double T = 0.0;
  double chi = 0.0;
  double W = 1.0;
};
std::string chi_json(std::span<const ChiRecord> records);

/// Whole-file helpers; throw InputError on I/O failure.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace exdd
