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
#include <span>
#include <vector>

#include "exdd/sequence.hpp"

namespace exdd {

/// The 26-interval third-order quantum-bath sequence: 13 even-type intervals
/// followed by their image under H1->H4, H2->H6, H3->H5 with the same
/// interval lengths. Pulses are derived from the schedule and checked
/// against the published column.
PulseSequence qdd3_sequence();

/// The published pulse column for one half (13 entries, the last being P12).
const std::vector<PulseKind>& qdd3_half_pulses();

struct SearchOptions {
  /// Solver restarts per candidate schedule (the first uses equal intervals).
  int restarts = 8;
  std::uint64_t seed = 1;
  /// Absolute tolerance on the coefficient-equality residuals.
  double tolerance = 1e-11;
  /// Shortest admissible interval; shorter ones reduce to another schedule.
  double min_interval = 1e-6;
  /// Worker threads; 0 selects the hardware concurrency.
  int threads = 0;
  int max_iterations = 200;
};

struct SearchResult {
  PulseSequence sequence;
  /// Largest absolute coefficient-equality residual at the solution.
  double residual = 0.0;
  /// Longest over shortest interval.
  double ratio = 0.0;
};

/// Schedules from `pool` (no repeated adjacent type, all steps and the
/// closing step single pulses), up to `max_intervals` long, one
/// representative per qubit-relabelling class, whose interval lengths can be
/// chosen so the product globalizes through `order`. For each schedule the
/// solution with the smallest interval ratio found is kept. Sorted by ratio.
/// Throws ValidationError for order outside 1..2 or max_intervals outside 1..12.
std::vector<SearchResult> search_sequences(int order, int max_intervals, std::span<const HamiltonianType> pool,
                                           const SearchOptions& options = {});

/// Candidate schedules in enumeration order (exposed for testing).
std::vector<std::vector<HamiltonianType>> enumerate_schedules(int max_intervals,
                                                              std::span<const HamiltonianType> pool);

}  // namespace exdd
