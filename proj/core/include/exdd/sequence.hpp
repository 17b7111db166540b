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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exdd/permutation.hpp"

namespace exdd {

/// One of the six permuted Hamiltonians H1..H6. Type k couples bath i to
/// qubit sigma_k(i); types 1-3 are the even permutations, 4-6 the odd ones.
class HamiltonianType {
 public:
  constexpr HamiltonianType() = default;
  /// Throws ValidationError for labels outside 1..6.
  explicit HamiltonianType(int label);

  static HamiltonianType from_permutation(const Permutation3& sigma);

  constexpr int label() const { return label_; }
  /// sigma: bath index -> qubit index (0-based).
  const Permutation3& permutation() const;
  /// alpha_j: which bath qubit j sees (0-based), alpha = sigma^-1.
  int bath_seen_by(int qubit) const { return permutation().inverse()(qubit); }
  bool is_even() const { return label_ <= 3; }

  constexpr bool operator==(const HamiltonianType&) const = default;

 private:
  int label_ = 1;
};

enum class PulseKind { none, P, Pinv, P12, P23 };

std::string_view to_string(PulseKind kind);
/// Accepts "P", "Pinv", "P12", "P23", "none".
PulseKind parse_pulse(std::string_view text);

/// Qubit permutation realised by the pulse; P = P23 . P12.
Permutation3 pulse_permutation(PulseKind kind);
Matrix8cd pulse_unitary(PulseKind kind);
/// Pulse whose permutation is pi, if pi is one of the five realisable ones.
std::optional<PulseKind> pulse_for_permutation(const Permutation3& pi);

enum class Group { udd, a3, s3, custom };

std::string_view to_string(Group group);
Group parse_group(std::string_view text);

/// Hamiltonian schedule with switching times on [0,1] and the pulse applied
/// after each interval. hamiltonians.size() == pulses.size() == times.size()+1.
struct PulseSequence {
  Group group = Group::custom;
  int order = 0;
  std::vector<HamiltonianType> hamiltonians;
  std::vector<double> times;
  std::vector<PulseKind> pulses;

  std::size_t intervals() const { return hamiltonians.size(); }
  /// {0, t_1, ..., t_{N-1}, 1}.
  std::vector<double> boundaries() const;
  std::vector<double> interval_lengths() const;

  /// Throws ValidationError on inconsistent sizes, non-increasing times,
  /// a pulse product different from the identity, or a pulse that does not
  /// carry one toggling-frame type into the next.
  void validate() const;
};

/// Pulses carrying each type into the next (right action, sigma_{k+1} =
/// sigma_k pi_k^-1) followed by the pulse closing the product to identity.
/// Throws ValidationError when a step needs a transposition other than
/// P12/P23 or a 3-cycle other than P/Pinv.
std::vector<PulseKind> pulses_for_schedule(std::span<const HamiltonianType> hamiltonians);

/// Builds and validates a sequence, deriving pulses from the schedule.
PulseSequence make_sequence(Group group, int order, std::vector<HamiltonianType> hamiltonians,
                            std::vector<double> times);

/// Toggling-frame types produced by the pulses alone: interval k evolves
/// under Q_{k-1}^dagger H1 Q_{k-1}, Q_k = P_k ... P_1.
std::vector<HamiltonianType> toggling_frame_types(std::span<const PulseKind> pulses);

/// Product of all pulse unitaries, last pulse leftmost.
Matrix8cd pulse_product(const PulseSequence& seq);

/// t_j = sin^2(j pi / (2(n+1))), j = 1..n.
std::vector<double> udd_times(int n);

/// Schedules: first 2n+1 entries of {H1,H2,H3,H2}; first 5n+1 entries
/// of {H1,H4,H2,H5,H3,H6,H3,H5,H2,H4}.
std::vector<HamiltonianType> a3_schedule(int n);
std::vector<HamiltonianType> s3_schedule(int n);
/// Alternating H1/H4 schedule of n+1 intervals; the P12 swap plays the
/// role of the Pauli flip, so the first switching function is the UDD one.
std::vector<HamiltonianType> udd_schedule(int n);

PulseSequence udd_sequence(int n);
/// Orders 1..10 come from the stored tables, others from the solver.
PulseSequence a3_sequence(int n);
PulseSequence s3_sequence(int n);

/// Per-interval switching function values.
struct SwitchingFunctions {
  Group group = Group::custom;
  std::vector<std::string> names;
  /// values[f][k]: function f on interval k, in {-1, 0, 1}.
  std::vector<std::vector<int>> values;
  /// True for gauge-fixing rows that are not needed for decoupling (the S3
  /// even/odd weighting).
  std::vector<bool> normalization;

  std::size_t count() const { return values.size(); }
};

/// Value table per type (rows H1..H6) for the phase-difference functions
/// f1, f2, f3 (coefficients of B1, B2, B3 in theta1 - theta2).
std::array<int, 3> phase_difference_values(HamiltonianType type);

/// Function set used for the sequence group:
///  udd    - f (H1 -> +1, H4 -> -1);
///  a3     - f1, f2;
///  s3     - u1, u2 (B1,B2 coefficients of theta1-theta2), u3, u4 (same for
///           theta2-theta3) and the parity function (normalization);
///  custom - as a3 when every type is even, otherwise as s3.
/// Throws ValidationError when an a3/udd sequence contains foreign types.
SwitchingFunctions switching_functions(const PulseSequence& seq);
SwitchingFunctions switching_functions(Group group, std::span<const HamiltonianType> hamiltonians);

}  // namespace exdd
