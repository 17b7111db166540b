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

#include "exdd/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exdd/error.hpp"
#include "exdd/solver.hpp"
#include "exdd/tables.hpp"

namespace exdd {
namespace {

constexpr std::array<Permutation3, 6> kTypePermutations = Permutation3::all();

}  // namespace

HamiltonianType::HamiltonianType(int label) : label_(label) {
  if (label < 1 || label > 6) throw ValidationError("Hamiltonian type must be 1..6, got " + std::to_string(label));
}

HamiltonianType HamiltonianType::from_permutation(const Permutation3& sigma) {
  for (int k = 0; k < 6; ++k)
    if (kTypePermutations[static_cast<std::size_t>(k)] == sigma) return HamiltonianType(k + 1);
  throw ValidationError("not a permutation of three elements");
}

const Permutation3& HamiltonianType::permutation() const {
  return kTypePermutations[static_cast<std::size_t>(label_ - 1)];
}

std::string_view to_string(PulseKind kind) {
  switch (kind) {
    case PulseKind::none: return "none";
    case PulseKind::P: return "P";
    case PulseKind::Pinv: return "Pinv";
    case PulseKind::P12: return "P12";
    case PulseKind::P23: return "P23";
  }
  return "none";
}

PulseKind parse_pulse(std::string_view text) {
  if (text == "none") return PulseKind::none;
  if (text == "P") return PulseKind::P;
  if (text == "Pinv") return PulseKind::Pinv;
  if (text == "P12") return PulseKind::P12;
  if (text == "P23") return PulseKind::P23;
  throw InputError("unknown pulse '" + std::string(text) + "'");
}

Permutation3 pulse_permutation(PulseKind kind) {
  const Permutation3 p12{1, 0, 2};
  const Permutation3 p23{0, 2, 1};
  switch (kind) {
    case PulseKind::none: return {};
    case PulseKind::P12: return p12;
    case PulseKind::P23: return p23;
    case PulseKind::P: return p23 * p12;
    case PulseKind::Pinv: return (p23 * p12).inverse();
  }
  return {};
}

Matrix8cd pulse_unitary(PulseKind kind) { return qubit_permutation_unitary(pulse_permutation(kind)); }

std::optional<PulseKind> pulse_for_permutation(const Permutation3& pi) {
  for (PulseKind k : {PulseKind::none, PulseKind::P, PulseKind::Pinv, PulseKind::P12, PulseKind::P23})
    if (pulse_permutation(k) == pi) return k;
  return std::nullopt;
}

std::string_view to_string(Group group) {
  switch (group) {
    case Group::udd: return "udd";
    case Group::a3: return "a3";
    case Group::s3: return "s3";
    case Group::custom: return "custom";
  }
  return "custom";
}

Group parse_group(std::string_view text) {
  if (text == "udd" || text == "UDD") return Group::udd;
  if (text == "a3" || text == "A3") return Group::a3;
  if (text == "s3" || text == "S3") return Group::s3;
  if (text == "custom") return Group::custom;
  throw InputError("unknown group '" + std::string(text) + "'");
}

std::vector<double> PulseSequence::boundaries() const {
  std::vector<double> b;
  b.reserve(times.size() + 2);
  b.push_back(0.0);
  b.insert(b.end(), times.begin(), times.end());
  b.push_back(1.0);
  return b;
}

std::vector<double> PulseSequence::interval_lengths() const {
  const auto b = boundaries();
  std::vector<double> out(b.size() - 1);
  for (std::size_t k = 0; k + 1 < b.size(); ++k) out[k] = b[k + 1] - b[k];
  return out;
}

std::vector<PulseKind> pulses_for_schedule(std::span<const HamiltonianType> hamiltonians) {
  std::vector<PulseKind> out;
  out.reserve(hamiltonians.size());
  for (std::size_t k = 0; k < hamiltonians.size(); ++k) {
    const Permutation3& current = hamiltonians[k].permutation();
    // Last pulse undoes the accumulated frame: its permutation equals sigma_N.
    const Permutation3 pi = k + 1 < hamiltonians.size()
                                ? hamiltonians[k + 1].permutation().inverse() * current
                                : current;
    const auto pulse = pulse_for_permutation(pi);
    if (!pulse)
      throw ValidationError("no single pulse takes H" + std::to_string(hamiltonians[k].label()) +
                            (k + 1 < hamiltonians.size() ? " to H" + std::to_string(hamiltonians[k + 1].label())
                                                         : std::string(" back to the lab frame")));
    out.push_back(*pulse);
  }
  return out;
}

std::vector<HamiltonianType> toggling_frame_types(std::span<const PulseKind> pulses) {
  std::vector<HamiltonianType> out;
  out.reserve(pulses.size());
  Permutation3 frame;  // Q_{k-1} as a qubit permutation
  for (PulseKind p : pulses) {
    out.push_back(HamiltonianType::from_permutation(frame.inverse()));
    frame = pulse_permutation(p) * frame;
  }
  return out;
}

Matrix8cd pulse_product(const PulseSequence& seq) {
  Matrix8cd u = Matrix8cd::Identity();
  for (PulseKind p : seq.pulses) u = pulse_unitary(p) * u;
  return u;
}

void PulseSequence::validate() const {
  if (hamiltonians.empty()) throw ValidationError("sequence has no intervals");
  if (times.size() + 1 != hamiltonians.size())
    throw ValidationError("expected " + std::to_string(hamiltonians.size() - 1) + " switching times, got " +
                          std::to_string(times.size()));
  if (pulses.size() != hamiltonians.size())
    throw ValidationError("expected one pulse per interval");
  double prev = 0.0;
  for (double t : times) {
    if (!(t > prev && t < 1.0)) throw ValidationError("switching times must increase strictly inside (0,1)");
    prev = t;
  }
  Permutation3 total;
  for (PulseKind p : pulses) total = pulse_permutation(p) * total;
  if (!total.is_identity()) throw ValidationError("pulse product is not the identity");
  const auto frames = toggling_frame_types(pulses);
  for (std::size_t k = 0; k < frames.size(); ++k)
    if (frames[k] != hamiltonians[k])
      throw ValidationError("pulse before interval " + std::to_string(k + 1) + " does not produce H" +
                            std::to_string(hamiltonians[k].label()));
}

PulseSequence make_sequence(Group group, int order, std::vector<HamiltonianType> hamiltonians,
                            std::vector<double> times) {
  PulseSequence seq;
  seq.group = group;
  seq.order = order;
  seq.pulses = pulses_for_schedule(hamiltonians);
  seq.hamiltonians = std::move(hamiltonians);
  seq.times = std::move(times);
  seq.validate();
  return seq;
}

std::vector<double> udd_times(int n) {
  if (n < 0) throw ValidationError("order must be non-negative");
  std::vector<double> t(static_cast<std::size_t>(n));
  // Lower half from the formula, upper half mirrored so the times are
  // exactly symmetric about 1/2.
  for (int j = 1; 2 * j <= n + 1; ++j) {
    const double s = std::sin(j * std::numbers::pi / (2.0 * (n + 1)));
    t[static_cast<std::size_t>(j - 1)] = 2 * j == n + 1 ? 0.5 : s * s;
    t[static_cast<std::size_t>(n - j)] = 2 * j == n + 1 ? 0.5 : 1.0 - s * s;
  }
  return t;
}

std::vector<HamiltonianType> a3_schedule(int n) {
  if (n < 0) throw ValidationError("order must be non-negative");
  static constexpr int kPeriod[] = {1, 2, 3, 2};
  std::vector<HamiltonianType> out;
  for (int k = 0; k < 2 * n + 1; ++k) out.emplace_back(kPeriod[k % 4]);
  return out;
}

std::vector<HamiltonianType> s3_schedule(int n) {
  if (n < 0) throw ValidationError("order must be non-negative");
  static constexpr int kPeriod[] = {1, 4, 2, 5, 3, 6, 3, 5, 2, 4};
  std::vector<HamiltonianType> out;
  for (int k = 0; k < 5 * n + 1; ++k) out.emplace_back(kPeriod[k % 10]);
  return out;
}

std::vector<HamiltonianType> udd_schedule(int n) {
  if (n < 0) throw ValidationError("order must be non-negative");
  std::vector<HamiltonianType> out;
  for (int k = 0; k <= n; ++k) out.emplace_back(k % 2 == 0 ? 1 : 4);
  return out;
}

PulseSequence udd_sequence(int n) { return make_sequence(Group::udd, n, udd_schedule(n), udd_times(n)); }

PulseSequence a3_sequence(int n) {
  auto schedule = a3_schedule(n);
  if (n == 0) return make_sequence(Group::a3, 0, std::move(schedule), {});
  std::vector<double> times;
  if (n <= tables::kMaxStoredOrder) {
    times = tables::a3_times(n);
  } else {
    times = solve_times(schedule, n, default_guess(schedule.size() - 1));
  }
  return make_sequence(Group::a3, n, std::move(schedule), std::move(times));
}

PulseSequence s3_sequence(int n) {
  auto schedule = s3_schedule(n);
  if (n == 0) return make_sequence(Group::s3, 0, std::move(schedule), {});
  std::vector<double> times;
  if (n <= tables::kMaxStoredOrder) {
    times = tables::s3_times(n);
  } else {
    times = solve_times(schedule, n, default_guess(schedule.size() - 1));
  }
  return make_sequence(Group::s3, n, std::move(schedule), std::move(times));
}

std::array<int, 3> phase_difference_values(HamiltonianType type) {
  std::array<int, 3> f{};
  const int a1 = type.bath_seen_by(0);
  const int a2 = type.bath_seen_by(1);
  for (int i = 0; i < 3; ++i) f[static_cast<std::size_t>(i)] = (a1 == i) - (a2 == i);
  return f;
}

SwitchingFunctions switching_functions(const PulseSequence& seq) {
  return switching_functions(seq.group, seq.hamiltonians);
}

SwitchingFunctions switching_functions(Group group, std::span<const HamiltonianType> hamiltonians) {
  const bool all_even = std::all_of(hamiltonians.begin(), hamiltonians.end(),
                                    [](HamiltonianType h) { return h.is_even(); });
  if (group == Group::custom) group = all_even ? Group::a3 : Group::s3;

  SwitchingFunctions out;
  out.group = group;
  const auto add = [&](std::string name, auto value_of, bool normalization = false) {
    std::vector<int> row;
    row.reserve(hamiltonians.size());
    for (const auto& h : hamiltonians) row.push_back(value_of(h));
    out.names.push_back(std::move(name));
    out.values.push_back(std::move(row));
    out.normalization.push_back(normalization);
  };

  switch (group) {
    case Group::udd:
      for (const auto& h : hamiltonians)
        if (h.label() != 1 && h.label() != 4) throw ValidationError("UDD sequences alternate H1 and H4 only");
      add("f", [](HamiltonianType h) { return phase_difference_values(h)[0]; });
      break;
    case Group::a3:
      if (!all_even) throw ValidationError("A3 sequences contain even permutation types only");
      add("f1", [](HamiltonianType h) { return phase_difference_values(h)[0]; });
      add("f2", [](HamiltonianType h) { return phase_difference_values(h)[1]; });
      break;
    case Group::s3:
    case Group::custom: {
      // Coefficients of B1, B2 in theta2 - theta3.
      const auto second = [](HamiltonianType h, int bath) {
        return (h.bath_seen_by(1) == bath) - (h.bath_seen_by(2) == bath);
      };
      add("u1", [](HamiltonianType h) { return phase_difference_values(h)[0]; });
      add("u2", [](HamiltonianType h) { return phase_difference_values(h)[1]; });
      add("u3", [&](HamiltonianType h) { return second(h, 0); });
      add("u4", [&](HamiltonianType h) { return second(h, 1); });
      add("parity", [](HamiltonianType h) { return h.is_even() ? 1 : -1; }, true);
      break;
    }
  }
  return out;
}

}  // namespace exdd
