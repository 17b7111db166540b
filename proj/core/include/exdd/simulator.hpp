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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "exdd/bath.hpp"
#include "exdd/dfs.hpp"
#include "exdd/fit.hpp"
#include "exdd/sequence.hpp"

namespace exdd {

/// theta_j(T) = int_0^T B_{alpha_j(s)}(s) ds, the bath seen by qubit j
/// following the sequence's toggling-frame types.
std::array<double, 3> accumulated_phases(const PulseSequence& seq, const ClassicalBath& bath, double T);

/// Closed-form fidelity from the accumulated phases.
double classical_fidelity_fast(const PulseSequence& seq, const ClassicalBath& bath, double T, const DfsState& state);
/// 1 - F from the same route, evaluated without cancellation.
double classical_infidelity_fast(const PulseSequence& seq, const ClassicalBath& bath, double T,
                                 const DfsState& state);

/// Lab-frame propagator: each qubit dephases under its own bath, the
/// physical permutation pulses are applied between intervals.
Matrix8cd classical_propagator(const PulseSequence& seq, const ClassicalBath& bath, double T);
double classical_fidelity_unitary(const PulseSequence& seq, const ClassicalBath& bath, double T,
                                  const DfsState& state);

/// exp(-i H t) for a fixed real symmetric H through one eigendecomposition.
class SpinBathPropagator {
 public:
  /// Throws ValidationError unless h is square and symmetric to 1e-12 relative.
  explicit SpinBathPropagator(const Eigen::MatrixXd& h);
  explicit SpinBathPropagator(const SpinBathModel& model) : SpinBathPropagator(model.hamiltonian()) {}

  int dim() const { return static_cast<int>(values_.size()); }
  /// state <- exp(-i H t) state.
  void evolve(double t, Eigen::VectorXcd& state) const;
  Eigen::MatrixXcd propagator(double t) const;

 private:
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd values_;
};

/// System (x) bath product state, system index most significant.
Eigen::VectorXcd product_state(const DfsState& state, const Eigen::VectorXcd& bath_state);

/// Lab-frame evolution of a 512-dim state through the sequence scaled to T.
Eigen::VectorXcd quantum_evolve(const PulseSequence& seq, const SpinBathPropagator& propagator, double T,
                                Eigen::VectorXcd state);

double quantum_fidelity(const PulseSequence& seq, const SpinBathPropagator& propagator, double T,
                        const DfsState& state, const Eigen::VectorXcd& bath_state);
double quantum_fidelity(const PulseSequence& seq, const SpinBathModel& model, double T, const DfsState& state,
                        const Eigen::VectorXcd& bath_state);

/// Encoded amplitude r with r^2 uniform, uniform phase, Haar gauge state.
DfsState random_dfs_state(std::uint64_t seed);

enum class SimulationKind { classical, quantum };
std::string_view to_string(SimulationKind kind);
SimulationKind parse_simulation_kind(std::string_view text);

/// Sequences used for the scaling sweeps: A3 orders for classical baths;
/// free evolution, S3 orders 1-2 and the 26-interval sequence for order 3
/// against quantum baths.
PulseSequence simulation_sequence(SimulationKind kind, int order);

struct SweepOptions {
  SimulationKind kind = SimulationKind::classical;
  std::vector<int> orders;
  /// Total times in microseconds, positive and ascending.
  std::vector<double> T_us;
  /// Classical trials: every bath instance against every state.
  int bath_instances = 10;
  int states = 20;
  /// Quantum trials: one model, bath state and DFS state each.
  int trials = 16;
  std::uint64_t seed = 1;
  ClassicalBathParams classical;
  SpinBathParams quantum;
  FitWindow window;
  int threads = 0;
};

struct SweepPoint {
  int order = 0;
  double T_us = 0.0;
  int trials = 0;
  double mean_infidelity = 0.0;
  double stderr_infidelity = 0.0;
};

struct OrderFit {
  int order = 0;
  int expected_exponent = 0;
  /// False when the window holds fewer than 3 points.
  bool valid = false;
  std::string message;
  ExponentFit fit;
};

struct SweepResult {
  SimulationKind kind = SimulationKind::classical;
  FitWindow window;
  std::vector<SweepPoint> points;
  std::vector<OrderFit> fits;
};

/// Mean infidelity per (order, T) over seeded trials and a log-log fit per
/// order. Bath instances and states depend only on (seed, trial), so every
/// order and T sees the same ensemble.
SweepResult sweep_infidelity(const SweepOptions& options);
/// Same with explicit sequences, one per entry of options.orders.
SweepResult sweep_infidelity(const SweepOptions& options, const std::vector<PulseSequence>& sequences);

}  // namespace exdd
