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

#include "exdd/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "exdd/error.hpp"
#include "exdd/random.hpp"
#include "exdd/search.hpp"

namespace exdd {
namespace {

// Stream tags for per-trial seed derivation.
constexpr std::uint64_t kTagClassicalBath = 1;
constexpr std::uint64_t kTagClassicalState = 2;
constexpr std::uint64_t kTagSpinModel = 3;
constexpr std::uint64_t kTagBathState = 4;
constexpr std::uint64_t kTagQuantumState = 5;

constexpr double kMicrosecond = 1e-6;

void check_time(double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw ValidationError("total time must be finite and non-negative");
}

/// Runs body(i) for i in [0, n) on `threads` workers.
template <class Body>
void parallel_for(int n, int threads, Body body) {
  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min(threads, n); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

std::array<double, 3> accumulated_phases(const PulseSequence& seq, const ClassicalBath& bath, double T) {
  check_time(T);
  const auto b = seq.boundaries();
  std::array<double, 3> theta{};
  for (std::size_t k = 0; k < seq.intervals(); ++k)
    for (int j = 0; j < 3; ++j)
      theta[static_cast<std::size_t>(j)] += bath.integral(seq.hamiltonians[k].bath_seen_by(j), T * b[k], T * b[k + 1]);
  return theta;
}

double classical_fidelity_fast(const PulseSequence& seq, const ClassicalBath& bath, double T, const DfsState& state) {
  return closed_form_fidelity(fidelity_coefficients(state.r(), state.phi()), accumulated_phases(seq, bath, T));
}

double classical_infidelity_fast(const PulseSequence& seq, const ClassicalBath& bath, double T,
                                 const DfsState& state) {
  return closed_form_infidelity(fidelity_coefficients(state.r(), state.phi()), accumulated_phases(seq, bath, T));
}

Matrix8cd classical_propagator(const PulseSequence& seq, const ClassicalBath& bath, double T) {
  check_time(T);
  const auto b = seq.boundaries();
  Matrix8cd u = Matrix8cd::Identity();
  for (std::size_t k = 0; k < seq.intervals(); ++k) {
    std::array<double, 3> phi{};
    for (int j = 0; j < 3; ++j) phi[static_cast<std::size_t>(j)] = bath.integral(j, T * b[k], T * b[k + 1]);
    Vector8cd diag;
    for (int x = 0; x < 8; ++x) {
      double angle = 0.0;
      for (int j = 0; j < 3; ++j) angle += ((x >> (2 - j)) & 1 ? -1.0 : 1.0) * phi[static_cast<std::size_t>(j)];
      diag[x] = std::polar(1.0, -angle);
    }
    u = diag.asDiagonal() * u;
    if (seq.pulses[k] != PulseKind::none) u = pulse_unitary(seq.pulses[k]) * u;
  }
  return u;
}

double classical_fidelity_unitary(const PulseSequence& seq, const ClassicalBath& bath, double T,
                                  const DfsState& state) {
  return encoded_fidelity(classical_propagator(seq, bath, T), state);
}

SpinBathPropagator::SpinBathPropagator(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols() || h.rows() == 0) throw ValidationError("Hamiltonian must be a non-empty square matrix");
  const double scale = std::max(1.0, h.cwiseAbs().maxCoeff());
  if ((h - h.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) throw ValidationError("Hamiltonian is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
  vectors_ = solver.eigenvectors();
  values_ = solver.eigenvalues();
}

void SpinBathPropagator::evolve(double t, Eigen::VectorXcd& state) const {
  if (state.size() != values_.size()) throw ValidationError("state dimension does not match the Hamiltonian");
  const Eigen::VectorXd re = vectors_.transpose() * state.real();
  const Eigen::VectorXd im = vectors_.transpose() * state.imag();
  Eigen::VectorXd out_re(re.size()), out_im(re.size());
  for (Eigen::Index i = 0; i < re.size(); ++i) {
    const std::complex<double> c = std::complex<double>(re[i], im[i]) * std::polar(1.0, -values_[i] * t);
    out_re[i] = c.real();
    out_im[i] = c.imag();
  }
  state.real() = vectors_ * out_re;
  state.imag() = vectors_ * out_im;
}

Eigen::MatrixXcd SpinBathPropagator::propagator(double t) const {
  Eigen::VectorXcd phases(values_.size());
  for (Eigen::Index i = 0; i < values_.size(); ++i) phases[i] = std::polar(1.0, -values_[i] * t);
  const Eigen::MatrixXcd v = vectors_.cast<std::complex<double>>();
  return v * phases.asDiagonal() * v.adjoint();
}

Eigen::VectorXcd product_state(const DfsState& state, const Eigen::VectorXcd& bath_state) {
  const Vector8cd sys = state.system_vector();
  Eigen::VectorXcd out(8 * bath_state.size());
  for (int s = 0; s < 8; ++s) out.segment(s * bath_state.size(), bath_state.size()) = sys[s] * bath_state;
  return out;
}

Eigen::VectorXcd quantum_evolve(const PulseSequence& seq, const SpinBathPropagator& propagator, double T,
                                Eigen::VectorXcd state) {
  check_time(T);
  if (propagator.dim() % 8 != 0 || state.size() != propagator.dim())
    throw ValidationError("state dimension does not match the Hamiltonian");
  const Eigen::Index env = propagator.dim() / 8;
  const auto lengths = seq.interval_lengths();
  for (std::size_t k = 0; k < seq.intervals(); ++k) {
    propagator.evolve(T * lengths[k], state);
    if (seq.pulses[k] == PulseKind::none) continue;
    // Column s of the view holds the environment amplitudes of system state s.
    Eigen::Map<Eigen::MatrixXcd> view(state.data(), env, 8);
    const Eigen::MatrixXcd permuted = view * pulse_unitary(seq.pulses[k]).transpose();
    view = permuted;
  }
  return state;
}

double quantum_fidelity(const PulseSequence& seq, const SpinBathPropagator& propagator, double T,
                        const DfsState& state, const Eigen::VectorXcd& bath_state) {
  if (std::abs(bath_state.norm() - 1.0) > 1e-12) throw ValidationError("bath state must be a unit vector");
  const Eigen::VectorXcd out = quantum_evolve(seq, propagator, T, product_state(state, bath_state));
  return encoded_fidelity_of_state(std::span<const std::complex<double>>(out.data(), static_cast<std::size_t>(out.size())),
                                   static_cast<int>(bath_state.size()), state);
}

double quantum_fidelity(const PulseSequence& seq, const SpinBathModel& model, double T, const DfsState& state,
                        const Eigen::VectorXcd& bath_state) {
  return quantum_fidelity(seq, SpinBathPropagator(model), T, state, bath_state);
}

DfsState random_dfs_state(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = std::sqrt(unit(rng));
  const double phi = kTwoPi * unit(rng);
  return DfsState(r, phi, haar_state(2, splitmix64(seed)));
}

std::string_view to_string(SimulationKind kind) { return kind == SimulationKind::classical ? "classical" : "quantum"; }

SimulationKind parse_simulation_kind(std::string_view text) {
  if (text == "classical") return SimulationKind::classical;
  if (text == "quantum") return SimulationKind::quantum;
  throw InputError("unknown simulation kind '" + std::string(text) + "' (expected classical or quantum)");
}

PulseSequence simulation_sequence(SimulationKind kind, int order) {
  if (order < 0) throw ValidationError("order must be non-negative");
  if (kind == SimulationKind::classical || order == 0) return a3_sequence(order);
  if (order <= 2) return s3_sequence(order);
  if (order == 3) return qdd3_sequence();
  throw ValidationError("no quantum-bath sequence of order " + std::to_string(order) + " is available");
}

SweepResult sweep_infidelity(const SweepOptions& options) {
  std::vector<PulseSequence> sequences;
  for (int n : options.orders) sequences.push_back(simulation_sequence(options.kind, n));
  return sweep_infidelity(options, sequences);
}

SweepResult sweep_infidelity(const SweepOptions& options, const std::vector<PulseSequence>& sequences) {
  if (sequences.size() != options.orders.size()) throw ValidationError("one sequence per order required");
  if (options.T_us.empty()) throw ValidationError("time grid is empty");
  for (std::size_t i = 0; i < options.T_us.size(); ++i)
    if (!(options.T_us[i] > 0.0) || (i > 0 && !(options.T_us[i] > options.T_us[i - 1])))
      throw ValidationError("time grid must be positive and ascending");
  const bool classical = options.kind == SimulationKind::classical;
  const int trials = classical ? options.bath_instances * options.states : options.trials;
  if (trials < 1 || (classical && (options.bath_instances < 1 || options.states < 1)))
    throw ValidationError("at least one trial is required");

  const std::size_t n_orders = sequences.size(), n_times = options.T_us.size();
  // infidelity[trial][order][time]
  std::vector<std::vector<std::vector<double>>> infidelity(
      static_cast<std::size_t>(trials), std::vector<std::vector<double>>(n_orders, std::vector<double>(n_times)));
  parallel_for(trials, options.threads, [&](int t) {
    auto& out = infidelity[static_cast<std::size_t>(t)];
    if (classical) {
      const ClassicalBathModel bath(derive_seed(options.seed, kTagClassicalBath, static_cast<std::uint64_t>(t / options.states)),
                                    options.classical);
      const DfsState state =
          random_dfs_state(derive_seed(options.seed, kTagClassicalState, static_cast<std::uint64_t>(t % options.states)));
      for (std::size_t o = 0; o < n_orders; ++o)
        for (std::size_t i = 0; i < n_times; ++i)
          out[o][i] = classical_infidelity_fast(sequences[o], bath, options.T_us[i] * kMicrosecond, state);
    } else {
      const auto u = static_cast<std::uint64_t>(t);
      const SpinBathPropagator propagator(SpinBathModel(derive_seed(options.seed, kTagSpinModel, u), options.quantum));
      const Eigen::VectorXcd bath_state = haar_state(SpinBathModel::kBathDim, derive_seed(options.seed, kTagBathState, u));
      const DfsState state = random_dfs_state(derive_seed(options.seed, kTagQuantumState, u));
      for (std::size_t o = 0; o < n_orders; ++o)
        for (std::size_t i = 0; i < n_times; ++i) {
          const double f = quantum_fidelity(sequences[o], propagator, options.T_us[i] * kMicrosecond, state, bath_state);
          out[o][i] = std::clamp(1.0 - f, 0.0, 1.0);
        }
    }
  });

  SweepResult result;
  result.kind = options.kind;
  result.window = options.window;
  for (std::size_t o = 0; o < n_orders; ++o) {
    std::vector<double> means;
    for (std::size_t i = 0; i < n_times; ++i) {
      double sum = 0.0;
      for (const auto& trial : infidelity) sum += trial[o][i];
      const double mean = sum / trials;
      double var = 0.0;
      for (const auto& trial : infidelity) var += (trial[o][i] - mean) * (trial[o][i] - mean);
      const double stderr_value = trials > 1 ? std::sqrt(var / (trials - 1) / trials) : 0.0;
      result.points.push_back({options.orders[o], options.T_us[i], trials, mean, stderr_value});
      means.push_back(mean);
    }
    OrderFit fit;
    fit.order = options.orders[o];
    fit.expected_exponent = 2 * (options.orders[o] + 1);
    try {
      fit.fit = fit_exponent(options.T_us, means, options.window);
      fit.valid = true;
    } catch (const ValidationError& e) {
      fit.message = e.what();
    }
    result.fits.push_back(std::move(fit));
  }
  return result;
}

}  // namespace exdd
