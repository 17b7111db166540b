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

#include <cmath>
#include <map>
#include <random>

#include "gtest/gtest.h"

#include "exdd/error.hpp"
#include "exdd/search.hpp"
#include "exdd/simulator.hpp"

using namespace exdd;
using cd = std::complex<double>;

namespace {

constexpr int kSpins = 9;

/// Product of single-spin operators, spin 0 most significant.
Eigen::MatrixXcd kron_chain(const std::array<Eigen::Matrix2cd, kSpins>& factors) {
  // Build from the least significant spin up: out <- f (x) out.
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    const auto& f = *it;
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) next.block(i * out.rows(), j * out.cols(), out.rows(), out.cols()) = f(i, j) * out;
    out = next;
  }
  return out;
}

std::array<Eigen::Matrix2cd, 3> pauli_matrices() {
  Eigen::Matrix2cd x, y, z;
  x << 0, 1, 1, 0;
  y << 0, cd(0, -1), cd(0, 1), 0;
  z << 1, 0, 0, -1;
  return {x, y, z};
}

/// sigma_a . sigma_b for spins a and b of the nine-spin register.
Eigen::MatrixXcd dot(int a, int b) {
  const auto p = pauli_matrices();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(512, 512);
  for (int c = 0; c < 3; ++c) {
    std::array<Eigen::Matrix2cd, kSpins> f;
    f.fill(Eigen::Matrix2cd::Identity());
    f[static_cast<std::size_t>(a)] = p[static_cast<std::size_t>(c)];
    f[static_cast<std::size_t>(b)] = p[static_cast<std::size_t>(c)];
    out += kron_chain(f);
  }
  return out;
}

/// Spin-bath Hamiltonian with the bath spins of qubit j attached to qubit sigma(j).
Eigen::MatrixXcd oracle_hamiltonian(const SpinBathModel& m, const Permutation3& sigma) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(512, 512);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 2; ++k) h += m.params().J * m.system_coupling(j, k) * dot(sigma(j), 3 + 2 * j + k);
  for (int b = 0; b < 6; ++b)
    for (int c = b + 1; c < 6; ++c) h += m.params().beta * m.bath_coupling(b, c) * dot(3 + b, 3 + c);
  return h;
}

SpinBathModel small_model(std::uint64_t seed) { return SpinBathModel(seed, SpinBathParams{1.0, 0.3}); }

}  // namespace

TEST(accumulated_phases, constant_fields_average_over_the_cycle) {
  const auto bath = ClassicalBathModel::constant({1.0, 2.0, 4.0});
  const auto theta = accumulated_phases(a3_sequence(1), bath, 3.0);
  for (double t : theta) EXPECT_NEAR(t, 7.0, 1e-14);
  const auto free = accumulated_phases(a3_sequence(0), bath, 2.0);
  EXPECT_NEAR(free[0], 2.0, 1e-15);
  EXPECT_NEAR(free[1], 4.0, 1e-15);
  EXPECT_NEAR(free[2], 8.0, 1e-15);
}

TEST(accumulated_phases, zero_and_linear_fields) {
  const auto zero = ClassicalBathModel::constant({0.0, 0.0, 0.0});
  for (double t : accumulated_phases(a3_sequence(2), zero, 1.0)) EXPECT_EQ(t, 0.0);
  const FunctionBath linear({[](double t) { return t; }, [](double) { return 0.0; }, [](double) { return 0.0; }});
  const auto theta = accumulated_phases(a3_sequence(0), linear, 1.0);
  EXPECT_NEAR(theta[0], 0.5, 1e-14);
  EXPECT_NEAR(theta[1], 0.0, 1e-15);
}

TEST(classical_bath_model, normalisation_and_integrals) {
  const ClassicalBathParams params{3.0, 5.0, 10};
  const ClassicalBathModel bath(17, params);
  for (int j = 0; j < 3; ++j) {
    // Time-averaged square over a long window approaches A^2.
    const int steps = 200000;
    const double horizon = 2000.0;
    double sq = 0.0, integral = 0.0;
    for (int i = 0; i < steps; ++i) {
      const double v = bath.value(j, (i + 0.5) * horizon / steps);
      sq += v * v;
      integral += bath.value(j, 0.5 + (i + 0.5) * 2.0 / steps) * 2.0 / steps;
    }
    EXPECT_NEAR(std::sqrt(sq / steps), 3.0, 0.15);
    EXPECT_NEAR(bath.integral(j, 0.5, 2.5), integral, 1e-8);
  }
  EXPECT_EQ(ClassicalBathModel(17, params).value(1, 0.3), bath.value(1, 0.3));
  EXPECT_NE(ClassicalBathModel(18, params).value(1, 0.3), bath.value(1, 0.3));
}

TEST(classical_fidelity, fast_and_unitary_routes_agree) {
  std::mt19937_64 rng(11);
  double worst = 0.0;
  for (int c = 0; c < 100; ++c) {
    const auto seq = c % 2 == 0 ? a3_sequence(c % 5) : s3_sequence(1 + c % 3);
    const ClassicalBathModel bath(rng(), ClassicalBathParams{});
    const auto state = random_dfs_state(rng());
    const double T = std::pow(10.0, -9.0 + 2.0 * std::uniform_real_distribution<double>()(rng));
    const double fast = classical_fidelity_fast(seq, bath, T, state);
    const double unitary = classical_fidelity_unitary(seq, bath, T, state);
    worst = std::max(worst, std::abs(fast - unitary));
    EXPECT_NEAR(1.0 - fast, classical_infidelity_fast(seq, bath, T, state), 1e-12);
  }
  EXPECT_LT(worst, 1e-12);
}

TEST(classical_fidelity, propagator_is_unitary_and_gauge_blind) {
  const ClassicalBathModel bath(4, ClassicalBathParams{});
  const auto seq = a3_sequence(3);
  EXPECT_LT(unitarity_defect(classical_propagator(seq, bath, 1e-7)), 1e-13);
  const DfsState a(0.6, 0.4, Eigen::Vector2cd(1.0, 0.0));
  const DfsState b(0.6, 0.4, Eigen::Vector2cd(cd(0.0, 0.6), cd(0.8, 0.0)));
  EXPECT_NEAR(classical_fidelity_unitary(seq, bath, 1e-7, a), classical_fidelity_unitary(seq, bath, 1e-7, b), 1e-13);
}

TEST(classical_fidelity, free_evolution_is_quadratic) {
  const ClassicalBathModel bath(9, ClassicalBathParams{});
  const auto state = random_dfs_state(2);
  const auto seq = a3_sequence(0);
  const double T = 1e-13;
  const double ratio =
      classical_infidelity_fast(seq, bath, 2 * T, state) / classical_infidelity_fast(seq, bath, T, state);
  EXPECT_NEAR(ratio, 4.0, 1e-3);
}

TEST(random_dfs_state, deterministic_and_normalised) {
  const auto a = random_dfs_state(5);
  const auto b = random_dfs_state(5);
  EXPECT_EQ(a.r(), b.r());
  EXPECT_EQ(a.phi(), b.phi());
  EXPECT_NEAR(a.system_vector().norm(), 1.0, 1e-14);
  EXPECT_GE(a.r(), 0.0);
  EXPECT_LE(a.r(), 1.0);
  EXPECT_NEAR(haar_state(64, 3).norm(), 1.0, 1e-14);
}

TEST(spin_bath_model, hamiltonian_matches_kronecker_construction) {
  const auto m = small_model(21);
  const Eigen::MatrixXd h = m.hamiltonian();
  const Eigen::MatrixXcd oracle = oracle_hamiltonian(m, Permutation3());
  EXPECT_LT((oracle.imag()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((h - oracle.real()).cwiseAbs().maxCoeff(), 1e-13);
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 2; ++k) {
      EXPECT_GE(m.system_coupling(j, k), 0.0);
      EXPECT_LE(m.system_coupling(j, k), 1.0);
    }
}

TEST(spin_bath_propagator, unitary_norm_preserving_and_exact) {
  const auto m = small_model(8);
  const SpinBathPropagator prop(m);
  EXPECT_EQ(prop.dim(), 512);
  const Eigen::MatrixXcd u = prop.propagator(0.7);
  EXPECT_LT(unitarity_defect(u), 1e-12);
  Eigen::VectorXcd v = haar_state(512, 4);
  const Eigen::VectorXcd direct = u * v;
  prop.evolve(0.7, v);
  EXPECT_NEAR(v.norm(), 1.0, 1e-13);
  EXPECT_LT((v - direct).cwiseAbs().maxCoeff(), 1e-13);
  // Against the series exp(-iHt) = sum (-iHt)^k / k! at a short time.
  const Eigen::MatrixXcd h = m.hamiltonian().cast<cd>();
  Eigen::MatrixXcd series = Eigen::MatrixXcd::Identity(512, 512), term = series;
  for (int k = 1; k < 30; ++k) {
    term = term * h * cd(0.0, -0.01) / static_cast<double>(k);
    series += term;
  }
  EXPECT_LT((series - prop.propagator(0.01)).cwiseAbs().maxCoeff(), 1e-12);
  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(4, 4);
  asym(0, 1) = 1.0;
  EXPECT_THROW(SpinBathPropagator{asym}, ValidationError);
}

TEST(quantum_fidelity, lab_frame_matches_toggling_frame_oracle) {
  const auto m = small_model(33);
  const SpinBathPropagator prop(m);
  const DfsState state = random_dfs_state(6);
  const Eigen::VectorXcd bath = haar_state(64, 7);
  for (const auto& seq : {a3_sequence(1), s3_sequence(1), a3_sequence(2)}) {
    const double T = 0.9;
    std::map<int, Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>> cache;
    Eigen::VectorXcd psi = product_state(state, bath);
    const auto lengths = seq.interval_lengths();
    for (std::size_t k = 0; k < seq.intervals(); ++k) {
      const auto& type = seq.hamiltonians[k];
      auto it = cache.find(type.label());
      if (it == cache.end())
        it = cache.emplace(type.label(), Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(
                                             oracle_hamiltonian(m, type.permutation())))
                 .first;
      const auto& es = it->second;
      const Eigen::VectorXcd ph = (es.eigenvalues().cast<cd>() * cd(0.0, -T * lengths[k])).array().exp();
      psi = es.eigenvectors() * (ph.asDiagonal() * (es.eigenvectors().adjoint() * psi));
    }
    const double oracle = encoded_fidelity_of_state(std::span<const cd>(psi.data(), 512), 64, state);
    EXPECT_NEAR(quantum_fidelity(seq, prop, T, state, bath), oracle, 1e-11);
    EXPECT_LT(oracle, 1.0 - 1e-6);
  }
}

TEST(quantum_fidelity, no_system_coupling_is_perfect) {
  const SpinBathModel m(3, SpinBathParams{0.0, 1.0});
  const auto state = random_dfs_state(1);
  for (const auto& seq : {a3_sequence(1), s3_sequence(2), qdd3_sequence()})
    EXPECT_NEAR(quantum_fidelity(seq, m, 5.0, state, haar_state(64, 2)), 1.0, 1e-12);
}

TEST(quantum_fidelity, third_order_sequence_protects_every_gauge_state) {
  const auto m = small_model(2);
  const auto bath = haar_state(64, 1);
  const DfsState a(0.3, 1.1, Eigen::Vector2cd(1.0, 0.0));
  const DfsState b(0.3, 1.1, Eigen::Vector2cd(cd(0.0, 0.8), cd(0.6, 0.0)));
  const auto seq = qdd3_sequence();
  const double fa = 1.0 - quantum_fidelity(seq, m, 1e-2, a, bath);
  const double fb = 1.0 - quantum_fidelity(seq, m, 1e-2, b, bath);
  EXPECT_LT(std::abs(fa), 1e-9);
  EXPECT_LT(std::abs(fb), 1e-9);
  EXPECT_THROW(quantum_fidelity(seq, m, 1e-2, a, Eigen::VectorXcd::Ones(64)), ValidationError);
}

TEST(simulation_sequence, choices) {
  EXPECT_EQ(simulation_sequence(SimulationKind::classical, 3).group, Group::a3);
  EXPECT_EQ(simulation_sequence(SimulationKind::quantum, 2).group, Group::s3);
  EXPECT_EQ(simulation_sequence(SimulationKind::quantum, 3).intervals(), 26u);
  EXPECT_EQ(simulation_sequence(SimulationKind::quantum, 0).intervals(), 1u);
  EXPECT_EQ(parse_simulation_kind("quantum"), SimulationKind::quantum);
  EXPECT_THROW(parse_simulation_kind("lindblad"), InputError);
}

TEST(fit_exponent, power_laws) {
  std::vector<double> T, y4, y6;
  for (int i = 0; i < 12; ++i) {
    T.push_back(std::pow(10.0, -3.0 + 0.1 * i));
    y4.push_back(std::pow(T.back(), 4));
    y6.push_back(3.0 * std::pow(T.back(), 6));
  }
  const auto f4 = fit_exponent(T, y4);
  EXPECT_NEAR(f4.exponent, 4.0, 1e-12);
  EXPECT_NEAR(f4.r2, 1.0, 1e-12);
  const auto f6 = fit_exponent(T, y6, FitWindow{1e-30, 1.0});
  EXPECT_NEAR(f6.exponent, 6.0, 1e-12);
  EXPECT_NEAR(f6.intercept, std::log(3.0), 1e-10);
  EXPECT_NEAR(f6.ci_low, 6.0, 1e-9);
  EXPECT_NEAR(f6.ci_high, 6.0, 1e-9);
}

TEST(fit_exponent, window_excludes_plateau) {
  std::vector<double> T, y;
  for (int i = 0; i < 20; ++i) {
    T.push_back(std::pow(10.0, -6.0 + 0.5 * i));
    y.push_back(std::min(0.5, T.back() * T.back()));
  }
  const auto fit = fit_exponent(T, y);
  EXPECT_NEAR(fit.exponent, 2.0, 1e-12);
  EXPECT_THROW(fit_exponent(T, y, FitWindow{1.0, 2.0}), ValidationError);
  const std::vector<double> two{1.0, 2.0};
  EXPECT_THROW(fit_exponent(two, two), ValidationError);
}

TEST(sweep_infidelity, deterministic_and_thread_independent) {
  SweepOptions o;
  o.kind = SimulationKind::classical;
  o.orders = {0, 2};
  o.T_us = {1e-5, 1e-4, 1e-3, 1e-2, 1e-1};
  o.bath_instances = 3;
  o.states = 4;
  o.threads = 1;
  const auto a = sweep_infidelity(o);
  o.threads = 3;
  const auto b = sweep_infidelity(o);
  ASSERT_EQ(a.points.size(), 10u);
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].mean_infidelity, b.points[i].mean_infidelity);
    EXPECT_EQ(a.points[i].stderr_infidelity, b.points[i].stderr_infidelity);
    EXPECT_EQ(a.points[i].trials, 12);
  }
  ASSERT_EQ(a.fits.size(), 2u);
  EXPECT_EQ(a.fits[1].expected_exponent, 6);
  o.seed = 2;
  EXPECT_NE(sweep_infidelity(o).points[0].mean_infidelity, a.points[0].mean_infidelity);
}

TEST(sweep_infidelity, quantum_free_evolution_is_quadratic) {
  SweepOptions o;
  o.kind = SimulationKind::quantum;
  o.orders = {0};
  o.T_us = {1e-7, 3e-7, 1e-6, 3e-6, 1e-5};
  o.trials = 2;
  const auto r = sweep_infidelity(o);
  ASSERT_TRUE(r.fits[0].valid);
  EXPECT_NEAR(r.fits[0].fit.exponent, 2.0, 0.05);
}

TEST(sweep_infidelity, rejects_bad_options) {
  SweepOptions o;
  o.orders = {1};
  o.T_us = {1e-3, 1e-4};
  EXPECT_THROW(sweep_infidelity(o), ValidationError);
}
