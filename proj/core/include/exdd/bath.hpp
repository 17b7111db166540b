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
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace exdd {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Classical dephasing fields B_j(t), j = 0..2, in rad/s.
class ClassicalBath {
 public:
  virtual ~ClassicalBath() = default;
  virtual double value(int bath, double t) const = 0;
  /// int_{t0}^{t1} B_bath(s) ds.
  virtual double integral(int bath, double t0, double t1) const = 0;
};

struct ClassicalBathParams {
  /// RMS field strength A (rad/s).
  double rms = kTwoPi * 100e6;
  /// Largest mode frequency (rad/s).
  double omega_max = kTwoPi * 100e6;
  int modes = 10;
};

/// B_j(t) = A sum_m a_m cos(omega_m t + phi_m) with sum_m a_m^2 / 2 = 1, so
/// the time-averaged RMS is A. Integrals are evaluated in closed form.
class ClassicalBathModel final : public ClassicalBath {
 public:
  explicit ClassicalBathModel(std::uint64_t seed, ClassicalBathParams params = {});
  /// Time-independent fields b_j.
  static ClassicalBathModel constant(const std::array<double, 3>& b);

  double value(int bath, double t) const override;
  double integral(int bath, double t0, double t1) const override;

  std::uint64_t seed() const { return seed_; }
  const ClassicalBathParams& params() const { return params_; }

 private:
  ClassicalBathModel() = default;
  struct Mode {
    double amplitude, omega, phase;
  };
  std::uint64_t seed_ = 0;
  ClassicalBathParams params_;
  std::array<std::vector<Mode>, 3> modes_;
  std::array<double, 3> offset_{};
};

/// Arbitrary callables, integrated by adaptive Gauss-Kronrod (rel. tol 1e-12).
class FunctionBath final : public ClassicalBath {
 public:
  using Field = std::function<double(double)>;
  explicit FunctionBath(std::array<Field, 3> fields);

  double value(int bath, double t) const override;
  double integral(int bath, double t0, double t1) const override;

 private:
  std::array<Field, 3> fields_;
};

struct SpinBathParams {
  /// System-bath scale J (rad/s).
  double J = kTwoPi * 100e6;
  /// Intra-bath scale beta (rad/s).
  double beta = kTwoPi * 10e3;
};

/// Three system qubits coupled to six bath spins:
///   H = J sum_j sum_{b in bath(j)} r_{j,b} S_j.I_b + beta sum_{b<c} r_{b,c} I_b.I_c
/// with Pauli-vector dot products, bath(j) = {2j, 2j+1} (0-based) and
/// r uniform in [0, 1]. Basis index = system * 64 + bath, first spin of
/// each factor most significant.
class SpinBathModel {
 public:
  static constexpr int kSystemDim = 8;
  static constexpr int kBathDim = 64;
  static constexpr int kDim = kSystemDim * kBathDim;

  SpinBathModel(std::uint64_t seed, SpinBathParams params = {});
  /// Explicit couplings: system[j][b] for the two spins of qubit j, bath[b][c] for b < c.
  SpinBathModel(SpinBathParams params, std::array<std::array<double, 2>, 3> system,
                std::array<std::array<double, 6>, 6> bath);

  const SpinBathParams& params() const { return params_; }
  double system_coupling(int qubit, int k) const { return system_[qubit][k]; }
  double bath_coupling(int b, int c) const { return bath_[b][c]; }

  /// Real symmetric 512 x 512 Hamiltonian.
  Eigen::MatrixXd hamiltonian() const;

 private:
  SpinBathParams params_;
  std::array<std::array<double, 2>, 3> system_{};
  std::array<std::array<double, 6>, 6> bath_{};
};

/// Haar-random unit vector of dimension `dim`.
Eigen::VectorXcd haar_state(int dim, std::uint64_t seed);

}  // namespace exdd
