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
#include <complex>
#include <span>

#include <Eigen/Dense>

#include "exdd/permutation.hpp"

namespace exdd {

/// The eight states |1>..|8> written in the computational basis
/// |000>..|111> (qubit 1 most significant). Row k-1 holds |k>.
/// Rows 0..3 span the valid (total spin 1/2) subspace; within it row
/// 2a+g carries encoded value a and gauge value g.
struct DfsBasis {
  Eigen::Matrix<double, 8, 8> rows;

  Eigen::Matrix<double, 8, 1> state(int k) const { return rows.row(k - 1).transpose(); }
  /// Amplitude <computational|k>.
  double amplitude(int computational, int k) const { return rows(k - 1, computational); }
};

const DfsBasis& dfs_basis();

/// Pi = sum_{k=1..4} |k><k| in the computational basis.
Matrix8cd projector_valid();

struct FidelityCoefficients {
  double c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  double sum() const { return c0 + c1 + c2 + c3; }
};

/// Coefficients of the phase-difference fidelity expression for the encoded
/// state (r, sqrt(1-r^2) e^{i phi}).
FidelityCoefficients fidelity_coefficients(double r, double phi);

/// F = c0 + c1 cos2(th2-th3) + c2 cos2(th3-th1) + c3 cos2(th1-th2).
double closed_form_fidelity(const FidelityCoefficients& c, const std::array<double, 3>& theta);
/// 1 - F evaluated as 2 sum c_j sin^2(...), accurate for tiny infidelities.
double closed_form_infidelity(const FidelityCoefficients& c, const std::array<double, 3>& theta);

/// Encoded amplitude pair (r, phi) plus a gauge state.
///
/// The relative phase is referenced to the encoded-one pair (-|3>, -|4>):
/// the state is r|0_L> + sqrt(1-r^2) e^{i phi} |1_L> with |0_L> -> |1>,|2>
/// and |1_L> -> -|3>,-|4>. With this reference the closed-form fidelity
/// coefficients hold exactly against the basis above.
class DfsState {
 public:
  DfsState(double r, double phi, Eigen::Vector2cd gauge);
  DfsState(double r, double phi) : DfsState(r, phi, Eigen::Vector2cd(1.0, 0.0)) {}

  double r() const { return r_; }
  double phi() const { return phi_; }
  const Eigen::Vector2cd& gauge() const { return gauge_; }

  /// Encoded amplitudes in the (|0_L>, |1_L>) frame used by the basis rows.
  Eigen::Vector2cd encoded_amplitudes() const;
  /// Full 3-qubit state vector in the computational basis.
  Vector8cd system_vector() const;

 private:
  double r_;
  double phi_;
  Eigen::Vector2cd gauge_;
};

/// F = sum_mu |<mu|<psi_e| Pi U Pi |psi_e>|psi_g>|^2.
/// Throws ValidationError when max|U^dagger U - I| > 1e-12.
double encoded_fidelity(const Matrix8cd& u, const DfsState& state);

/// Same quantity for an already evolved system (x) environment state.
/// `evolved` has 8 * env_dim entries, system index most significant; the
/// environment is traced out by summing over its basis.
double encoded_fidelity_of_state(std::span<const std::complex<double>> evolved, int env_dim,
                                 const DfsState& state);

/// max |U^dagger U - I|.
double unitarity_defect(const Eigen::Ref<const Eigen::MatrixXcd>& u);

inline constexpr double kUnitarityTolerance = 1e-12;

}  // namespace exdd
