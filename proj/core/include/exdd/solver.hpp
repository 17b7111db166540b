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

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "exdd/sequence.hpp"

namespace exdd {

/// residuals(f, p) = int_0^1 f(s) s^p ds for p = 0..n-1, evaluated in closed
/// form from the piecewise-constant values.
Eigen::MatrixXd moment_residuals(const SwitchingFunctions& functions, std::span<const double> times, int n);
Eigen::MatrixXd moment_residuals(const PulseSequence& seq, int n);

/// Largest |residual| over the rows needed for decoupling (normalization
/// rows skipped).
double max_decoupling_residual(const SwitchingFunctions& functions, const Eigen::MatrixXd& residuals);

struct SolverOptions {
  double tolerance = 1e-13;
  int max_iterations = 200;
  /// Restrict to times symmetric about 1/2 (halves the unknowns).
  bool symmetric = true;
  /// Include the even/odd weighting family for schedules with odd types.
  bool normalization = true;
};

struct SolverReport {
  std::vector<double> times;
  int iterations = 0;
  bool symmetric = false;
  /// max |residual| after each Gauss-Newton step (the first entry is the guess).
  std::vector<double> residual_history;
};

/// sin^2(k pi / (2(m+1))), k = 1..m: an m-pulse UDD layout used as the
/// default starting point.
std::vector<double> default_guess(std::size_t unknowns);

/// Gauss-Newton on the moment constraints (shifted-Legendre form) with an
/// analytic Jacobian and pseudo-inverse steps. The function set is the one
/// `switching_functions` selects for a custom group (a3 when every type is
/// even, otherwise s3).
///
/// Throws UnderdeterminedError when the Jacobian at the guess has rank below
/// the number of unknowns, SolverError when the iteration does not reach
/// `tolerance` or leaves the ordered region 0 < t_1 < ... < 1.
SolverReport solve_times_report(std::span<const HamiltonianType> hamiltonians, int n,
                                std::span<const double> guess, const SolverOptions& options = {});

std::vector<double> solve_times(std::span<const HamiltonianType> hamiltonians, int n,
                                std::span<const double> guess, const SolverOptions& options = {});

}  // namespace exdd
