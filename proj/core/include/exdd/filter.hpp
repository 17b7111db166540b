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

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exdd/sequence.hpp"

namespace exdd {

/// Noise spectral density S(omega), omega in rad/s, one-sided.
struct SpectralDensity {
  std::function<double(double)> density;
  /// Hard upper cutoff; without one the integral runs until the tail is
  /// negligible.
  std::optional<double> cutoff;
  /// Extra panel boundaries (rad/s), e.g. around narrow spectral features.
  std::vector<double> breakpoints;
};

struct FilterCurve {
  std::string function;
  std::vector<double> omega_t;
  std::vector<double> value;
};

/// omega^2 |f^(omega)|^2 = |sum_k f_k (e^{i x s_k} - e^{i x s_{k-1}})|^2 at
/// x = omega T for interval values f_k on the boundaries s_0 = 0 < ... < s_N = 1.
double filter_value(std::span<const int> values, std::span<const double> boundaries, double omega_t);
/// Switching function `which` of the sequence's function set.
double filter_value(const PulseSequence& seq, std::size_t which, double omega_t);

/// Log-log slope of the filter between omega_t and 1.1 omega_t.
double low_frequency_slope(std::span<const int> values, std::span<const double> boundaries, double omega_t = 1e-2);

/// n points spaced logarithmically over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int n);
/// Default curve grid: 400 points over [1e-2, 1e3].
std::vector<double> default_filter_grid();

FilterCurve filter_curve(const PulseSequence& seq, std::size_t which, std::span<const double> grid);
/// One curve per switching function.
std::vector<FilterCurve> filter_curves(const PulseSequence& seq, std::span<const double> grid);

/// Decoherence integral chi(T) = int_0^inf (domega / 2pi) S(omega) |f^(omega T)|^2
/// with f^ the transform of the switching function on [0, T]. Adaptive
/// Gauss-Kronrod on panels of width pi / (2T). Throws Error when the
/// integral does not converge.
double chi(const SpectralDensity& spectrum, std::span<const int> values, std::span<const double> boundaries, double T);
double chi(const SpectralDensity& spectrum, const PulseSequence& seq, std::size_t which, double T);

/// W(T) = exp(-chi).
double decoherence_function(double chi_value);

}  // namespace exdd
