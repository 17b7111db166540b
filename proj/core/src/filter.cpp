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

#include "exdd/filter.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "exdd/error.hpp"

namespace exdd {
namespace {

constexpr double kQuadratureTolerance = 1e-8;
/// Quarter-period panels resolve the filter oscillation up to this omega T.
/// Past it the filter is replaced by its oscillation average; the neglected
/// oscillatory remainder is O(1/(omega T)^2) relative.
constexpr double kResolvedOmegaT = 1e5;
/// Geometrically widening tail panels allowed before giving up.
constexpr int kMaxTailPanels = 20000;
/// Consecutive negligible panels required before the tail is dropped.
constexpr int kQuietPanels = 64;

void check_shape(std::span<const int> values, std::span<const double> boundaries) {
  if (boundaries.size() != values.size() + 1) throw ValidationError("need one boundary more than interval values");
}

}  // namespace

double filter_value(std::span<const int> values, std::span<const double> boundaries, double omega_t) {
  check_shape(values, boundaries);
  // e^{ix s_k} - e^{ix s_{k-1}} = 2i sin(x dk/2) e^{ix mk}: no cancellation at small x.
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] == 0) continue;
    const double half = 0.5 * omega_t * (boundaries[k + 1] - boundaries[k]);
    const double mid = 0.5 * omega_t * (boundaries[k + 1] + boundaries[k]);
    sum += static_cast<double>(values[k]) * std::sin(half) * std::polar(1.0, mid);
  }
  return 4.0 * std::norm(sum);
}

double filter_value(const PulseSequence& seq, std::size_t which, double omega_t) {
  const auto functions = switching_functions(seq);
  if (which >= functions.count()) throw ValidationError("switching function index out of range");
  return filter_value(functions.values[which], seq.boundaries(), omega_t);
}

double low_frequency_slope(std::span<const int> values, std::span<const double> boundaries, double omega_t) {
  const double a = filter_value(values, boundaries, omega_t);
  const double b = filter_value(values, boundaries, 1.1 * omega_t);
  if (!(a > 0.0) || !(b > 0.0)) throw ValidationError("filter vanishes at the probe frequency");
  return std::log(b / a) / std::log(1.1);
}

namespace {

/// Mean of the filter over its oscillations: the summed squared jumps of
/// the switching function, edges included.
double filter_average(std::span<const int> values) {
  double sum = 0.0;
  int previous = 0;
  for (int v : values) {
    sum += static_cast<double>((v - previous) * (v - previous));
    previous = v;
  }
  return sum + static_cast<double>(previous * previous);
}

}  // namespace

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw ValidationError("log grid needs 0 < lo < hi and n >= 2");
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double step = std::log(hi / lo) / (n - 1);
  for (int i = 0; i < n; ++i) grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  grid.back() = hi;
  return grid;
}

std::vector<double> default_filter_grid() { return log_grid(1e-2, 1e3, 400); }

FilterCurve filter_curve(const PulseSequence& seq, std::size_t which, std::span<const double> grid) {
  const auto functions = switching_functions(seq);
  if (which >= functions.count()) throw ValidationError("switching function index out of range");
  const auto boundaries = seq.boundaries();
  FilterCurve curve;
  curve.function = functions.names[which];
  for (double x : grid) {
    curve.omega_t.push_back(x);
    curve.value.push_back(filter_value(functions.values[which], boundaries, x));
  }
  return curve;
}

std::vector<FilterCurve> filter_curves(const PulseSequence& seq, std::span<const double> grid) {
  std::vector<FilterCurve> curves;
  for (std::size_t f = 0; f < switching_functions(seq).count(); ++f) curves.push_back(filter_curve(seq, f, grid));
  return curves;
}

double chi(const SpectralDensity& spectrum, std::span<const int> values, std::span<const double> boundaries,
           double T) {
  check_shape(values, boundaries);
  if (!(T > 0.0)) throw ValidationError("total time must be positive");
  if (!spectrum.density) throw ValidationError("spectral density not set");
  using boost::math::quadrature::gauss_kronrod;
  auto density = [&](double w) {
    const double v = spectrum.density(w);
    if (v < 0.0 || !std::isfinite(v)) throw Error("spectral density must be finite and non-negative");
    return v;
  };
  const double average = filter_average(values);
  const double resolved = kResolvedOmegaT / T;
  auto integrand = [&](double w) {
    if (w <= 0.0) return 0.0;
    const double f = w < resolved ? filter_value(values, boundaries, w * T) : average;
    return density(w) * f / (w * w) / (2.0 * std::numbers::pi);
  };
  double width = std::numbers::pi / (2.0 * T);
  std::vector<double> extra(spectrum.breakpoints.begin(), spectrum.breakpoints.end());
  const double last_breakpoint = extra.empty() ? 0.0 : *std::max_element(extra.begin(), extra.end());
  extra.push_back(resolved);
  std::sort(extra.begin(), extra.end());
  auto next_extra = extra.begin();

  double total = 0.0;
  int quiet = 0;
  int tail_panels = 0;
  double lo = 0.0;
  while (tail_panels < kMaxTailPanels) {
    double hi = lo + width;
    while (next_extra != extra.end() && *next_extra <= lo) ++next_extra;
    if (next_extra != extra.end() && *next_extra < hi) hi = *next_extra;
    const bool last = spectrum.cutoff && hi >= *spectrum.cutoff;
    if (last) hi = *spectrum.cutoff;
    if (!std::isfinite(hi)) break;
    double err = 0.0;
    const double part = hi > lo ? gauss_kronrod<double, 15>::integrate(integrand, lo, hi, 15, kQuadratureTolerance, &err)
                                : 0.0;
    total += part;
    if (last) return total;
    quiet = std::abs(part) <= 1e-3 * kQuadratureTolerance * std::abs(total) || (part == 0.0 && total == 0.0)
                ? quiet + 1
                : 0;
    // Only drop the tail past every user breakpoint.
    if (quiet >= kQuietPanels && hi >= last_breakpoint) return total;
    lo = hi;
    if (lo >= resolved) {
      width *= 1.05;
      ++tail_panels;
    }
  }
  throw Error("chi integral did not converge within " + std::to_string(kMaxTailPanels) +
              " tail panels; the spectral density may not decay");
}

double chi(const SpectralDensity& spectrum, const PulseSequence& seq, std::size_t which, double T) {
  const auto functions = switching_functions(seq);
  if (which >= functions.count()) throw ValidationError("switching function index out of range");
  return chi(spectrum, functions.values[which], seq.boundaries(), T);
}

double decoherence_function(double chi_value) {
  if (chi_value < 0.0) throw ValidationError("chi must be non-negative");
  return std::exp(-chi_value);
}

}  // namespace exdd
