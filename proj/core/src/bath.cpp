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

#include "exdd/bath.hpp"

#include <cmath>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "exdd/error.hpp"

namespace exdd {
namespace {

void check_bath(int bath) {
  if (bath < 0 || bath > 2) throw ValidationError("bath index must be 0..2");
}

/// Adds c * (a.b) for Pauli vectors on bits a, b (bit positions in the index).
void add_exchange(Eigen::MatrixXd& h, int bit_a, int bit_b, double c) {
  const int mask = (1 << bit_a) | (1 << bit_b);
  for (int x = 0; x < h.rows(); ++x) {
    const bool za = (x >> bit_a) & 1, zb = (x >> bit_b) & 1;
    if (za == zb) {
      h(x, x) += c;
    } else {
      // XX + YY flips both spins with amplitude 2; ZZ gives -1.
      h(x, x) -= c;
      h(x ^ mask, x) += 2.0 * c;
    }
  }
}

}  // namespace

ClassicalBathModel::ClassicalBathModel(std::uint64_t seed, ClassicalBathParams params)
    : seed_(seed), params_(params) {
  if (params.modes < 1) throw ValidationError("classical bath needs at least one mode");
  if (params.rms < 0.0 || params.omega_max < 0.0) throw ValidationError("bath scales must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& bath : modes_) {
    double norm = 0.0;
    for (int m = 0; m < params.modes; ++m) {
      Mode mode{unit(rng), params.omega_max * unit(rng), kTwoPi * unit(rng)};
      norm += 0.5 * mode.amplitude * mode.amplitude;
      bath.push_back(mode);
    }
    for (auto& mode : bath) mode.amplitude *= params.rms / std::sqrt(norm);
  }
}

ClassicalBathModel ClassicalBathModel::constant(const std::array<double, 3>& b) {
  ClassicalBathModel model;
  model.params_.modes = 0;
  model.offset_ = b;
  return model;
}

double ClassicalBathModel::value(int bath, double t) const {
  check_bath(bath);
  double v = offset_[static_cast<std::size_t>(bath)];
  for (const auto& m : modes_[static_cast<std::size_t>(bath)]) v += m.amplitude * std::cos(m.omega * t + m.phase);
  return v;
}

double ClassicalBathModel::integral(int bath, double t0, double t1) const {
  check_bath(bath);
  const double dt = t1 - t0, mid = 0.5 * (t0 + t1);
  double v = offset_[static_cast<std::size_t>(bath)] * dt;
  for (const auto& m : modes_[static_cast<std::size_t>(bath)]) {
    // sin(a) - sin(b) = 2 cos((a+b)/2) sin((a-b)/2), written so a short
    // interval keeps full relative precision.
    const double half = 0.5 * m.omega * dt;
    const double sinc = half == 0.0 ? 1.0 : std::sin(half) / half;
    v += m.amplitude * std::cos(m.omega * mid + m.phase) * dt * sinc;
  }
  return v;
}

FunctionBath::FunctionBath(std::array<Field, 3> fields) : fields_(std::move(fields)) {
  for (const auto& f : fields_)
    if (!f) throw ValidationError("function bath needs three callables");
}

double FunctionBath::value(int bath, double t) const {
  check_bath(bath);
  return fields_[static_cast<std::size_t>(bath)](t);
}

double FunctionBath::integral(int bath, double t0, double t1) const {
  check_bath(bath);
  if (t0 == t1) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(fields_[static_cast<std::size_t>(bath)], t0,
                                                                       t1, 20, 1e-12);
}

SpinBathModel::SpinBathModel(std::uint64_t seed, SpinBathParams params) : params_(params) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (auto& q : system_)
    for (auto& r : q) r = unit(rng);
  for (int b = 0; b < 6; ++b)
    for (int c = b + 1; c < 6; ++c) bath_[b][c] = unit(rng);
}

SpinBathModel::SpinBathModel(SpinBathParams params, std::array<std::array<double, 2>, 3> system,
                             std::array<std::array<double, 6>, 6> bath)
    : params_(params), system_(system), bath_(bath) {}

Eigen::MatrixXd SpinBathModel::hamiltonian() const {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(kDim, kDim);
  auto system_bit = [](int q) { return 8 - q; };
  auto bath_bit = [](int b) { return 5 - b; };
  for (int q = 0; q < 3; ++q)
    for (int k = 0; k < 2; ++k) add_exchange(h, system_bit(q), bath_bit(2 * q + k), params_.J * system_[q][k]);
  for (int b = 0; b < 6; ++b)
    for (int c = b + 1; c < 6; ++c) add_exchange(h, bath_bit(b), bath_bit(c), params_.beta * bath_[b][c]);
  return h;
}

Eigen::VectorXcd haar_state(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = {g(rng), g(rng)};
  return v.normalized();
}

}  // namespace exdd
