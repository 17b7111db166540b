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

#include "exdd/dfs.hpp"

#include <cmath>

#include "exdd/error.hpp"

namespace exdd {
namespace {

DfsBasis build_basis() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s3 = 1.0 / std::sqrt(3.0);
  const double s6 = 1.0 / std::sqrt(6.0);
  const double t23 = std::sqrt(2.0 / 3.0);
  DfsBasis b;
  b.rows.setZero();
  // |1> = (|010> - |100>)/sqrt2
  b.rows(0, 0b010) = s2;
  b.rows(0, 0b100) = -s2;
  // |2> = (|011> - |101>)/sqrt2
  b.rows(1, 0b011) = s2;
  b.rows(1, 0b101) = -s2;
  // |3> = sqrt(2/3)|001> - |010>/sqrt6 - |100>/sqrt6
  b.rows(2, 0b001) = t23;
  b.rows(2, 0b010) = -s6;
  b.rows(2, 0b100) = -s6;
  // |4> = |011>/sqrt6 + |101>/sqrt6 - sqrt(2/3)|110>
  b.rows(3, 0b011) = s6;
  b.rows(3, 0b101) = s6;
  b.rows(3, 0b110) = -t23;
  // leaked quartet
  b.rows(4, 0b000) = 1.0;
  b.rows(5, 0b001) = s3;
  b.rows(5, 0b010) = s3;
  b.rows(5, 0b100) = s3;
  b.rows(6, 0b011) = s3;
  b.rows(6, 0b101) = s3;
  b.rows(6, 0b110) = s3;
  b.rows(7, 0b111) = 1.0;
  return b;
}

}  // namespace

const DfsBasis& dfs_basis() {
  static const DfsBasis basis = build_basis();
  return basis;
}

Matrix8cd projector_valid() {
  const auto& v = dfs_basis().rows;
  const Eigen::Matrix<double, 8, 8> pi = v.topRows<4>().transpose() * v.topRows<4>();
  return pi.cast<std::complex<double>>();
}

FidelityCoefficients fidelity_coefficients(double r, double phi) {
  const double r2 = r * r;
  const double q = 1.0 - r2;
  const double cross = 2.0 * r * std::sqrt(3.0 * q) * std::cos(phi);
  FidelityCoefficients c;
  c.c0 = (3.0 - 2.0 * r2 + 2.0 * r2 * r2 + 2.0 * r2 * q * std::cos(2.0 * phi)) / 6.0;
  c.c1 = 2.0 / 9.0 * q * (1.0 + 2.0 * r2 + cross);
  c.c2 = 2.0 / 9.0 * q * (1.0 + 2.0 * r2 - cross);
  c.c3 = (1.0 - 2.0 * r2 + 10.0 * r2 * r2 - 6.0 * r2 * q * std::cos(2.0 * phi)) / 18.0;
  return c;
}

double closed_form_fidelity(const FidelityCoefficients& c, const std::array<double, 3>& th) {
  return c.c0 + c.c1 * std::cos(2.0 * (th[1] - th[2])) + c.c2 * std::cos(2.0 * (th[2] - th[0])) +
         c.c3 * std::cos(2.0 * (th[0] - th[1]));
}

double closed_form_infidelity(const FidelityCoefficients& c, const std::array<double, 3>& th) {
  const auto s2 = [](double x) {
    const double s = std::sin(x);
    return s * s;
  };
  return 2.0 * (c.c1 * s2(th[1] - th[2]) + c.c2 * s2(th[2] - th[0]) + c.c3 * s2(th[0] - th[1]));
}

DfsState::DfsState(double r, double phi, Eigen::Vector2cd gauge) : r_(r), phi_(phi), gauge_(std::move(gauge)) {
  if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("encoded amplitude r must lie in [0,1]");
  const double n = gauge_.norm();
  if (std::abs(n - 1.0) > 1e-12) throw ValidationError("gauge state must be normalized");
}

Eigen::Vector2cd DfsState::encoded_amplitudes() const {
  return {r_, -std::sqrt(1.0 - r_ * r_) * std::polar(1.0, phi_)};
}

Vector8cd DfsState::system_vector() const {
  const Eigen::Vector2cd e = encoded_amplitudes();
  const auto& v = dfs_basis().rows;
  Vector8cd out = Vector8cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int g = 0; g < 2; ++g) out += e[a] * gauge_[g] * v.row(2 * a + g).transpose().cast<std::complex<double>>();
  return out;
}

double unitarity_defect(const Eigen::Ref<const Eigen::MatrixXcd>& u) {
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

double encoded_fidelity_of_state(std::span<const std::complex<double>> evolved, int env_dim, const DfsState& state) {
  if (env_dim < 1 || evolved.size() != static_cast<std::size_t>(8 * env_dim))
    throw ValidationError("evolved state has the wrong dimension");
  const auto& v = dfs_basis().rows;
  const Eigen::Vector2cd e = state.encoded_amplitudes();
  double f = 0.0;
  for (int env = 0; env < env_dim; ++env) {
    // Components along the valid basis states |1>..|4>; Pi drops the rest.
    std::array<std::complex<double>, 4> valid{};
    for (int k = 0; k < 4; ++k)
      for (int s = 0; s < 8; ++s) {
        const double vk = v(k, s);
        if (vk != 0.0) valid[static_cast<std::size_t>(k)] += vk * evolved[static_cast<std::size_t>(s * env_dim + env)];
      }
    for (int mu = 0; mu < 2; ++mu) {
      const std::complex<double> amp = std::conj(e[0]) * valid[static_cast<std::size_t>(mu)] +
                                       std::conj(e[1]) * valid[static_cast<std::size_t>(2 + mu)];
      f += std::norm(amp);
    }
  }
  return f;
}

double encoded_fidelity(const Matrix8cd& u, const DfsState& state) {
  const double defect = unitarity_defect(u);
  if (defect > kUnitarityTolerance)
    throw ValidationError("propagator is not unitary: max|U^dagger U - I| = " + std::to_string(defect));
  const Vector8cd out = u * state.system_vector();
  return encoded_fidelity_of_state(std::span<const std::complex<double>>(out.data(), 8), 1, state);
}

}  // namespace exdd
