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
#include <cstdint>
#include <string>

#include <Eigen/Dense>

namespace exdd {

using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;
using Vector8cd = Eigen::Matrix<std::complex<double>, 8, 1>;

/// A permutation of three objects (qubits or baths), stored 0-based as
/// image[j] = pi(j).
class Permutation3 {
 public:
  constexpr Permutation3() : image_{0, 1, 2} {}
  constexpr Permutation3(int a, int b, int c)
      : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c)} {}

  constexpr int operator()(int j) const { return image_[static_cast<std::size_t>(j)]; }

  /// (this * other)(j) = this(other(j)).
  constexpr Permutation3 operator*(const Permutation3& other) const {
    return {(*this)(other(0)), (*this)(other(1)), (*this)(other(2))};
  }

  constexpr Permutation3 inverse() const {
    std::array<int, 3> inv{};
    for (int j = 0; j < 3; ++j) inv[static_cast<std::size_t>((*this)(j))] = j;
    return {inv[0], inv[1], inv[2]};
  }

  constexpr bool is_even() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (image_[static_cast<std::size_t>(i)] > image_[static_cast<std::size_t>(j)]) ++inversions;
    return inversions % 2 == 0;
  }

  constexpr bool is_identity() const { return image_[0] == 0 && image_[1] == 1 && image_[2] == 2; }

  constexpr bool operator==(const Permutation3&) const = default;

  /// All six elements, even ones first.
  static constexpr std::array<Permutation3, 6> all() {
    return {Permutation3{0, 1, 2}, Permutation3{1, 2, 0}, Permutation3{2, 0, 1},
            Permutation3{1, 0, 2}, Permutation3{2, 1, 0}, Permutation3{0, 2, 1}};
  }

  std::string to_string() const;

 private:
  std::array<std::uint8_t, 3> image_;
};

/// Unitary U_pi on three qubits with U_pi Z_j U_pi^dagger = Z_{pi(j)}.
/// Qubit 1 is the most significant bit of the computational index.
Matrix8cd qubit_permutation_unitary(const Permutation3& pi);

/// Image of the 3-bit computational index under U_pi.
int permute_index(const Permutation3& pi, int index);

}  // namespace exdd
