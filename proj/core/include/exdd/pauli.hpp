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
#include <string_view>
#include <vector>

#include "exdd/permutation.hpp"

namespace exdd {

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

/// Three-qubit Pauli product. Canonical code is base 4 with qubit 1 most
/// significant and I=0, X=1, Y=2, Z=3, so codes run over 0..63.
class PauliWord {
 public:
  static constexpr int kCount = 64;

  constexpr PauliWord() = default;
  constexpr PauliWord(PauliLetter q1, PauliLetter q2, PauliLetter q3)
      : code_(static_cast<std::uint8_t>(16 * static_cast<int>(q1) + 4 * static_cast<int>(q2) +
                                        static_cast<int>(q3))) {}

  static PauliWord from_code(int code);
  /// Parses "XIZ"-style strings (one letter per qubit).
  static PauliWord parse(std::string_view letters);
  /// Single-qubit operator on qubit `qubit` (0-based).
  static constexpr PauliWord single(int qubit, PauliLetter letter) {
    PauliWord w;
    w.code_ = static_cast<std::uint8_t>(static_cast<int>(letter) << (2 * (2 - qubit)));
    return w;
  }

  constexpr int code() const { return code_; }
  constexpr PauliLetter letter(int qubit) const {
    return static_cast<PauliLetter>((code_ >> (2 * (2 - qubit))) & 3);
  }
  constexpr int weight() const {
    int w = 0;
    for (int q = 0; q < 3; ++q) w += letter(q) != PauliLetter::I;
    return w;
  }
  constexpr bool is_identity() const { return code_ == 0; }

  /// Image under the qubit permutation pi: the letter on qubit j moves to pi(j).
  PauliWord permuted(const Permutation3& pi) const;

  std::string to_string() const;
  Matrix8cd matrix() const;

  constexpr auto operator<=>(const PauliWord&) const = default;

 private:
  std::uint8_t code_ = 0;
};

struct PauliProduct {
  std::complex<double> phase;
  PauliWord word;
};

/// a * b = phase * word.
PauliProduct multiply(PauliWord a, PauliWord b);

/// Orbits of the 64 Pauli words under qubit permutations.
class OrbitTable {
 public:
  int size() const { return static_cast<int>(orbits_.size()); }
  const std::vector<PauliWord>& members(int orbit) const {
    return orbits_[static_cast<std::size_t>(orbit)];
  }
  int orbit_of(PauliWord w) const { return orbit_index_[static_cast<std::size_t>(w.code())]; }
  const std::vector<PauliWord>& orbit_members(PauliWord w) const { return members(orbit_of(w)); }

 private:
  friend OrbitTable pauli_orbits();
  std::vector<std::vector<PauliWord>> orbits_;
  std::array<int, PauliWord::kCount> orbit_index_{};
};

/// Computes orbits by applying all six permutations; members are sorted by
/// code and orbits by their smallest member.
OrbitTable pauli_orbits();

/// Shared immutable instance.
const OrbitTable& orbit_table();

}  // namespace exdd
