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

#include "exdd/pauli.hpp"

#include <algorithm>

#include "exdd/error.hpp"

namespace exdd {
namespace {

using cd = std::complex<double>;

constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

// Single-qubit product table: a*b = phase * letter.
struct LetterProduct {
  int phase_power;  // phase = i^phase_power
  int letter;
};

constexpr LetterProduct letter_product(int a, int b) {
  if (a == 0) return {0, b};
  if (b == 0) return {0, a};
  if (a == b) return {0, 0};
  // Cyclic X->Y->Z gives +i, anticyclic gives -i.
  const int c = 6 - a - b;
  const bool cyclic = (b - a + 3) % 3 == 1;
  return {cyclic ? 1 : 3, c};
}

Eigen::Matrix2cd letter_matrix(PauliLetter l) {
  Eigen::Matrix2cd m;
  switch (l) {
    case PauliLetter::I: m << 1, 0, 0, 1; break;
    case PauliLetter::X: m << 0, 1, 1, 0; break;
    case PauliLetter::Y: m << 0, cd(0, -1), cd(0, 1), 0; break;
    case PauliLetter::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

PauliWord PauliWord::from_code(int code) {
  if (code < 0 || code >= kCount) throw ValidationError("Pauli code out of range: " + std::to_string(code));
  return {static_cast<PauliLetter>((code >> 4) & 3), static_cast<PauliLetter>((code >> 2) & 3),
          static_cast<PauliLetter>(code & 3)};
}

PauliWord PauliWord::parse(std::string_view letters) {
  if (letters.size() != 3) throw InputError("Pauli word must have three letters: '" + std::string(letters) + "'");
  std::array<PauliLetter, 3> out{};
  for (std::size_t q = 0; q < 3; ++q) {
    const auto* it = std::find(std::begin(kLetters), std::end(kLetters), letters[q]);
    if (it == std::end(kLetters)) throw InputError("bad Pauli letter '" + std::string(1, letters[q]) + "'");
    out[q] = static_cast<PauliLetter>(it - std::begin(kLetters));
  }
  return {out[0], out[1], out[2]};
}

PauliWord PauliWord::permuted(const Permutation3& pi) const {
  std::array<PauliLetter, 3> out{};
  for (int j = 0; j < 3; ++j) out[static_cast<std::size_t>(pi(j))] = letter(j);
  return {out[0], out[1], out[2]};
}

std::string PauliWord::to_string() const {
  std::string s(3, 'I');
  for (int q = 0; q < 3; ++q) s[static_cast<std::size_t>(q)] = kLetters[static_cast<int>(letter(q))];
  return s;
}

Matrix8cd PauliWord::matrix() const {
  Eigen::Matrix2cd a = letter_matrix(letter(0));
  Eigen::Matrix2cd b = letter_matrix(letter(1));
  Eigen::Matrix2cd c = letter_matrix(letter(2));
  Matrix8cd m;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      m(i, j) = a(i >> 2, j >> 2) * b((i >> 1) & 1, (j >> 1) & 1) * c(i & 1, j & 1);
  return m;
}

PauliProduct multiply(PauliWord a, PauliWord b) {
  static constexpr cd kPowers[] = {cd(1, 0), cd(0, 1), cd(-1, 0), cd(0, -1)};
  int power = 0;
  std::array<PauliLetter, 3> out{};
  for (int q = 0; q < 3; ++q) {
    const auto p = letter_product(static_cast<int>(a.letter(q)), static_cast<int>(b.letter(q)));
    power += p.phase_power;
    out[static_cast<std::size_t>(q)] = static_cast<PauliLetter>(p.letter);
  }
  return {kPowers[power % 4], PauliWord(out[0], out[1], out[2])};
}

OrbitTable pauli_orbits() {
  OrbitTable table;
  table.orbit_index_.fill(-1);
  for (int code = 0; code < PauliWord::kCount; ++code) {
    if (table.orbit_index_[static_cast<std::size_t>(code)] >= 0) continue;
    const PauliWord w = PauliWord::from_code(code);
    std::vector<PauliWord> orbit;
    for (const auto& pi : Permutation3::all()) {
      const PauliWord image = w.permuted(pi);
      if (std::find(orbit.begin(), orbit.end(), image) == orbit.end()) orbit.push_back(image);
    }
    std::sort(orbit.begin(), orbit.end());
    const int index = table.size();
    for (const auto& m : orbit) table.orbit_index_[static_cast<std::size_t>(m.code())] = index;
    table.orbits_.push_back(std::move(orbit));
  }
  return table;
}

const OrbitTable& orbit_table() {
  static const OrbitTable table = pauli_orbits();
  return table;
}

}  // namespace exdd
