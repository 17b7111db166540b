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

#include "exdd/permutation.hpp"

namespace exdd {

std::string Permutation3::to_string() const {
  std::string out = "(";
  for (int j = 0; j < 3; ++j) {
    if (j) out += ' ';
    out += std::to_string((*this)(j) + 1);
  }
  return out + ")";
}

int permute_index(const Permutation3& pi, int index) {
  int out = 0;
  for (int j = 0; j < 3; ++j) {
    const int bit = (index >> (2 - j)) & 1;
    out |= bit << (2 - pi(j));
  }
  return out;
}

Matrix8cd qubit_permutation_unitary(const Permutation3& pi) {
  Matrix8cd u = Matrix8cd::Zero();
  for (int i = 0; i < 8; ++i) u(permute_index(pi, i), i) = 1.0;
  return u;
}

}  // namespace exdd
