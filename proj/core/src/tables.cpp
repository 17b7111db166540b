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

#include "exdd/tables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "exdd/error.hpp"
#include "exdd/sequence.hpp"

namespace exdd::tables {
namespace {

// clang-format off
constexpr double kA3[] = {
  // n = 1
  0.3333333333333333,
  // n = 2
  0.1666666666666667, 0.3333333333333333,
  // n = 3
  0.0930802599812912, 0.2041913710924023, 0.4444444444444444,
  // n = 4
  0.0611678063574247, 0.1320291453900112, 0.2986958120566778, 0.3945011396907580,
  // n = 5
  0.0422244245173296, 0.0940587956886883, 0.2172228408817372, 0.2838895075484039, 0.4518343711713587,
  // n = 6
  0.0313685011617312, 0.0691609286752199, 0.1617103538537611, 0.2161866929592387, 0.3514848584641742,
  0.4258827585118745,
  // n = 7
  0.0239219438795333, 0.0535688803938237, 0.1262566342290569, 0.1675244212375237, 0.2761133079137736,
  0.3417044666375784, 0.4698392155798953,
  // n = 8
  0.0190156712850090, 0.0422945303794296, 0.1002297726086257, 0.1346268067223472, 0.2239571558152790,
  0.2763447583052162, 0.3850761827426867, 0.4416793537112741,
  // n = 9
  0.0153608717513108, 0.0344809416081787, 0.0820319124861268, 0.1096019013513601, 0.1835330371665574,
  0.2291713148467980, 0.3223652733904291, 0.3688693585992699, 0.4721657549445159,
  // n = 10
  0.0127428989292003, 0.0284688256262034, 0.0679240161384205, 0.0914464121824144, 0.1538757061482468,
  0.1916101903303824, 0.2714006848897883, 0.3135792550438800, 0.4050737288155140, 0.4525790184049564,
};

constexpr double kS3[] = {
  // n = 1
  0.1666666666666667,
  // n = 2
  0.0833333333333333, 0.4166666666666667,
  // n = 3
  0.0441757320558095, 0.2663979542780318, 0.3888888888888889,
  // n = 4
  0.0292438385042891, 0.1706622892054447, 0.2539956225387781, 0.4459105051709558,
  // n = 5
  0.0198486448526978, 0.1234090460471676, 0.1855655208780249, 0.3188988542113582, 0.4035604011944698,
  // n = 6
  0.0148169093658703, 0.0902375649702305, 0.1365285435153074, 0.2455460335064556, 0.3140624574739186,
  0.4629576452117436,
  // n = 7
  0.0112075501170748, 0.0704161635276064, 0.1069644388480345, 0.1894875256294779, 0.2440254284265229,
  0.3752930054921819, 0.4396659439243005,
  // n = 8
  0.0089377851765520, 0.0553969487226799, 0.0843798400197465, 0.1531864662990289, 0.1981928332289538,
  0.3030094142447375, 0.3573598562810042, 0.4706108187731435,
  // n = 9
  0.0071855182206674, 0.0453635718581324, 0.0692317973728011, 0.1243583767250380, 0.1614266670585074,
  0.2527437110834672, 0.2994843851270477, 0.3925059539229590, 0.4443099124772396,
  // n = 10
  0.0059745260011464, 0.0373611383696360, 0.0571010082270104, 0.1041446643790700, 0.1355161859798696,
  0.2110062905707306, 0.2508943643743651, 0.3352721033248206, 0.3812593890562080, 0.4762946103276755,
};

constexpr std::array<double, 13> kQdd3Half = {
  0.02443154605193963, 0.03273388118971666, 0.05269740572865081, 0.03073701555573789,
  0.04633548169315730, 0.05049836419256131, 0.02513261117647280, 0.05049836419256131,
  0.04633548169315730, 0.03073701555573789, 0.05269740572865081, 0.03273388118971666,
  0.02443154605193963,
};
// clang-format on

std::span<const double> row(const double* data, int n) {
  if (n < 1 || n > kMaxStoredOrder)
    throw ValidationError("no stored switching times for order " + std::to_string(n));
  // Order n contributes n entries; rows are packed consecutively.
  const std::size_t offset = static_cast<std::size_t>(n * (n - 1) / 2);
  return {data + offset, static_cast<std::size_t>(n)};
}

}  // namespace

std::span<const double> a3_lower_half(int n) { return row(kA3, n); }
std::span<const double> s3_specific_lower_half(int n) { return row(kS3, n); }

std::vector<double> reflect_about_half(std::span<const double> lower) {
  std::vector<double> out(lower.begin(), lower.end());
  for (double t : lower) out.push_back(1.0 - t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> a3_times(int n) { return reflect_about_half(a3_lower_half(n)); }

std::vector<double> s3_times(int n) {
  std::vector<double> out = reflect_about_half(s3_specific_lower_half(n));
  const auto a3 = a3_times(n);
  out.insert(out.end(), a3.begin(), a3.end());
  const auto udd = udd_times(n);
  out.insert(out.end(), udd.begin(), udd.end());
  std::sort(out.begin(), out.end());
  return out;
}

const std::array<double, 13>& qdd3_half_intervals() { return kQdd3Half; }

}  // namespace exdd::tables
