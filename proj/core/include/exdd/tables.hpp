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
#include <span>
#include <vector>

namespace exdd::tables {

inline constexpr int kMaxStoredOrder = 10;

/// Published A3 switching times below 1/2 for order n (1..10).
std::span<const double> a3_lower_half(int n);
/// Published S3-specific switching times below 1/2 for order n (1..10).
std::span<const double> s3_specific_lower_half(int n);

/// Lower-half values completed by reflection about t = 1/2, sorted.
std::vector<double> reflect_about_half(std::span<const double> lower);

/// Full A3 switching times (2n values).
std::vector<double> a3_times(int n);
/// Full S3 switching times: S3-specific, A3 and UDD values merged (5n values).
std::vector<double> s3_times(int n);

/// Interval lengths of the first 13 intervals of the third-order
/// quantum-bath sequence (even permutations).
const std::array<double, 13>& qdd3_half_intervals();

}  // namespace exdd::tables
