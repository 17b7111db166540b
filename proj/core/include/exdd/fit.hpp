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

#include <span>
#include <string>

namespace exdd {

struct FitWindow {
  double lo = 1e-11;
  double hi = 1e-2;
};

struct ExponentFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  /// 95% Student-t confidence interval on the exponent.
  double ci_low = 0.0;
  double ci_high = 0.0;
  int points = 0;
};

/// Least squares on (log T, log y) over the points with y inside the window.
/// Throws ValidationError with fewer than 3 usable points.
ExponentFit fit_exponent(std::span<const double> T, std::span<const double> y, FitWindow window = {});

}  // namespace exdd
