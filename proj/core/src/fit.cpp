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

#include "exdd/fit.hpp"

#include <cmath>
#include <vector>

#include <boost/math/distributions/students_t.hpp>

#include "exdd/error.hpp"

namespace exdd {

ExponentFit fit_exponent(std::span<const double> T, std::span<const double> y, FitWindow window) {
  if (T.size() != y.size()) throw ValidationError("fit needs equally many abscissae and values");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < T.size(); ++i)
    if (T[i] > 0.0 && y[i] >= window.lo && y[i] <= window.hi) {
      xs.push_back(std::log(T[i]));
      ys.push_back(std::log(y[i]));
    }
  const std::size_t n = xs.size();
  if (n < 3) throw ValidationError("fit window holds " + std::to_string(n) + " points; at least 3 are required");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw ValidationError("fit abscissae are all equal");
  ExponentFit fit;
  fit.points = static_cast<int>(n);
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  const double sse = std::max(0.0, syy - fit.exponent * sxy);
  fit.r2 = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  const double dof = static_cast<double>(n) - 2.0;
  const double se = std::sqrt(sse / dof / sxx);
  const double q = boost::math::quantile(boost::math::students_t(dof), 0.975);
  fit.ci_low = fit.exponent - q * se;
  fit.ci_high = fit.exponent + q * se;
  return fit;
}

}  // namespace exdd
