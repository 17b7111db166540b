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

#include "exdd/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exdd/error.hpp"

namespace exdd {
namespace {

/// Shifted Legendre values P_p(2t-1), p = 0..count-1.
void legendre_values(double t, int count, std::vector<double>& out) {
  out.assign(static_cast<std::size_t>(std::max(count, 2)), 0.0);
  const double x = 2.0 * t - 1.0;
  out[0] = 1.0;
  out[1] = x;
  for (int k = 1; k + 1 < count; ++k)
    out[static_cast<std::size_t>(k + 1)] =
        ((2.0 * k + 1.0) * x * out[static_cast<std::size_t>(k)] - k * out[static_cast<std::size_t>(k - 1)]) / (k + 1.0);
}

/// int_0^t P_p(2s-1) ds for p = 0..n-1.
void legendre_antiderivatives(double t, int n, std::vector<double>& legendre, std::vector<double>& out) {
  legendre_values(t, n + 1, legendre);
  out.assign(static_cast<std::size_t>(n), 0.0);
  if (n > 0) out[0] = t;
  for (int p = 1; p < n; ++p)
    out[static_cast<std::size_t>(p)] =
        (legendre[static_cast<std::size_t>(p + 1)] - legendre[static_cast<std::size_t>(p - 1)]) / (2.0 * (2.0 * p + 1.0));
}

struct System {
  std::vector<std::vector<int>> values;  // rows used by the solver
  int n = 0;
  std::size_t intervals = 0;

  int equations() const { return static_cast<int>(values.size()) * n; }

  /// Residual vector (Legendre form) and Jacobian w.r.t. the interior times.
  void evaluate(const std::vector<double>& times, Eigen::VectorXd& r, Eigen::MatrixXd* jac) const {
    const std::size_t m = times.size();
    r.setZero(equations());
    if (jac) jac->setZero(equations(), static_cast<Eigen::Index>(m));
    std::vector<double> leg, prev(static_cast<std::size_t>(n), 0.0), cur;
    for (std::size_t b = 1; b <= m + 1; ++b) {
      const double t = b <= m ? times[b - 1] : 1.0;
      legendre_antiderivatives(t, n, leg, cur);
      for (std::size_t f = 0; f < values.size(); ++f) {
        const int v = values[f][b - 1];
        if (v != 0)
          for (int p = 0; p < n; ++p)
            r[static_cast<Eigen::Index>(f) * n + p] += v * (cur[static_cast<std::size_t>(p)] - prev[static_cast<std::size_t>(p)]);
        if (jac && b <= m) {
          const int jump = values[f][b - 1] - values[f][b];
          if (jump != 0)
            for (int p = 0; p < n; ++p)
              (*jac)(static_cast<Eigen::Index>(f) * n + p, static_cast<Eigen::Index>(b - 1)) =
                  jump * leg[static_cast<std::size_t>(p)];
        }
      }
      prev.swap(cur);
    }
  }
};

bool ordered(const std::vector<double>& t) {
  double prev = 0.0;
  for (double x : t) {
    if (!(x > prev)) return false;
    prev = x;
  }
  return prev < 1.0;
}

/// Map from free parameters to times. Symmetric layout pairs t_i with 1-t_i.
struct Parameterization {
  std::size_t m = 0;
  bool symmetric = false;

  std::size_t free() const { return symmetric ? m / 2 : m; }

  Eigen::MatrixXd jacobian_map() const {
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(free()));
    for (std::size_t i = 0; i < free(); ++i) {
      s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = 1.0;
      if (symmetric) s(static_cast<Eigen::Index>(m - 1 - i), static_cast<Eigen::Index>(i)) = -1.0;
    }
    return s;
  }

  std::vector<double> symmetrize(std::vector<double> t) const {
    if (!symmetric) return t;
    for (std::size_t i = 0; i < m / 2; ++i) {
      const double lo = 0.5 * (t[i] + 1.0 - t[m - 1 - i]);
      t[i] = lo;
      t[m - 1 - i] = 1.0 - lo;
    }
    if (m % 2 == 1) t[m / 2] = 0.5;
    return t;
  }
};

std::optional<SolverReport> gauss_newton(const System& sys, std::vector<double> times, bool symmetric,
                                         const SolverOptions& opt) {
  const Parameterization param{times.size(), symmetric};
  times = param.symmetrize(std::move(times));
  if (!ordered(times)) return std::nullopt;
  const Eigen::MatrixXd map = param.jacobian_map();

  SolverReport report;
  report.symmetric = symmetric;
  Eigen::VectorXd r;
  Eigen::MatrixXd jac;
  sys.evaluate(times, r, &jac);
  double norm = r.norm();
  report.residual_history.push_back(r.cwiseAbs().maxCoeff());

  for (int it = 0; it < opt.max_iterations; ++it) {
    if (report.residual_history.back() < opt.tolerance) {
      report.times = std::move(times);
      report.iterations = it;
      return report;
    }
    const Eigen::MatrixXd reduced = jac * map;
    const Eigen::VectorXd delta = reduced.completeOrthogonalDecomposition().solve(-r);
    const Eigen::VectorXd step = map * delta;

    // Backtrack until the times stay ordered and the residual decreases.
    double lambda = 1.0;
    std::vector<double> trial(times.size());
    Eigen::VectorXd r_trial;
    bool accepted = false;
    while (lambda > 1e-6) {
      for (std::size_t i = 0; i < times.size(); ++i) trial[i] = times[i] + lambda * step[static_cast<Eigen::Index>(i)];
      trial = param.symmetrize(std::move(trial));
      if (ordered(trial)) {
        sys.evaluate(trial, r_trial, nullptr);
        const double n_trial = r_trial.norm();
        if (n_trial < norm || n_trial < opt.tolerance) {
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted) return std::nullopt;
    times = trial;
    sys.evaluate(times, r, &jac);
    norm = r.norm();
    report.residual_history.push_back(r.cwiseAbs().maxCoeff());
  }
  if (report.residual_history.back() < opt.tolerance) {
    report.times = std::move(times);
    report.iterations = opt.max_iterations;
    return report;
  }
  return std::nullopt;
}

}  // namespace

Eigen::MatrixXd moment_residuals(const SwitchingFunctions& functions, std::span<const double> times, int n) {
  if (n < 0) throw ValidationError("moment count must be non-negative");
  const std::size_t intervals = times.size() + 1;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(functions.count()), n);
  for (std::size_t f = 0; f < functions.count(); ++f) {
    if (functions.values[f].size() != intervals)
      throw ValidationError("switching function length does not match the number of intervals");
    for (std::size_t k = 0; k < intervals; ++k) {
      const int v = functions.values[f][k];
      if (v == 0) continue;
      const double lo = k == 0 ? 0.0 : times[k - 1];
      const double hi = k + 1 == intervals ? 1.0 : times[k];
      double plo = lo, phi = hi;  // lo^{p+1}, hi^{p+1}
      for (int p = 0; p < n; ++p) {
        out(static_cast<Eigen::Index>(f), p) += v * (phi - plo) / (p + 1.0);
        plo *= lo;
        phi *= hi;
      }
    }
  }
  return out;
}

Eigen::MatrixXd moment_residuals(const PulseSequence& seq, int n) {
  return moment_residuals(switching_functions(seq), seq.times, n);
}

double max_decoupling_residual(const SwitchingFunctions& functions, const Eigen::MatrixXd& residuals) {
  double worst = 0.0;
  for (std::size_t f = 0; f < functions.count(); ++f)
    if (!functions.normalization[f] && residuals.cols() > 0)
      worst = std::max(worst, residuals.row(static_cast<Eigen::Index>(f)).cwiseAbs().maxCoeff());
  return worst;
}

std::vector<double> default_guess(std::size_t unknowns) {
  std::vector<double> out(unknowns);
  for (std::size_t k = 1; k <= unknowns; ++k) {
    const double s = std::sin(static_cast<double>(k) * std::numbers::pi / (2.0 * static_cast<double>(unknowns + 1)));
    out[k - 1] = s * s;
  }
  return out;
}

SolverReport solve_times_report(std::span<const HamiltonianType> hamiltonians, int n, std::span<const double> guess,
                                const SolverOptions& options) {
  if (n < 1) throw ValidationError("solver needs order n >= 1");
  if (hamiltonians.empty() || guess.size() + 1 != hamiltonians.size())
    throw ValidationError("guess must supply one time per interior switching point");

  const SwitchingFunctions functions = switching_functions(Group::custom, hamiltonians);
  System sys;
  sys.n = n;
  sys.intervals = hamiltonians.size();
  for (std::size_t f = 0; f < functions.count(); ++f)
    if (!functions.normalization[f] || options.normalization) sys.values.push_back(functions.values[f]);

  std::vector<double> start(guess.begin(), guess.end());
  if (!ordered(start)) throw ValidationError("guess must be strictly increasing inside (0,1)");

  // Rank test on the full (unsymmetrized) problem.
  {
    Eigen::VectorXd r;
    Eigen::MatrixXd jac;
    sys.evaluate(start, r, &jac);
    const auto unknowns = static_cast<int>(start.size());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
    const auto& sv = svd.singularValues();
    const double cut = sv.size() > 0 ? sv[0] * 1e-10 : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) rank += sv[i] > cut;
    if (sys.equations() < unknowns || rank < unknowns)
      throw UnderdeterminedError("switching-time constraints", rank, unknowns);
  }

  std::optional<SolverReport> report;
  if (options.symmetric) report = gauss_newton(sys, start, true, options);
  if (!report) report = gauss_newton(sys, start, false, options);
  if (!report) {
    Eigen::VectorXd r;
    sys.evaluate(start, r, nullptr);
    throw SolverError("switching-time solver did not converge", r.norm(), options.max_iterations);
  }

  const Eigen::MatrixXd check = moment_residuals(functions, report->times, n);
  double worst = 0.0;
  for (std::size_t f = 0; f < functions.count(); ++f)
    if (!functions.normalization[f] || options.normalization)
      worst = std::max(worst, check.row(static_cast<Eigen::Index>(f)).cwiseAbs().maxCoeff());
  if (worst > 1e-12) throw SolverError("solution fails the moment check", worst, report->iterations);
  return *report;
}

std::vector<double> solve_times(std::span<const HamiltonianType> hamiltonians, int n, std::span<const double> guess,
                                const SolverOptions& options) {
  return solve_times_report(hamiltonians, n, guess, options).times;
}

}  // namespace exdd
