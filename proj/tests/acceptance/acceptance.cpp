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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "exdd/dfs.hpp"
#include "exdd/expansion.hpp"
#include "exdd/filter.hpp"
#include "exdd/fit.hpp"
#include "exdd/search.hpp"
#include "exdd/simulator.hpp"
#include "exdd/solver.hpp"
#include "exdd/tables.hpp"
#include "support/expansion_oracle.hpp"

using namespace exdd;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Outcome table_reproduction() {
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n) {
    for (const auto& [schedule, table] : {std::pair{a3_schedule(n), tables::a3_times(n)},
                                          std::pair{s3_schedule(n), tables::s3_times(n)}}) {
      const auto t = solve_times(schedule, n, default_guess(schedule.size() - 1));
      worst = std::max(worst, max_abs_diff(t, table));
    }
  }
  return {worst <= 1e-12, fmt("max |t - table| = %.2e over A3 and S3, n = 1..10", worst)};
}

Outcome constraint_residuals() {
  double worst = 0.0;
  int checked = 0;
  auto check = [&](const PulseSequence& seq, int n) {
    worst = std::max(worst, max_decoupling_residual(switching_functions(seq), moment_residuals(seq, n)));
    ++checked;
  };
  for (int n = 1; n <= 10; ++n) {
    check(a3_sequence(n), n);
    check(s3_sequence(n), n);
    check(udd_sequence(n), n);
    for (const auto& schedule : {a3_schedule(n), s3_schedule(n)}) {
      PulseSequence solved = make_sequence(Group::custom, n, schedule, solve_times(schedule, n, default_guess(schedule.size() - 1)));
      check(solved, n);
    }
  }
  return {worst < 1e-12, fmt("max moment residual %.2e over %d stored and solved sequences", worst, checked)};
}

Outcome qdd3_verification() {
  const auto seq = qdd3_sequence();
  const auto report = globalization_report(seq, 3);
  double spread = 0.0;
  for (const auto& o : report.orders) spread = std::max(spread, o.max_relative_spread);
  const auto lengths = seq.interval_lengths();
  double first = 0.0, second = 0.0;
  for (std::size_t k = 0; k < 13; ++k) {
    first += lengths[k];
    second += lengths[k + 13];
  }
  const double half_error = std::max(std::abs(first - 0.5), std::abs(second - 0.5));
  const double product_error = (pulse_product(seq) - Matrix8cd::Identity()).cwiseAbs().maxCoeff();
  const bool pass = report.verdict >= 3 && spread < 1e-10 && half_error <= 1e-15 && product_error <= 1e-13;
  return {pass, fmt("verdict %d, max relative spread %.2e, half-sum error %.1e, pulse product error %.1e",
                    report.verdict, spread, half_error, product_error)};
}

Outcome expansion_oracle() {
  using namespace exdd::testing;
  std::mt19937_64 rng(7);
  const std::vector<double> eps{1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  bool pass = true;
  std::string detail = "slopes";
  for (int m = 1; m <= 3; ++m) {
    double lo = INFINITY, hi = -INFINITY;
    for (int trial = 0; trial < 4; ++trial) {
      const auto schedule = random_schedule(rng, 4 + trial);
      const auto tau = random_intervals(rng, schedule.size());
      const auto bath = random_bath_operators(rng);
      const auto ledger = expand_product(schedule, tau, m);
      std::vector<double> errors;
      for (double e : eps)
        errors.push_back((exact_product(schedule, tau, bath, e) - instantiate_ledger(ledger, bath, e)).cwiseAbs().maxCoeff());
      // Errors below 1e-13 sit on the double-precision floor of the products.
      const double slope = fit_exponent(eps, errors, FitWindow{1e-13, 1.0}).exponent;
      lo = std::min(lo, slope);
      hi = std::max(hi, slope);
      pass = pass && std::abs(slope - (m + 1)) <= 0.2;
    }
    detail += fmt(" m=%d: [%.3f, %.3f]", m, lo, hi);
  }
  return {pass, detail};
}

Outcome exponent_check(const SweepResult& r, double tolerance) {
  bool pass = true;
  std::string detail = "exponents";
  for (const auto& f : r.fits) {
    if (!f.valid) {
      pass = false;
      detail += fmt(" n=%d: %s", f.order, f.message.c_str());
      continue;
    }
    const bool ok = std::abs(f.fit.exponent - f.expected_exponent) <= tolerance * f.expected_exponent;
    pass = pass && ok;
    detail += fmt(" n=%d: %.3f/%d (%d pts)", f.order, f.fit.exponent, f.expected_exponent, f.fit.points);
  }
  return {pass, detail};
}

Outcome classical_scaling() {
  SweepOptions o;
  o.kind = SimulationKind::classical;
  o.orders = {0, 1, 2, 3, 4};
  o.T_us = log_grid(1e-9, 1e-1, 49);
  o.bath_instances = 10;
  o.states = 20;
  return exponent_check(sweep_infidelity(o), 0.10);
}

Outcome quantum_scaling() {
  SweepOptions o;
  o.kind = SimulationKind::quantum;
  o.orders = {0, 1, 2, 3};
  o.T_us = log_grid(1e-9, 1e-1, 49);
  o.trials = 16;
  return exponent_check(sweep_infidelity(o), 0.15);
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int c = 0; c < 100; ++c) {
    const auto seq = c % 2 == 0 ? a3_sequence(c % 5) : s3_sequence(1 + c % 4);
    const ClassicalBathModel bath(rng(), ClassicalBathParams{});
    const auto state = random_dfs_state(rng());
    const double T = std::pow(10.0, -10.0 + 3.0 * u(rng));
    worst = std::max(worst, std::abs(classical_fidelity_fast(seq, bath, T, state) -
                                     classical_fidelity_unitary(seq, bath, T, state)));
  }
  return {worst <= 1e-10, fmt("max |F_phase - F_unitary| = %.2e over 100 cases", worst)};
}

Outcome filter_slopes() {
  bool pass = true;
  double worst_rel = 0.0;
  for (int n = 0; n <= 4; ++n) {
    const double expected = 2.0 * (n + 1);
    const auto udd = udd_sequence(n);
    const auto a3 = a3_sequence(n);
    std::vector<std::pair<std::vector<int>, std::vector<double>>> cases{
        {switching_functions(udd).values[0], udd.boundaries()}};
    for (const auto& f : switching_functions(a3).values) cases.emplace_back(f, a3.boundaries());
    for (const auto& [f, b] : cases) {
      const double rel = std::abs(low_frequency_slope(f, b) - expected) / expected;
      worst_rel = std::max(worst_rel, rel);
      pass = pass && rel <= 0.05;
    }
  }
  const auto udd1 = udd_sequence(1);
  double curve_error = 0.0;
  for (double x : default_filter_grid())
    curve_error = std::max(curve_error, std::abs(filter_value(udd1, 0, x) - 16.0 * std::pow(std::sin(x / 4.0), 4)));
  pass = pass && curve_error <= 1e-12;
  return {pass, fmt("worst relative slope error %.2e; UDD n=1 curve error %.1e", worst_rel, curve_error)};
}

bool has_sequence(const std::vector<SearchResult>& results, const std::vector<int>& labels,
                  const std::vector<double>& lengths) {
  for (const auto& r : results) {
    std::vector<int> l;
    for (const auto& h : r.sequence.hamiltonians) l.push_back(h.label());
    if (l == labels && max_abs_diff(r.sequence.interval_lengths(), lengths) < 1e-9) return true;
  }
  return false;
}

Outcome search_reproduction() {
  const std::vector<HamiltonianType> pool{HamiltonianType(1), HamiltonianType(2), HamiltonianType(3)};
  const auto first = search_sequences(1, 3, pool);
  const auto second = search_sequences(2, 5, pool);
  const bool f = has_sequence(first, {1, 2, 3}, {1.0 / 3, 1.0 / 3, 1.0 / 3});
  const bool s = has_sequence(second, {1, 2, 3, 2, 1}, {1.0 / 6, 1.0 / 6, 1.0 / 3, 1.0 / 6, 1.0 / 6});
  return {f && s, fmt("first order: %s (%zu found); second order {1,1,2,1,1}/6: %s (%zu found)",
                      f ? "recovered" : "missing", first.size(), s ? "recovered" : "missing", second.size())};
}

Outcome appendix_properties() {
  double sum_error = 0.0;
  for (int i = 0; i < 100; ++i)
    for (int j = 0; j < 100; ++j)
      sum_error = std::max(sum_error, std::abs(fidelity_coefficients(i / 99.0, 2.0 * std::numbers::pi * j / 99.0).sum() - 1.0));
  std::mt19937_64 rng(1618);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0.0;
  for (int c = 0; c < 1000; ++c) {
    const std::array<double, 3> th{4 * u(rng) - 2, 4 * u(rng) - 2, 4 * u(rng) - 2};
    Vector8cd d;
    for (int x = 0; x < 8; ++x) {
      double a = 0.0;
      for (int q = 0; q < 3; ++q) a += ((x >> (2 - q)) & 1 ? -1.0 : 1.0) * th[static_cast<std::size_t>(q)];
      d[x] = std::polar(1.0, -a);
    }
    const Eigen::Vector2cd gauge =
        Eigen::Vector2cd(std::complex<double>(u(rng) - 0.5, u(rng) - 0.5), u(rng) - 0.5).normalized();
    const DfsState s(std::sqrt(u(rng)), 2 * std::numbers::pi * u(rng), gauge);
    worst = std::max(worst, std::abs(encoded_fidelity(Matrix8cd(d.asDiagonal()), s) -
                                     closed_form_fidelity(fidelity_coefficients(s.r(), s.phi()), th)));
  }
  return {sum_error <= 1e-12 && worst <= 1e-10,
          fmt("coefficient sum error %.1e on 100x100 grid; closed form vs matrix %.1e over 1000 propagators",
              sum_error, worst)};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> check;
  /// Runtime limit in seconds, 0 for none.
  double limit;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table reproduction", table_reproduction, 10.0},
      {2, "constraint residuals", constraint_residuals, 0.0},
      {3, "26-interval sequence verification", qdd3_verification, 60.0},
      {4, "expansion truncation scaling", expansion_oracle, 0.0},
      {5, "classical simulation scaling", classical_scaling, 300.0},
      {6, "quantum simulation scaling", quantum_scaling, 1800.0},
      {7, "oracle equivalence", oracle_equivalence, 0.0},
      {8, "filter slopes", filter_slopes, 0.0},
      {9, "search reproduction", search_reproduction, 0.0},
      {10, "fidelity identities", appendix_properties, 0.0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string timing = fmt("%.2f s", seconds);
    if (c.limit > 0.0) {
      timing += fmt(" (limit %.0f s)", c.limit);
      outcome.pass = outcome.pass && seconds < c.limit;
    }
    failures += !outcome.pass;
    std::printf("%s criterion %d: %s - %s [%s]\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
