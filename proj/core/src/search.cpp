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

#include "exdd/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <thread>

#include <Eigen/Dense>

#include "exdd/error.hpp"
#include "exdd/expansion.hpp"
#include "exdd/random.hpp"
#include "exdd/tables.hpp"

namespace exdd {
namespace {

using Powers = std::array<std::vector<ExpansionLedger>, 6>;

bool single_pulse(const Permutation3& pi) { return pulse_for_permutation(pi).has_value(); }

bool admissible_step(HamiltonianType from, HamiltonianType to) {
  if (from == to) return false;
  return single_pulse(to.permutation().inverse() * from.permutation());
}

/// True when no qubit relabelling that preserves the pool maps the schedule
/// to a lexicographically smaller one.
bool canonical(const std::vector<HamiltonianType>& schedule, std::span<const HamiltonianType> pool) {
  auto in_pool = [&](HamiltonianType t) { return std::find(pool.begin(), pool.end(), t) != pool.end(); };
  for (const auto& pi : Permutation3::all()) {
    if (pi.is_identity()) continue;
    bool closed = true;
    for (const auto& t : pool) closed = closed && in_pool(HamiltonianType::from_permutation(pi * t.permutation()));
    if (!closed) continue;
    for (std::size_t k = 0; k < schedule.size(); ++k) {
      const int image = HamiltonianType::from_permutation(pi * schedule[k].permutation()).label();
      if (image < schedule[k].label()) return false;
      if (image > schedule[k].label()) break;
    }
  }
  return true;
}

/// Coefficient-equality residuals of one schedule as a function of x, with
/// interval lengths tau = x^2 and the extra row sum(x^2) - 1.
class EqualityProblem {
 public:
  EqualityProblem(const Powers& powers, std::vector<HamiltonianType> schedule, int order, std::uint64_t seed)
      : powers_(powers), schedule_(std::move(schedule)), order_(order) {
    // Structural nonzero pattern from a generic point.
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.5, 1.5);
    std::vector<double> tau(schedule_.size());
    for (auto& t : tau) t = u(rng) / static_cast<double>(tau.size());
    for (const auto& g : orbit_groups(expand_product(schedule_, tau, order_))) {
      std::vector<std::uint64_t> keys;
      for (const auto& m : g.members) keys.push_back(ExpansionLedger::key(m, g.word));
      groups_.push_back({g.order, std::move(keys)});
      rows_ += 2 * (static_cast<int>(groups_.back().keys.size()) - 1);
    }
    rows_ += 1;
  }

  int rows() const { return rows_; }
  int unknowns() const { return static_cast<int>(schedule_.size()); }
  const std::vector<HamiltonianType>& schedule() const { return schedule_; }

  void evaluate(const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd* jac) const {
    const int n = unknowns();
    std::vector<ExpansionLedger> s, pre;
    pre.push_back(ExpansionLedger::identity(order_));
    for (int k = 0; k < n; ++k) {
      s.push_back(interval_series(powers_of(k), x[k] * x[k]));
      pre.push_back(s.back() * pre.back());
    }
    r.resize(rows_);
    fill(pre.back(), r);
    r[rows_ - 1] = x.squaredNorm() - 1.0;
    if (!jac) return;
    jac->resize(rows_, n);
    ExpansionLedger suffix = ExpansionLedger::identity(order_);
    Eigen::VectorXd column(rows_);
    for (int k = n - 1; k >= 0; --k) {
      const ExpansionLedger d = suffix * (interval_series(powers_of(k), x[k] * x[k], true) * pre[k]);
      fill(d, column);
      column *= 2.0 * x[k];
      column[rows_ - 1] = 2.0 * x[k];
      jac->col(k) = column;
      suffix = suffix * s[static_cast<std::size_t>(k)];
    }
  }

 private:
  struct Group {
    int order;
    std::vector<std::uint64_t> keys;
  };

  const std::vector<ExpansionLedger>& powers_of(int k) const {
    return powers_[static_cast<std::size_t>(schedule_[static_cast<std::size_t>(k)].label() - 1)];
  }

  void fill(const ExpansionLedger& ledger, Eigen::VectorXd& out) const {
    int row = 0;
    for (const auto& g : groups_) {
      const auto& bucket = ledger.terms(g.order);
      auto value = [&](std::uint64_t key) {
        const auto it = bucket.find(key);
        return it == bucket.end() ? std::complex<double>{} : it->second;
      };
      const auto c0 = value(g.keys.front());
      for (std::size_t i = 1; i < g.keys.size(); ++i) {
        const auto d = value(g.keys[i]) - c0;
        out[row++] = d.real();
        out[row++] = d.imag();
      }
    }
  }

  const Powers& powers_;
  std::vector<HamiltonianType> schedule_;
  int order_;
  std::vector<Group> groups_;
  int rows_ = 0;
};

/// Levenberg-Marquardt from x0; returns the final point.
Eigen::VectorXd levenberg_marquardt(const EqualityProblem& problem, Eigen::VectorXd x, const SearchOptions& options) {
  Eigen::VectorXd r, trial_r;
  Eigen::MatrixXd jac;
  problem.evaluate(x, r, &jac);
  double cost = r.squaredNorm(), lambda = 1e-3;
  int stalled = 0;
  for (int it = 0; it < options.max_iterations && r.lpNorm<Eigen::Infinity>() > 0.1 * options.tolerance; ++it) {
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd g = jac.transpose() * r;
    bool improved = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd a = jtj;
      a.diagonal().array() += lambda * (jtj.diagonal().array() + 1e-12);
      const Eigen::VectorXd trial = x - a.ldlt().solve(g);
      problem.evaluate(trial, trial_r, nullptr);
      const double trial_cost = trial_r.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost < cost) {
        x = trial;
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-12);
        improved = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!improved) break;
    // A nonzero local minimum: stop once progress has stalled.
    const double previous = r.squaredNorm();
    stalled = previous - cost < 1e-4 * previous ? stalled + 1 : 0;
    if (stalled >= 5) break;
    problem.evaluate(x, r, &jac);
  }
  return x;
}

std::optional<SearchResult> solve_schedule(const Powers& powers, const std::vector<HamiltonianType>& schedule,
                                           int order, std::uint64_t seed, const SearchOptions& options) {
  const EqualityProblem problem(powers, schedule, order, seed);
  const int n = problem.unknowns();
  std::mt19937_64 rng(splitmix64(seed));
  std::uniform_real_distribution<double> u(0.2, 1.0);
  std::optional<SearchResult> best;
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    Eigen::VectorXd tau(n);
    for (int k = 0; k < n; ++k) tau[k] = restart == 0 ? 1.0 : u(rng);
    if (restart % 2 == 1)  // palindromic start
      for (int k = 0; k < n / 2; ++k) tau[n - 1 - k] = tau[k];
    tau /= tau.sum();
    Eigen::VectorXd x = levenberg_marquardt(problem, tau.cwiseSqrt(), options);
    tau = x.cwiseAbs2();
    tau /= tau.sum();
    if (tau.minCoeff() < options.min_interval) continue;
    Eigen::VectorXd r;
    problem.evaluate(tau.cwiseSqrt(), r, nullptr);
    const double residual = r.lpNorm<Eigen::Infinity>();
    if (!(residual <= options.tolerance)) continue;
    const double ratio = tau.maxCoeff() / tau.minCoeff();
    if (best && best->ratio <= ratio) continue;
    std::vector<double> times;
    double acc = 0.0;
    for (int k = 0; k + 1 < n; ++k) times.push_back(acc += tau[k]);
    PulseSequence seq;
    try {
      seq = make_sequence(Group::custom, order, schedule, times);
    } catch (const ValidationError&) {
      continue;
    }
    if (globalization_report(seq, order).verdict < order) continue;
    best = SearchResult{std::move(seq), residual, ratio};
  }
  return best;
}

}  // namespace

const std::vector<PulseKind>& qdd3_half_pulses() {
  using enum PulseKind;
  static const std::vector<PulseKind> kPulses = {P, P, Pinv, Pinv, Pinv, P, P, Pinv, Pinv, Pinv, P, P, P12};
  return kPulses;
}

PulseSequence qdd3_sequence() {
  static constexpr std::array<int, 13> kFirstHalf = {1, 2, 3, 2, 1, 3, 1, 2, 1, 3, 2, 3, 1};
  static constexpr std::array<int, 4> kOddImage = {0, 4, 6, 5};  // H1->H4, H2->H6, H3->H5
  const auto& half = tables::qdd3_half_intervals();
  std::vector<HamiltonianType> hams;
  std::vector<double> lengths;
  for (int pass = 0; pass < 2; ++pass)
    for (std::size_t k = 0; k < kFirstHalf.size(); ++k) {
      hams.emplace_back(pass == 0 ? kFirstHalf[k] : kOddImage[static_cast<std::size_t>(kFirstHalf[k])]);
      lengths.push_back(half[k]);
    }
  // Both halves tile [0, 1/2] and [1/2, 1]; summing each half separately
  // keeps the midpoint exact.
  std::vector<double> times;
  double acc = 0.0;
  for (std::size_t k = 0; k + 1 < lengths.size(); ++k) {
    if (k == half.size()) acc = 0.5;
    acc += lengths[k];
    times.push_back(k + 1 == half.size() ? 0.5 : acc);
  }
  PulseSequence seq = make_sequence(Group::custom, 3, std::move(hams), std::move(times));
  const auto& published = qdd3_half_pulses();
  for (std::size_t k = 0; k < seq.pulses.size(); ++k) {
    if (k + 1 == seq.pulses.size()) break;  // closing pulse follows from the schedule
    if (seq.pulses[k] != published[k % published.size()])
      throw ValidationError("derived pulse " + std::string(to_string(seq.pulses[k])) + " after interval " +
                            std::to_string(k + 1) + " differs from the published column");
  }
  return seq;
}

std::vector<std::vector<HamiltonianType>> enumerate_schedules(int max_intervals, std::span<const HamiltonianType> pool) {
  std::vector<HamiltonianType> sorted(pool.begin(), pool.end());
  std::sort(sorted.begin(), sorted.end(), [](auto a, auto b) { return a.label() < b.label(); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::vector<HamiltonianType>> out;
  std::vector<HamiltonianType> current;
  for (int length = 1; length <= max_intervals; ++length) {
    auto recurse = [&](auto&& self) -> void {
      if (static_cast<int>(current.size()) == length) {
        if (single_pulse(current.back().permutation()) && canonical(current, sorted)) out.push_back(current);
        return;
      }
      for (const auto& t : sorted) {
        if (!current.empty() && !admissible_step(current.back(), t)) continue;
        current.push_back(t);
        self(self);
        current.pop_back();
      }
    };
    recurse(recurse);
  }
  return out;
}

std::vector<SearchResult> search_sequences(int order, int max_intervals, std::span<const HamiltonianType> pool,
                                           const SearchOptions& options) {
  if (order < 1 || order > 2) throw ValidationError("search order must be 1 or 2, got " + std::to_string(order));
  if (max_intervals < 1 || max_intervals > 12)
    throw ValidationError("max_intervals must be 1..12, got " + std::to_string(max_intervals));
  const auto candidates = enumerate_schedules(max_intervals, pool);
  Powers powers;
  for (int label = 1; label <= 6; ++label)
    powers[static_cast<std::size_t>(label - 1)] = formal_powers(quantum_hamiltonian(HamiltonianType(label)), order);

  std::vector<std::optional<SearchResult>> found(candidates.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < candidates.size(); i = next++)
      found[i] = solve_schedule(powers, candidates[i], order, derive_seed(options.seed, i), options);
  };
  const int threads = options.threads > 0 ? options.threads
                                          : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool_threads;
  for (int t = 1; t < std::min<int>(threads, static_cast<int>(candidates.size())); ++t) pool_threads.emplace_back(worker);
  worker();
  for (auto& t : pool_threads) t.join();

  std::vector<SearchResult> results;
  for (auto& f : found)
    if (f) results.push_back(std::move(*f));
  std::stable_sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.ratio < b.ratio; });
  return results;
}

}  // namespace exdd
