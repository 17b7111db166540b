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

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "exdd/error.hpp"
#include "exdd/expansion.hpp"
#include "exdd/fit.hpp"
#include "exdd/search.hpp"
#include "exdd/tables.hpp"
#include "support/expansion_oracle.hpp"

using namespace exdd;
using namespace exdd::testing;
using cd = std::complex<double>;

TEST(bath_word, pack_round_trip_and_order) {
  const BathWord w{0, 3, 9, 3};
  EXPECT_EQ(BathWord::unpack(w.pack()), w);
  EXPECT_NE(BathWord({1, 2}).pack(), BathWord({2, 1}).pack());
  EXPECT_EQ(BathWord{}.pack(), 0u);
  EXPECT_EQ(BathWord({1}).concat(BathWord({2, 3})), BathWord({1, 2, 3}));
  EXPECT_THROW(BathWord({1, 2, 3}).concat(BathWord({4, 5})), ValidationError);
  EXPECT_EQ(BathWord({0, bath_symbol(1, 2)}).to_string(), "B0 B2z");
}

TEST(quantum_hamiltonian, terms) {
  for (int l = 1; l <= 6; ++l) {
    const auto h = quantum_hamiltonian(HamiltonianType(l));
    EXPECT_EQ(h.size(), 10u);
    EXPECT_TRUE(h[0].pauli.is_identity());
    EXPECT_EQ(h[0].bath_symbol, bath_symbol_b0());
    EXPECT_EQ(h[0].coefficient, cd(1.0));
  }
  auto has = [](int label, const char* pauli, int symbol) {
    for (const auto& t : quantum_hamiltonian(HamiltonianType(label)))
      if (t.pauli == PauliWord::parse(pauli) && t.bath_symbol == symbol) return t.coefficient == cd(1.0);
    return false;
  };
  EXPECT_TRUE(has(1, "XII", bath_symbol(0, 0)));
  EXPECT_TRUE(has(2, "IXI", bath_symbol(0, 0)));
  EXPECT_TRUE(has(2, "IIY", bath_symbol(1, 1)));
  EXPECT_TRUE(has(2, "ZII", bath_symbol(2, 2)));
  EXPECT_FALSE(has(2, "XII", bath_symbol(0, 0)));
}

TEST(expand_product, order_zero_is_identity) {
  const auto l = expand_product(qdd3_sequence(), 0);
  EXPECT_EQ(l.size(), 1u);
  EXPECT_EQ(l.coefficient(PauliWord{}, BathWord{}), cd(1.0));
}

TEST(expand_product, first_order_examples) {
  const auto l = expand_product(a3_sequence(1), 1);
  for (int q = 0; q < 3; ++q) {
    const cd c = l.coefficient(PauliWord::single(q, PauliLetter::Z), BathWord{bath_symbol(0, 2)});
    EXPECT_NEAR(std::abs(c - cd(0, -1.0 / 3)), 0.0, 1e-15);
  }
  const std::vector<HamiltonianType> single{HamiltonianType(1)};
  const std::vector<double> tau{1.0};
  const auto s = expand_product(single, tau, 1);
  EXPECT_EQ(s.coefficient(PauliWord::single(1, PauliLetter::Z), BathWord{bath_symbol(0, 2)}), cd(0.0));
  EXPECT_EQ(s.coefficient(PauliWord::single(0, PauliLetter::Z), BathWord{bath_symbol(0, 2)}), cd(0, -1.0));
}

TEST(expand_product, rejects_high_orders) {
  EXPECT_THROW(expand_product(a3_sequence(1), 5), ValidationError);
  EXPECT_NO_THROW(expand_product(a3_sequence(1), 4));
}

TEST(expand_product, coefficients_are_homogeneous_in_tau) {
  // Order-k coefficients scale as lambda^k when every interval is scaled.
  const auto seq = a3_sequence(2);
  auto lengths = seq.interval_lengths();
  const auto base = expand_product(seq.hamiltonians, lengths, 3);
  for (auto& t : lengths) t *= 0.5;
  const auto scaled = expand_product(seq.hamiltonians, lengths, 3);
  for (int k = 0; k <= 3; ++k)
    for (const auto& [key, c] : base.terms(k)) {
      const auto it = scaled.terms(k).find(key);
      ASSERT_NE(it, scaled.terms(k).end());
      EXPECT_NEAR(std::abs(it->second - c * std::pow(0.5, k)), 0.0, 1e-15);
    }
}

TEST(expand_product, truncation_error_scales_with_next_order) {
  std::mt19937_64 rng(2024);
  const std::vector<double> eps{1e-2, 3e-3, 1e-3, 3e-4, 1e-4};
  for (int m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 2; ++trial) {
      const auto schedule = random_schedule(rng, 5);
      const auto tau = random_intervals(rng, schedule.size());
      const auto bath = random_bath_operators(rng);
      const auto ledger = expand_product(schedule, tau, m);
      std::vector<double> errors;
      for (double e : eps) {
        const Eigen::MatrixXcd exact = exact_product(schedule, tau, bath, e);
        errors.push_back((exact - instantiate_ledger(ledger, bath, e)).cwiseAbs().maxCoeff());
      }
      // Errors below 1e-13 sit on the round-off floor of the 32 x 32 products.
      const auto fit = fit_exponent(eps, errors, FitWindow{1e-13, 1.0});
      EXPECT_NEAR(fit.exponent, m + 1, 0.2) << "m=" << m;
    }
}

TEST(globalization, low_order_a3_sequences) {
  const auto r1 = globalization_report(a3_sequence(1), 1);
  EXPECT_GE(r1.verdict, 1);
  const auto r2 = globalization_report(a3_sequence(2), 2);
  EXPECT_GE(r2.verdict, 2);
  for (const auto& o : r2.orders) EXPECT_LT(o.max_relative_spread, 1e-12);
  EXPECT_GE(globalization_report(s3_sequence(1), 1).verdict, 1);
  EXPECT_GE(globalization_report(s3_sequence(2), 2).verdict, 2);
}

TEST(globalization, third_order_a3_fails) {
  const auto r = globalization_report(a3_sequence(3), 3);
  EXPECT_LT(r.verdict, 3);
  EXPECT_GT(r.orders.back().max_relative_spread, 1e-6);
}

TEST(globalization, qdd3_reaches_third_order) {
  const auto r = globalization_report(qdd3_sequence(), 3);
  EXPECT_EQ(r.verdict, 3);
  for (const auto& o : r.orders) EXPECT_LT(o.max_relative_spread, 1e-10);
}

TEST(globalization, single_interval_fails_first_order) {
  const std::vector<HamiltonianType> single{HamiltonianType(1)};
  const std::vector<double> tau{1.0};
  EXPECT_EQ(globalization_report(expand_product(single, tau, 2)).verdict, 0);
}

TEST(globalization, report_invariants) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const auto schedule = random_schedule(rng, 4 + trial);
    std::vector<double> tau(schedule.size(), 1.0 / static_cast<double>(schedule.size()));
    const auto r = globalization_report(expand_product(schedule, tau, 3));
    EXPECT_GE(r.verdict, 0);
    EXPECT_LE(r.verdict, 3);
    for (const auto& o : r.orders) {
      EXPECT_GE(o.max_spread, 0.0);
      for (double s : o.orbit_spreads) EXPECT_GE(s, 0.0);
      // Verdict is the last order before the first failing one.
      if (o.order <= r.verdict) {
        EXPECT_LE(o.max_relative_spread, r.tolerance);
      }
      if (o.order == r.verdict + 1) {
        EXPECT_GT(o.max_relative_spread, r.tolerance);
      }
    }
  }
}

TEST(qdd3, layout) {
  const auto seq = qdd3_sequence();
  ASSERT_EQ(seq.intervals(), 26u);
  const auto lengths = seq.interval_lengths();
  EXPECT_DOUBLE_EQ(lengths[0], 0.02443154605193963);
  EXPECT_EQ(seq.hamiltonians[0].label(), 1);
  EXPECT_EQ(seq.hamiltonians[13].label(), 4);
  const std::array<int, 4> image = {0, 4, 6, 5};
  for (int k = 0; k < 13; ++k) {
    EXPECT_TRUE(seq.hamiltonians[static_cast<std::size_t>(k)].is_even());
    EXPECT_EQ(seq.hamiltonians[static_cast<std::size_t>(k + 13)].label(),
              image[static_cast<std::size_t>(seq.hamiltonians[static_cast<std::size_t>(k)].label())]);
    EXPECT_NEAR(lengths[static_cast<std::size_t>(k)], lengths[static_cast<std::size_t>(k + 13)], 1e-15);
  }
  EXPECT_EQ(seq.times[12], 0.5);
  EXPECT_LT((pulse_product(seq) - Matrix8cd::Identity()).cwiseAbs().maxCoeff(), 1e-13);
  // The closing pulse is derived, and turns out to be the exchange of qubits 1 and 2.
  EXPECT_EQ(seq.pulses.back(), PulseKind::P12);
  for (std::size_t k = 0; k + 1 < seq.pulses.size(); ++k) EXPECT_EQ(seq.pulses[k], qdd3_half_pulses()[k % 13]);
}

TEST(qdd3, halves_and_palindromes) {
  const auto& half = tables::qdd3_half_intervals();
  double sum = 0.0;
  for (double l : half) sum += l;
  EXPECT_NEAR(sum, 0.5, 1e-15);
  for (int k = 0; k < 13; ++k) EXPECT_EQ(half[static_cast<std::size_t>(k)], half[static_cast<std::size_t>(12 - k)]);
}

TEST(search, enumeration_is_canonical_and_admissible) {
  std::vector<HamiltonianType> pool;
  for (int l = 1; l <= 6; ++l) pool.emplace_back(l);
  const auto schedules = enumerate_schedules(5, pool);
  auto labels = [](const std::vector<HamiltonianType>& s) {
    std::vector<int> out;
    for (const auto& h : s) out.push_back(h.label());
    return out;
  };
  std::set<std::vector<int>> all;
  for (const auto& s : schedules) all.insert(labels(s));
  EXPECT_EQ(all.size(), schedules.size());
  for (const auto& s : schedules) {
    EXPECT_EQ(s.front().label(), 1);
    for (std::size_t k = 1; k < s.size(); ++k) {
      EXPECT_NE(s[k], s[k - 1]);
      EXPECT_TRUE(pulse_for_permutation(s[k].permutation().inverse() * s[k - 1].permutation()).has_value());
    }
    EXPECT_TRUE(pulse_for_permutation(s.back().permutation()).has_value());
    // No two representatives are relabellings of each other.
    for (const auto& pi : Permutation3::all()) {
      if (pi.is_identity()) continue;
      std::vector<int> image;
      for (const auto& h : s) image.push_back(HamiltonianType::from_permutation(pi * h.permutation()).label());
      EXPECT_FALSE(all.count(image)) << "relabelled duplicate";
    }
  }
  EXPECT_FALSE(schedules.empty());
}

TEST(search, first_order_equal_intervals) {
  const std::vector<HamiltonianType> pool{HamiltonianType(1), HamiltonianType(2), HamiltonianType(3)};
  const auto results = search_sequences(1, 3, pool);
  ASSERT_FALSE(results.empty());
  bool found = false;
  for (const auto& r : results) {
    std::vector<int> labels;
    for (const auto& h : r.sequence.hamiltonians) labels.push_back(h.label());
    if (labels != std::vector<int>{1, 2, 3}) continue;
    found = true;
    for (double l : r.sequence.interval_lengths()) EXPECT_NEAR(l, 1.0 / 3, 1e-10);
  }
  EXPECT_TRUE(found);
  for (std::size_t i = 1; i < results.size(); ++i) EXPECT_LE(results[i - 1].ratio, results[i].ratio);
}

TEST(search, single_type_pool_is_empty) {
  const std::vector<HamiltonianType> pool{HamiltonianType(1)};
  EXPECT_TRUE(search_sequences(1, 4, pool).empty());
}

TEST(search, rejects_out_of_scope_requests) {
  const std::vector<HamiltonianType> pool{HamiltonianType(1), HamiltonianType(2)};
  EXPECT_THROW(search_sequences(3, 5, pool), ValidationError);
  EXPECT_THROW(search_sequences(1, 13, pool), ValidationError);
}
