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
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "exdd/pauli.hpp"
#include "exdd/sequence.hpp"

namespace exdd {

/// Formal bath operators: B0 (pure bath) and B_{j,a} for qubit bath
/// j = 1..3 and component a = x,y,z.
inline constexpr int kBathSymbolCount = 10;
inline constexpr int kMaxExpansionOrder = 4;

constexpr int bath_symbol_b0() { return 0; }
/// bath in 0..2, component in 0..2 (x, y, z).
constexpr int bath_symbol(int bath, int component) { return 1 + 3 * bath + component; }
std::string bath_symbol_name(int symbol);

/// Ordered word of bath symbols. Bath operators do not commute, so words
/// are compared by sequence. The empty word stands for the identity.
class BathWord {
 public:
  BathWord() = default;
  explicit BathWord(std::initializer_list<int> symbols);

  int length() const { return length_; }
  int operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }

  /// Injective code: sum (s_i + 1) 11^i.
  std::uint32_t pack() const;
  static BathWord unpack(std::uint32_t code);

  /// this followed by other; throws when the result exceeds the maximum order.
  BathWord concat(const BathWord& other) const;

  std::string to_string() const;
  bool operator==(const BathWord&) const = default;

 private:
  std::array<std::uint8_t, kMaxExpansionOrder> symbols_{};
  int length_ = 0;
};

struct FormalTerm {
  PauliWord pauli;
  int bath_symbol;
  std::complex<double> coefficient;
};

/// B0 plus S_j . B_i with qubit j = sigma(i) for the given type: ten terms.
std::vector<FormalTerm> quantum_hamiltonian(HamiltonianType type);

/// Sparse map (PauliWord, BathWord) -> coefficient, truncated at `order`.
class ExpansionLedger {
 public:
  explicit ExpansionLedger(int order);

  static ExpansionLedger identity(int order);

  int order() const { return order_; }
  std::complex<double> coefficient(PauliWord pauli, const BathWord& word) const;
  void add(PauliWord pauli, const BathWord& word, std::complex<double> value);

  /// Terms whose bath word has length k.
  using Bucket = std::unordered_map<std::uint64_t, std::complex<double>>;
  const Bucket& terms(int k) const { return buckets_[static_cast<std::size_t>(k)]; }
  std::size_t size() const;

  static std::uint64_t key(PauliWord pauli, std::uint32_t packed_word) {
    return static_cast<std::uint64_t>(packed_word) << 6 | static_cast<std::uint64_t>(pauli.code());
  }
  static PauliWord key_pauli(std::uint64_t key) { return PauliWord::from_code(static_cast<int>(key & 63)); }
  static std::uint32_t key_word(std::uint64_t key) { return static_cast<std::uint32_t>(key >> 6); }

  /// later * earlier truncated at min(later.order, earlier.order).
  friend ExpansionLedger operator*(const ExpansionLedger& later, const ExpansionLedger& earlier);
  friend ExpansionLedger interval_series(const std::vector<ExpansionLedger>& powers, double tau, bool derivative);

 private:
  int order_;
  std::vector<Bucket> buckets_;
};

/// Powers H^j (j = 0..order) of a formal Hamiltonian as ledgers.
std::vector<ExpansionLedger> formal_powers(const std::vector<FormalTerm>& hamiltonian, int order);

/// exp(-i H tau) truncated at `order`, or its tau-derivative.
ExpansionLedger interval_series(const std::vector<ExpansionLedger>& powers, double tau, bool derivative = false);

/// prod_k exp(-i H_{sigma(k)} tau_k), later intervals to the left.
/// Throws ValidationError for order > kMaxExpansionOrder.
ExpansionLedger expand_product(std::span<const HamiltonianType> hamiltonians, std::span<const double> intervals,
                               int order);
ExpansionLedger expand_product(const PulseSequence& seq, int order);

struct OrderSpread {
  int order = 0;
  /// Largest |coefficient| among terms of this order.
  double scale = 0.0;
  double max_spread = 0.0;
  double max_relative_spread = 0.0;
  /// Per orbit: largest spread over bath words.
  std::vector<double> orbit_spreads;
  std::string worst_pauli;
  std::string worst_word;
};

struct GlobalizationReport {
  int max_order = 0;
  double tolerance = 0.0;
  /// Highest order through which every orbit is coefficient-uniform.
  int verdict = 0;
  std::vector<OrderSpread> orders;
};

inline constexpr double kGlobalizationTolerance = 1e-10;

/// Groups terms by (orbit of the Pauli word, bath word) and measures how far
/// the members of each group are from sharing one coefficient.
GlobalizationReport globalization_report(const ExpansionLedger& ledger, double tolerance = kGlobalizationTolerance);
GlobalizationReport globalization_report(const PulseSequence& seq, int order,
                                         double tolerance = kGlobalizationTolerance);

/// One coefficient-equality constraint: members[0] must match each other member.
struct OrbitGroup {
  int order;
  std::uint32_t word;
  std::vector<PauliWord> members;
};

/// Groups with at least one structurally nonzero member in `ledger`, orders 1..order.
std::vector<OrbitGroup> orbit_groups(const ExpansionLedger& ledger);

}  // namespace exdd
