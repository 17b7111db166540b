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

#include "exdd/expansion.hpp"

#include <algorithm>
#include <map>

#include "exdd/error.hpp"

namespace exdd {
namespace {

using cd = std::complex<double>;

constexpr std::uint32_t kWordBase = kBathSymbolCount + 1;

}  // namespace

std::string bath_symbol_name(int symbol) {
  if (symbol == 0) return "B0";
  static constexpr char kAxes[] = {'x', 'y', 'z'};
  return "B" + std::to_string((symbol - 1) / 3 + 1) + kAxes[(symbol - 1) % 3];
}

BathWord::BathWord(std::initializer_list<int> symbols) {
  if (symbols.size() > kMaxExpansionOrder) throw ValidationError("bath word too long");
  for (int s : symbols) {
    if (s < 0 || s >= kBathSymbolCount) throw ValidationError("bad bath symbol");
    symbols_[static_cast<std::size_t>(length_++)] = static_cast<std::uint8_t>(s);
  }
}

std::uint32_t BathWord::pack() const {
  std::uint32_t code = 0, scale = 1;
  for (int i = 0; i < length_; ++i) {
    code += (symbols_[static_cast<std::size_t>(i)] + 1u) * scale;
    scale *= kWordBase;
  }
  return code;
}

BathWord BathWord::unpack(std::uint32_t code) {
  BathWord w;
  while (code != 0) {
    w.symbols_[static_cast<std::size_t>(w.length_++)] = static_cast<std::uint8_t>(code % kWordBase - 1);
    code /= kWordBase;
  }
  return w;
}

BathWord BathWord::concat(const BathWord& other) const {
  if (length_ + other.length_ > kMaxExpansionOrder) throw ValidationError("bath word exceeds maximum order");
  BathWord w = *this;
  for (int i = 0; i < other.length_; ++i)
    w.symbols_[static_cast<std::size_t>(w.length_++)] = other.symbols_[static_cast<std::size_t>(i)];
  return w;
}

std::string BathWord::to_string() const {
  if (length_ == 0) return "1";
  std::string s;
  for (int i = 0; i < length_; ++i) {
    if (i) s += ' ';
    s += bath_symbol_name(symbols_[static_cast<std::size_t>(i)]);
  }
  return s;
}

std::vector<FormalTerm> quantum_hamiltonian(HamiltonianType type) {
  std::vector<FormalTerm> h;
  h.push_back({PauliWord{}, bath_symbol_b0(), 1.0});
  static constexpr PauliLetter kAxes[] = {PauliLetter::X, PauliLetter::Y, PauliLetter::Z};
  for (int bath = 0; bath < 3; ++bath) {
    const int qubit = type.permutation()(bath);
    for (int a = 0; a < 3; ++a) h.push_back({PauliWord::single(qubit, kAxes[a]), bath_symbol(bath, a), 1.0});
  }
  return h;
}

ExpansionLedger::ExpansionLedger(int order) : order_(order) {
  if (order < 0 || order > kMaxExpansionOrder)
    throw ValidationError("expansion order must be 0.." + std::to_string(kMaxExpansionOrder) + ", got " +
                          std::to_string(order));
  buckets_.resize(static_cast<std::size_t>(order + 1));
}

ExpansionLedger ExpansionLedger::identity(int order) {
  ExpansionLedger l(order);
  l.add(PauliWord{}, BathWord{}, 1.0);
  return l;
}

std::complex<double> ExpansionLedger::coefficient(PauliWord pauli, const BathWord& word) const {
  if (word.length() > order_) return 0.0;
  const auto& bucket = buckets_[static_cast<std::size_t>(word.length())];
  const auto it = bucket.find(key(pauli, word.pack()));
  return it == bucket.end() ? cd{} : it->second;
}

void ExpansionLedger::add(PauliWord pauli, const BathWord& word, std::complex<double> value) {
  if (word.length() > order_) return;
  buckets_[static_cast<std::size_t>(word.length())][key(pauli, word.pack())] += value;
}

std::size_t ExpansionLedger::size() const {
  std::size_t n = 0;
  for (const auto& b : buckets_) n += b.size();
  return n;
}

ExpansionLedger operator*(const ExpansionLedger& later, const ExpansionLedger& earlier) {
  const int order = std::min(later.order_, earlier.order_);
  ExpansionLedger out(order);
  for (int k = 0; k <= order; ++k) {
    std::size_t bound = 0;
    for (int ka = 0; ka <= k; ++ka)
      bound += later.buckets_[static_cast<std::size_t>(ka)].size() * earlier.buckets_[static_cast<std::size_t>(k - ka)].size();
    out.buckets_[static_cast<std::size_t>(k)].reserve(std::min<std::size_t>(bound, 64u * 10000u));
  }
  // Word concatenation in packed form: code(a b) = code(a) + code(b) * 11^len(a).
  std::array<std::uint32_t, kMaxExpansionOrder + 1> shift{};
  shift[0] = 1;
  for (std::size_t i = 1; i < shift.size(); ++i) shift[i] = shift[i - 1] * kWordBase;
  for (int ka = 0; ka <= order; ++ka) {
    for (const auto& [key_a, ca] : later.buckets_[static_cast<std::size_t>(ka)]) {
      const PauliWord pa = ExpansionLedger::key_pauli(key_a);
      const std::uint32_t wa = ExpansionLedger::key_word(key_a);
      for (int kb = 0; ka + kb <= order; ++kb) {
        auto& target = out.buckets_[static_cast<std::size_t>(ka + kb)];
        for (const auto& [key_b, cb] : earlier.buckets_[static_cast<std::size_t>(kb)]) {
          const auto prod = multiply(pa, ExpansionLedger::key_pauli(key_b));
          const std::uint32_t w = wa + ExpansionLedger::key_word(key_b) * shift[static_cast<std::size_t>(ka)];
          target[ExpansionLedger::key(prod.word, w)] += prod.phase * ca * cb;
        }
      }
    }
  }
  return out;
}

std::vector<ExpansionLedger> formal_powers(const std::vector<FormalTerm>& hamiltonian, int order) {
  ExpansionLedger h(order);
  if (order >= 1)
    for (const auto& t : hamiltonian) h.add(t.pauli, BathWord{t.bath_symbol}, t.coefficient);
  std::vector<ExpansionLedger> powers;
  powers.push_back(ExpansionLedger::identity(order));
  for (int j = 1; j <= order; ++j) powers.push_back(h * powers.back());
  return powers;
}

ExpansionLedger interval_series(const std::vector<ExpansionLedger>& powers, double tau, bool derivative) {
  const int order = static_cast<int>(powers.size()) - 1;
  ExpansionLedger out(order);
  // (-i tau)^j / j!, and its derivative (-i)^j tau^{j-1} / (j-1)!.
  cd factor = 1.0, dfactor = cd(0, -1);
  for (int j = 0; j <= order; ++j) {
    const cd weight = derivative ? (j == 0 ? cd{} : dfactor) : factor;
    if (weight != cd{})
      for (const auto& [key, c] : powers[static_cast<std::size_t>(j)].terms(j)) out.buckets_[static_cast<std::size_t>(j)][key] = weight * c;
    factor *= cd(0, -tau) / static_cast<double>(j + 1);
    if (j >= 1) dfactor *= cd(0, -tau) / static_cast<double>(j);
  }
  return out;
}

ExpansionLedger expand_product(std::span<const HamiltonianType> hamiltonians, std::span<const double> intervals,
                               int order) {
  if (order > kMaxExpansionOrder)
    throw ValidationError("expansion order " + std::to_string(order) + " exceeds the supported bound " +
                          std::to_string(kMaxExpansionOrder));
  if (hamiltonians.size() != intervals.size()) throw ValidationError("one interval length per Hamiltonian required");
  std::array<std::vector<ExpansionLedger>, 6> powers;
  ExpansionLedger u = ExpansionLedger::identity(order);
  for (std::size_t k = 0; k < hamiltonians.size(); ++k) {
    auto& p = powers[static_cast<std::size_t>(hamiltonians[k].label() - 1)];
    if (p.empty()) p = formal_powers(quantum_hamiltonian(hamiltonians[k]), order);
    u = interval_series(p, intervals[k]) * u;
  }
  return u;
}

ExpansionLedger expand_product(const PulseSequence& seq, int order) {
  const auto lengths = seq.interval_lengths();
  return expand_product(seq.hamiltonians, lengths, order);
}

std::vector<OrbitGroup> orbit_groups(const ExpansionLedger& ledger) {
  const OrbitTable& orbits = orbit_table();
  std::vector<OrbitGroup> groups;
  for (int k = 1; k <= ledger.order(); ++k) {
    std::map<std::pair<int, std::uint32_t>, bool> seen;
    for (const auto& [key, c] : ledger.terms(k)) {
      if (c == cd{}) continue;
      const int orbit = orbits.orbit_of(ExpansionLedger::key_pauli(key));
      const std::uint32_t w = ExpansionLedger::key_word(key);
      if (!seen.emplace(std::pair{orbit, w}, true).second) continue;
      if (orbits.members(orbit).size() < 2) continue;
      groups.push_back({k, w, orbits.members(orbit)});
    }
  }
  // Deterministic order independent of hashing.
  std::sort(groups.begin(), groups.end(), [](const OrbitGroup& a, const OrbitGroup& b) {
    if (a.order != b.order) return a.order < b.order;
    if (a.members.front() != b.members.front()) return a.members.front() < b.members.front();
    return a.word < b.word;
  });
  return groups;
}

GlobalizationReport globalization_report(const ExpansionLedger& ledger, double tolerance) {
  const OrbitTable& orbits = orbit_table();
  GlobalizationReport report;
  report.max_order = ledger.order();
  report.tolerance = tolerance;
  report.verdict = ledger.order();
  bool failed = false;
  for (int k = 1; k <= ledger.order(); ++k) {
    OrderSpread os;
    os.order = k;
    os.orbit_spreads.assign(static_cast<std::size_t>(orbits.size()), 0.0);
    for (const auto& [key, c] : ledger.terms(k)) os.scale = std::max(os.scale, std::abs(c));
    std::map<std::pair<int, std::uint32_t>, bool> done;
    for (const auto& [key, c] : ledger.terms(k)) {
      const int orbit = orbits.orbit_of(ExpansionLedger::key_pauli(key));
      const std::uint32_t w = ExpansionLedger::key_word(key);
      if (!done.emplace(std::pair{orbit, w}, true).second) continue;
      const auto& members = orbits.members(orbit);
      std::vector<cd> coeffs;
      for (const auto& m : members) {
        const auto& bucket = ledger.terms(k);
        const auto it = bucket.find(ExpansionLedger::key(m, w));
        coeffs.push_back(it == bucket.end() ? cd{} : it->second);
      }
      double spread = 0.0;
      for (std::size_t a = 0; a < coeffs.size(); ++a)
        for (std::size_t b = a + 1; b < coeffs.size(); ++b) spread = std::max(spread, std::abs(coeffs[a] - coeffs[b]));
      auto& slot = os.orbit_spreads[static_cast<std::size_t>(orbit)];
      slot = std::max(slot, spread);
      if (spread > os.max_spread) {
        os.max_spread = spread;
        os.worst_pauli = members.front().to_string();
        os.worst_word = BathWord::unpack(w).to_string();
      }
    }
    os.max_relative_spread = os.scale > 0.0 ? os.max_spread / os.scale : 0.0;
    if (!failed && os.max_relative_spread > tolerance) {
      failed = true;
      report.verdict = k - 1;
    }
    report.orders.push_back(std::move(os));
  }
  return report;
}

GlobalizationReport globalization_report(const PulseSequence& seq, int order, double tolerance) {
  return globalization_report(expand_product(seq, order), tolerance);
}

}  // namespace exdd
