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

#include "exdd/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "exdd/error.hpp"

namespace exdd {
namespace {

using nlohmann::json;

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string format_time(double t) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16g", t);
  return buf;
}

std::string sequence_to_json(const PulseSequence& seq) {
  json j;
  j["group"] = std::string(to_string(seq.group));
  j["order"] = seq.order;
  j["hamiltonians"] = json::array();
  for (const auto& h : seq.hamiltonians) j["hamiltonians"].push_back(h.label());
  j["times"] = json::array();
  for (double t : seq.times) j["times"].push_back(format_time(t));
  j["pulses"] = json::array();
  for (auto p : seq.pulses) j["pulses"].push_back(std::string(to_string(p)));
  return j.dump(2) + "\n";
}

PulseSequence sequence_from_json(std::string_view text) {
  PulseSequence seq;
  try {
    const json j = json::parse(text);
    seq.group = parse_group(j.at("group").get<std::string>());
    seq.order = j.at("order").get<int>();
    for (const auto& h : j.at("hamiltonians")) seq.hamiltonians.emplace_back(h.get<int>());
    for (const auto& t : j.at("times")) {
      // Decimal strings are the documented form; plain numbers are accepted too.
      if (t.is_string()) {
        const std::string s = t.get<std::string>();
        std::size_t used = 0;
        seq.times.push_back(std::stod(s, &used));
        if (used != s.size()) throw InputError("malformed switching time '" + s + "'");
      } else {
        seq.times.push_back(t.get<double>());
      }
    }
    for (const auto& p : j.at("pulses")) seq.pulses.push_back(parse_pulse(p.get<std::string>()));
    seq.validate();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed sequence JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("malformed switching time in sequence JSON");
  } catch (const std::out_of_range&) {
    throw InputError("switching time out of range in sequence JSON");
  } catch (const ValidationError& e) {
    throw InputError(std::string("malformed sequence JSON: ") + e.what());
  }
  return seq;
}

std::string times_csv(const PulseSequence& seq) {
  std::string out = "t\n";
  for (double t : seq.times) out += format_time(t) + "\n";
  return out;
}

std::string filter_csv(const FilterCurve& curve) {
  std::string out = "omegaT,filter_value\n";
  for (std::size_t i = 0; i < curve.omega_t.size(); ++i)
    out += format_number(curve.omega_t[i]) + "," + format_number(curve.value[i]) + "\n";
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::string out = "kind,order,T_us,trials,mean_infidelity,stderr\n";
  const std::string kind(to_string(result.kind));
  for (const auto& p : result.points)
    out += kind + "," + std::to_string(p.order) + "," + format_number(p.T_us) + "," + std::to_string(p.trials) + "," +
           format_number(p.mean_infidelity) + "," + format_number(p.stderr_infidelity) + "\n";
  return out;
}

std::string fit_json(const SweepResult& result) {
  json out = json::array();
  for (const auto& f : result.fits) {
    json j;
    j["kind"] = std::string(to_string(result.kind));
    j["order"] = f.order;
    j["expected_exponent"] = f.expected_exponent;
    j["window"] = {result.window.lo, result.window.hi};
    j["valid"] = f.valid;
    if (f.valid) {
      j["exponent"] = f.fit.exponent;
      j["r2"] = f.fit.r2;
      j["intercept"] = f.fit.intercept;
      j["ci95"] = {f.fit.ci_low, f.fit.ci_high};
      j["points"] = f.fit.points;
    } else {
      j["exponent"] = nullptr;
      j["r2"] = nullptr;
      j["message"] = f.message;
    }
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

std::string report_json(const GlobalizationReport& report) {
  json j;
  j["max_order"] = report.max_order;
  j["tolerance"] = report.tolerance;
  j["verdict"] = report.verdict;
  j["orders"] = json::array();
  for (const auto& o : report.orders) {
    j["orders"].push_back({{"order", o.order},
                           {"scale", o.scale},
                           {"max_spread", o.max_spread},
                           {"max_relative_spread", o.max_relative_spread},
                           {"orbit_spreads", o.orbit_spreads},
                           {"worst_pauli", o.worst_pauli},
                           {"worst_bath_word", o.worst_word}});
  }
  return j.dump(2) + "\n";
}

std::string chi_json(std::span<const ChiRecord> records) {
  json out = json::array();
  for (const auto& r : records) out.push_back({{"T", r.T}, {"chi", r.chi}, {"W", r.W}});
  return out.dump(2) + "\n";
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw InputError("cannot create directory for '" + path.string() + "': " + ec.message());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("write to '" + path.string() + "' failed");
}

}  // namespace exdd
