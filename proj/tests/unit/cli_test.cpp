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

#include <filesystem>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

#include "exdd/filter.hpp"
#include "exdd/io.hpp"
#include "exdd/search.hpp"
#include "exdd_cli/cli.hpp"

using namespace exdd;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("exdd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write_sequence(const std::string& name, const PulseSequence& seq) const {
    write_text(path(name), sequence_to_json(seq));
    return path(name);
  }
  fs::path dir_;
};

std::vector<double> csv_values(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<double> v;
  while (std::getline(in, line)) v.push_back(std::stod(line));
  return v;
}

}  // namespace

TEST_F(CliTest, times_prints_switching_times) {
  const auto a3 = run({"times", "--group", "a3", "--order", "2"});
  ASSERT_EQ(a3.code, cli::kExitOk) << a3.err;
  const auto t = csv_values(a3.out);
  const std::vector<double> expected{1.0 / 6, 1.0 / 3, 2.0 / 3, 5.0 / 6};
  ASSERT_EQ(t.size(), expected.size());
  for (std::size_t k = 0; k < t.size(); ++k) EXPECT_NEAR(t[k], expected[k], 1e-15);
  const auto udd = run({"times", "--group", "udd", "--order", "1"});
  ASSERT_EQ(udd.code, cli::kExitOk);
  EXPECT_EQ(csv_values(udd.out), std::vector<double>{0.5});
  const auto free = run({"times", "--group", "a3", "--order", "0"});
  ASSERT_EQ(free.code, cli::kExitOk);
  EXPECT_TRUE(csv_values(free.out).empty());
}

TEST_F(CliTest, times_writes_files) {
  const auto r = run({"times", "--group", "s3", "--order", "3", "--out", dir_.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto seq = sequence_from_json(read_text(path("s3_n3.json")));
  const auto expected = s3_sequence(3).times;
  ASSERT_EQ(seq.times.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(seq.times[k], expected[k], 1e-15);
  EXPECT_TRUE(fs::exists(path("s3_n3_times.csv")));
}

TEST_F(CliTest, verify_quantum_orders) {
  const auto qdd3 = write_sequence("qdd3.json", qdd3_sequence());
  EXPECT_EQ(run({"verify", "--sequence", qdd3, "--mode", "quantum", "--order", "3"}).code, cli::kExitOk);
  const auto a3 = write_sequence("a3.json", a3_sequence(3));
  const auto r = run({"verify", "--sequence", a3, "--mode", "quantum", "--order", "3"});
  EXPECT_EQ(r.code, cli::kExitValidation);
  EXPECT_NE(r.err.find("verdict"), std::string::npos);
  EXPECT_EQ(run({"verify", "--sequence", a3, "--mode", "classical", "--order", "3"}).code, cli::kExitOk);
  EXPECT_EQ(run({"verify", "--sequence", a3, "--mode", "classical", "--order", "4"}).code, cli::kExitValidation);
}

TEST_F(CliTest, filter_curve_matches_library) {
  const auto r = run({"filter", "--group", "udd", "--order", "1", "--points", "25", "--out", dir_.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("function,low_frequency_slope,expected"), std::string::npos);
  const std::string csv = read_text(path("filter_udd_n1_f.csv"));
  const auto grid = log_grid(1e-2, 1e3, 25);
  EXPECT_EQ(csv, filter_csv(filter_curve(udd_sequence(1), 0, grid)));
}

TEST_F(CliTest, chi_reports_decay) {
  const auto r = run({"chi", "--group", "a3", "--order", "1", "--T-start", "0.01", "--T-stop", "1", "--T-points", "3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  for (const auto& rec : j) {
    EXPECT_GT(rec["W"].get<double>(), 0.0);
    EXPECT_LE(rec["W"].get<double>(), 1.0);
  }
  EXPECT_EQ(run({"chi", "--spectrum", "brown"}).code, cli::kExitInput);
}

TEST_F(CliTest, saved_configuration_replays_identically) {
  const auto first = run({"--save-config", path("run.json"), "times", "--group", "a3", "--order", "5"});
  ASSERT_EQ(first.code, cli::kExitOk);
  const auto replay = run({"--config", path("run.json")});
  EXPECT_EQ(replay.code, cli::kExitOk);
  EXPECT_EQ(replay.out, first.out);
  const auto cfg = cli::config_from_json(read_text(path("run.json")));
  EXPECT_EQ(cli::config_to_json(cfg), read_text(path("run.json")));
}

TEST_F(CliTest, malformed_inputs_exit_with_input_code) {
  write_text(path("bad.json"), "{ not json");
  EXPECT_EQ(run({"verify", "--sequence", path("bad.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"--config", path("bad.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"times", "--group", "zz"}).code, cli::kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitInput);
  EXPECT_EQ(run({"verify", "--sequence", path("absent.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, simulate_is_reproducible) {
  const std::vector<std::string> args{"simulate", "--kind", "classical", "--orders", "0", "1", "--T-start", "1e-5",
                                      "--T-stop", "1e-2", "--T-points", "10", "--bath-instances", "2", "--states", "3",
                                      "--seed", "4"};
  auto a_args = args, b_args = args;
  a_args.insert(a_args.end(), {"--out", path("a"), "--threads", "1"});
  b_args.insert(b_args.end(), {"--out", path("b"), "--threads", "2"});
  fs::create_directories(path("a"));
  fs::create_directories(path("b"));
  const auto a = run(a_args);
  const auto b = run(b_args);
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(read_text(path("a/sweep_classical.csv")), read_text(path("b/sweep_classical.csv")));
  EXPECT_EQ(read_text(path("a/fit_classical.json")), read_text(path("b/fit_classical.json")));
}

TEST_F(CliTest, search_lists_sequences) {
  const auto r = run({"search", "--order", "1", "--max-intervals", "3", "--pool", "1,2,3"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_FALSE(j.empty());
  EXPECT_EQ(j[0]["hamiltonians"].size(), 3u);
  EXPECT_EQ(run({"search", "--order", "3"}).code, cli::kExitValidation);
  EXPECT_EQ(run({"search", "--pool", "1,x"}).code, cli::kExitInput);
}
