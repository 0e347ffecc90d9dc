// Copyright 2026 The varcast Authors
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


#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "varcast/cli/cli.hpp"
#include "varcast/cli/manifest.hpp"
#include "varcast/error.hpp"

namespace varcast::cli {
namespace {

namespace fs = std::filesystem;

const std::string kData = VARCAST_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) { return read_file(p.string()); }

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("varcast_cli_" + std::string(info->name()) + "_" + std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  // Writes frame.csv into `out`.
  void ingest(const std::string& out) {
    Result r = run({"ingest", "--covid", kData + "/covid_fixture.csv", "--weather",
                    kData + "/weather_fixture.csv", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
  }

  fs::path dir_;
};

TEST_F(CliTest, HelpListsExitCodes) {
  Result r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Exit codes:"), std::string::npos);
  EXPECT_NE(r.out.find("unfillable_gap"), std::string::npos);
  EXPECT_NE(r.out.find("backtest"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  Result none = run({});
  EXPECT_EQ(none.code, 2);
  Result unknown = run({"corr", "--frame", kData + "/ingest_golden.csv", "--bogus"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("\"code\":2"), std::string::npos);
  Result range = run({"forecast", "--frame", kData + "/ingest_golden.csv", "--level", "1.5"});
  EXPECT_EQ(range.code, 2);
  Result lag = run({"fit", "--frame", kData + "/ingest_golden.csv", "--lag", "two", "--out",
                    path("o")});
  EXPECT_EQ(lag.code, 2);
  EXPECT_TRUE(fs::exists(path("o/error.json")));
}

TEST_F(CliTest, ModuleErrorsMapToExitCodesAndErrorRecord) {
  Result r = run({"fit", "--frame", kData + "/ingest_golden.csv", "--lag", "5", "--out",
                  path("o")});
  EXPECT_EQ(r.code, static_cast<int>(Errc::kInsufficientData));
  const std::string rec = slurp(path("o/error.json"));
  EXPECT_NE(rec.find("\"error\":\"insufficient_data\""), std::string::npos);
  EXPECT_NE(r.err.find(rec.substr(0, rec.size() - 1)), std::string::npos);
  EXPECT_FALSE(fs::exists(path("o/manifest.txt")));
}

TEST_F(CliTest, PipelineWritesEveryArtifact) {
  const std::string out = path("run");
  ingest(out);
  const std::string frame = out + "/frame.csv";
  EXPECT_NE(slurp(out + "/load_report.txt").find("  clamp 2020-06-29 death_cum"), std::string::npos);

  ASSERT_EQ(run({"corr", "--frame", frame, "--out", out}).code, 0);
  EXPECT_EQ(count_lines(slurp(out + "/correlation.csv")), 6u);

  Result coint = run({"coint", "--frame", frame, "--out", out});
  ASSERT_EQ(coint.code, 0) << coint.err;
  EXPECT_EQ(count_lines(slurp(out + "/coint.csv")), 5u);

  ASSERT_EQ(run({"select-lag", "--frame", frame, "--pmax", "10", "--out", out}).code, 0);
  const std::string table = slurp(out + "/lag_selection.csv");
  EXPECT_EQ(count_lines(table), 12u);
  EXPECT_EQ(table.rfind("chosen,", table.size() - 2), table.rfind('\n', table.size() - 2) + 1);

  Result fit = run({"fit", "--frame", frame, "--lag", "auto", "--through", "2020-11-24",
                    "--out", out});
  ASSERT_EQ(fit.code, 0) << fit.err;
  EXPECT_NE(slurp(out + "/stability.csv").find("stable,"), std::string::npos);

  Result diag = run({"diagnose", "--frame", frame, "--model", out + "/model.json", "--out", out});
  ASSERT_EQ(diag.code, 0) << diag.err;
  EXPECT_EQ(count_lines(slurp(out + "/diagnostics.csv")), 6u);

  Result fc = run({"forecast", "--frame", frame, "--from", "2020-11-24", "--horizon", "30",
                   "--out", out});
  ASSERT_EQ(fc.code, 0) << fc.err;
  const std::string fcsv = slurp(out + "/forecast.csv");
  EXPECT_EQ(count_lines(fcsv), 30u * 5u + 1u);
  EXPECT_EQ(fcsv.rfind("date,variable,point,lower,upper,level\n", 0), 0u);
  EXPECT_NE(fcsv.find("2020-12-24,"), std::string::npos);

  Result bt = run({"backtest", "--frame", frame, "--cutoffs", "2020-07-02,2020-08-21,2020-09-06",
                   "--horizon", "30", "--lag", "2", "--weekday", "tue", "--out", out});
  ASSERT_EQ(bt.code, 0) << bt.err;
  const std::string report = slurp(out + "/backtest_report.txt");
  std::size_t sections = 0;
  for (std::size_t p = report.find("[cutoff "); p != std::string::npos;
       p = report.find("[cutoff ", p + 1)) {
    ++sections;
  }
  EXPECT_EQ(sections, 3u);
  EXPECT_EQ(count_lines(slurp(out + "/backtest.csv")), 3u * 30u * 5u + 1u);
  EXPECT_TRUE(fs::exists(out + "/backtest_table.csv"));
}

TEST_F(CliTest, ClipZeroFloorsCountBands) {
  const std::string out = path("run");
  ingest(out);
  ASSERT_EQ(run({"forecast", "--frame", out + "/frame.csv", "--lag", "2", "--horizon", "30",
                 "--clip-zero", "--out", out})
                .code,
            0);
  std::istringstream in(slurp(out + "/forecast.csv"));
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.find(",pos_increase,") == std::string::npos) continue;
    const std::size_t a = line.find(',', line.find(',', line.find(',') + 1) + 1);
    EXPECT_GE(std::stod(line.substr(a + 1)), 0.0) << line;
  }
}

TEST_F(CliTest, ManifestReplayIsBitIdentical) {
  const std::string out = path("run");
  ingest(out);
  ASSERT_EQ(run({"backtest", "--frame", out + "/frame.csv", "--cutoffs", "2020-08-21",
                 "--horizon", "30", "--threads", "2", "--out", out})
                .code,
            0);
  const Manifest m = Manifest::parse(slurp(out + "/manifest.txt"), "manifest.txt");
  EXPECT_EQ(m.require("subcommand"), "backtest");
  EXPECT_TRUE(m.get("input.0.sha256").has_value());
  EXPECT_EQ(m.require("output.0.path"), "backtest.csv");

  Result r = run({"replay", "--manifest", out + "/manifest.txt", "--out", path("again")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(out + "/backtest.csv"), slurp(path("again/backtest.csv")));
  EXPECT_EQ(slurp(out + "/backtest_report.txt"), slurp(path("again/backtest_report.txt")));
}

TEST_F(CliTest, ReplayDetectsChangedInput) {
  const std::string out = path("run");
  ingest(out);
  const std::string frame = path("frame_copy.csv");
  fs::copy_file(out + "/frame.csv", frame);
  ASSERT_EQ(run({"corr", "--frame", frame, "--out", out}).code, 0);
  {
    std::string text = slurp(frame);
    text.replace(text.rfind(',') + 1, std::string::npos, "99\n");
    std::ofstream(frame, std::ios::trunc) << text;
  }
  Result r = run({"replay", "--manifest", out + "/manifest.txt", "--out", path("again")});
  EXPECT_EQ(r.code, static_cast<int>(Errc::kManifestMismatch));
}

TEST_F(CliTest, RepeatedRunsProduceIdenticalManifests) {
  ingest(path("a"));
  ingest(path("b"));
  const std::string ma = slurp(path("a/manifest.txt"));
  std::string mb = slurp(path("b/manifest.txt"));
  EXPECT_EQ(slurp(path("a/frame.csv")), slurp(path("b/frame.csv")));
  // Only the recorded --out argument differs.
  const std::string from = path("b"), to = path("a");
  mb.replace(mb.find(from), from.size(), to);
  EXPECT_EQ(ma, mb);
}

TEST_F(CliTest, RefusesToOverwriteInputs) {
  const std::string out = path("run");
  fs::create_directories(out);
  fs::copy_file(kData + "/covid_fixture.csv", out + "/frame.csv");
  const std::string before = slurp(out + "/frame.csv");
  Result r = run({"ingest", "--covid", out + "/frame.csv", "--weather",
                  kData + "/weather_fixture.csv", "--out", out});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(slurp(out + "/frame.csv"), before);
}

TEST(Manifest, EscapesRoundTrip) {
  Manifest m;
  m.set("a", "x=y\\z\nw");
  m.set("b", "");
  const Manifest back = Manifest::parse(m.to_text(), "m");
  EXPECT_EQ(back.require("a"), "x=y\\z\nw");
  EXPECT_EQ(back.require("b"), "");
  EXPECT_THROW(Manifest::parse("novalue\n", "m"), Error);
  EXPECT_THROW(Manifest::parse("a=1\na=2\n", "m"), Error);
}

TEST(Manifest, Sha256KnownVector) {
  EXPECT_EQ(sha256_hex("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace varcast::cli
