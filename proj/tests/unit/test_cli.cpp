#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tauberkit/cli.hpp"

using namespace tauberkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string c;
    while (std::getline(ls, c, ',')) cells.push_back(c);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, PredictWorkedInverse) {
  const auto r = run({"predict", "--M", "poly:1", "--K", "poly:1", "--c", "1", "--t",
                      "3.5835189384561099"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][4], "rate");
  EXPECT_NEAR(std::stod(rows[1][4]), 1.0, 1e-9);
}

TEST(Cli, PredictLargeT) {
  const auto r = run({"predict", "--M", "poly:2", "--K", "poly:2", "--t", "1e8"});
  ASSERT_EQ(r.code, 0);
  const double inverse = std::stod(parse_csv(r.out)[1][3]);
  EXPECT_NEAR(inverse / std::sqrt(2e8 / (3.0 * std::log(1e8))), 1.0, 0.15);
}

TEST(Cli, PredictFlagsDegenerateRows) {
  const auto r = run({"predict", "--M", "poly:1", "--K", "poly:1", "--t", "0.1,10"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows[1].back(), "degenerate");
  EXPECT_EQ(rows[2].back(), "ok");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"predict", "--M", "poly:-1", "--K", "poly:1", "--t", "1"}).code, 2);
  EXPECT_EQ(run({"predict", "--M", "poly:1", "--K", "poly:1", "--c", "2", "--t", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--m", "3", "--t", "1"}).code, 2);
  EXPECT_EQ(run({"eval", "--m", "2", "--t", "1", "--tol", "1e-14"}).code, 2);
  EXPECT_EQ(run({"eval", "--m", "2"}).code, 2);
  EXPECT_EQ(run({"eval", "--m", "2", "--t", "1", "--bogus"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"verify", "--config", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"verify", "--m-list", "3"}).code, 2);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, EvalSymmetryAndRoundTrip) {
  const auto r = run({"eval", "--m", "2", "--t", "-5,0,5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = parse_csv(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0][1], "f_m");
  EXPECT_NEAR(std::stod(rows[1][1]), std::stod(rows[3][1]), 1e-10);
  const double f0 = std::stod(rows[2][1]);
  EXPECT_NEAR(f0, 118371.27068120822, 1e-8);
  // 17 significant digits round-trip exactly.
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", f0);
  EXPECT_EQ(rows[2][1], buf);
}

TEST(Cli, EvalRangeAndJson) {
  const auto r = run({"eval", "--m", "4", "--t-min", "0", "--t-max", "2", "--t-count", "3",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_DOUBLE_EQ(j[1]["t"].get<double>(), 1.0);
  EXPECT_EQ(j[2]["status"], "ok");
}

TEST(Cli, TransformMarksOutOfDomain) {
  const auto r = run({"transform", "--m", "8", "--re", "0,0.5", "--im", "1"});
  ASSERT_EQ(r.code, 0);
  const auto rows = parse_csv(r.out);
  EXPECT_EQ(rows[1].back(), "ok");
  EXPECT_EQ(rows[2].back(), "outside-domain");
}

TEST(Cli, VerifyWritesDeterministicBundle) {
  const std::string cfg = ::testing::TempDir() + "tk_cfg.json";
  const std::string a = ::testing::TempDir() + "tk_a.json";
  const std::string b = ::testing::TempDir() + "tk_b.json";
  std::ofstream(cfg) << R"({"m_list": [8], "strip_n_im": 301, "q_m_list": [4, 6]})";
  const auto ra = run({"verify", "--config", cfg, "--no-timestamp", "-o", a});
  const auto rb = run({"verify", "--config", cfg, "--no-timestamp", "-o", b});
  EXPECT_EQ(ra.code, rb.code);
  EXPECT_TRUE(ra.code == 0 || ra.code == 1);
  std::stringstream sa, sb;
  sa << std::ifstream(a).rdbuf();
  sb << std::ifstream(b).rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  const auto bundle = nlohmann::json::parse(sa.str());
  EXPECT_GE(bundle["reports"].size(), 8u);
  EXPECT_FALSE(bundle.contains("generated_at"));
  EXPECT_EQ(ra.code == 0, bundle["pass"].get<bool>());

  const auto summary = run({"report", "--input", a});
  ASSERT_EQ(summary.code, 0);
  EXPECT_EQ(parse_csv(summary.out).size(), bundle["reports"].size() + 1);
}

TEST(Cli, MalformedConfigExitsTwo) {
  const std::string cfg = ::testing::TempDir() + "tk_bad.json";
  std::ofstream(cfg) << "{\"t_max\": 50}";
  EXPECT_EQ(run({"verify", "--config", cfg}).code, 2);
  std::ofstream(cfg) << "not json";
  EXPECT_EQ(run({"verify", "--config", cfg}).code, 2);
}
