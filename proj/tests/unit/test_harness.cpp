#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wittcv/harness.hpp"

using namespace wittcv;
using namespace wittcv::harness;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wittcv_test_" + name);
}

}  // namespace

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"--p", "5", "--task", "covering", "--space", "full", "--mode", "exhaustive"}).code, 0);
  EXPECT_EQ(run({"--p", "4", "--task", "cone"}).code, 2);
  EXPECT_EQ(run({"--p", "3", "--task", "cone"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--ext", "4", "--task", "cone"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--task", "nonsense"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--space", "upper", "--task", "covering"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--mode", "lazy"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--bogus"}).code, 2);
  EXPECT_EQ(run({"--p", "five"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--task", "cone", "--mode", "sampled", "--samples", "0"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--task", "cone", "--workers", "0"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--task", "cone", "--element", "5;1;[1,0,0,0,0]"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--task", "rectify", "--element", "5;1;[1,0]"}).code, 2);
  EXPECT_EQ(run({"--p", "13", "--task", "covering", "--mode", "exhaustive"}).code, 3);
  EXPECT_EQ(run({"--p", "11", "--task", "cone"}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).code, 0);
}

TEST(Cli, FaultInjectionFails) {
  for (const char* task : {"centralizers", "covering"}) {
    const auto r = run({"--p", "5", "--task", task, "--inject-fault", "1,2"});
    EXPECT_EQ(r.code, 1) << task;
    const auto report = parse_report(r.out);
    EXPECT_FALSE(report.verified());
    EXPECT_FALSE(report.failures.empty());
  }
  EXPECT_EQ(run({"--p", "5", "--task", "covering", "--inject-fault", "1,1"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--task", "covering", "--inject-fault", "3,3"}).code, 2);
  EXPECT_EQ(run({"--p", "5", "--task", "covering", "--inject-fault", "a,b"}).code, 2);
}

TEST(Cli, ReportGoesToStdoutSummaryToStderr) {
  const auto r = run({"--p", "5", "--task", "cone", "--no-timing"});
  EXPECT_EQ(r.code, 0);
  const auto report = parse_report(r.out);
  EXPECT_EQ(report.task, "cone");
  EXPECT_EQ(report.duration_ms, 0u);
  EXPECT_NE(r.err.find("verified  yes"), std::string::npos);
}

TEST(Cli, OutFileAndConfig) {
  const auto out = scratch("out.json");
  const auto cfg = scratch("config.json");
  {
    std::ofstream c(cfg);
    c << R"({"p": 7, "task": "witnesses", "space": "borel", "timing": false})";
  }
  auto r = run({"--config", cfg.string(), "--out", out.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  auto report = parse_report(read_file(out));
  EXPECT_EQ(report.p, 7u);
  EXPECT_EQ(report.task, "witnesses/borel");

  r = run({"--config", cfg.string(), "--p", "5", "--space", "full"});
  report = parse_report(r.out);
  EXPECT_EQ(report.p, 5u);
  EXPECT_EQ(report.task, "witnesses/full");

  {
    std::ofstream c(cfg);
    c << R"({"p": 7, "colour": "blue"})";
  }
  EXPECT_EQ(run({"--config", cfg.string()}).code, 2);
  EXPECT_EQ(run({"--config", scratch("missing.json").string()}).code, 2);
  std::filesystem::remove(out);
  std::filesystem::remove(cfg);
}

TEST(Cli, RectifyElement) {
  const auto r = run({"--p", "5", "--task", "rectify", "--element", "5;1;[1,0,0,1,0]"});
  EXPECT_EQ(r.code, 0);
  const auto report = parse_report(r.out);
  EXPECT_EQ(report.details.at("automorphism"), "5;1;[1,0,0,1]");
  const auto refused = parse_report(run({"--p", "5", "--task", "rectify", "--element", "5;1;[0,0,1,0,0]"}).out);
  EXPECT_EQ(refused.details.at("rectifiable"), "false");
}

TEST(Cli, DeterministicAcrossWorkers) {
  const std::vector<std::string> base = {"--p", "11", "--task", "covering", "--mode", "sampled",
                                         "--samples", "2000", "--seed", "9", "--no-timing"};
  auto one = base, three = base;
  one.insert(one.end(), {"--workers", "1"});
  three.insert(three.end(), {"--workers", "3"});
  const auto a = run(one), b = run(three), c = run(one);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(RunAll, FiveVerifies) {
  RunConfig c;
  c.p = 5;
  const auto r = run_all(c);
  EXPECT_TRUE(r.verified());
  EXPECT_EQ(r.task, "all");
  EXPECT_EQ(r.counts.at("cone/nilpotent"), 625u);
  EXPECT_EQ(r.counts.at("census/full/pairs/centralizers"), 6625u);
}

TEST(RunAll, FaultIsAttributed) {
  RunConfig c;
  c.p = 5;
  c.fault = FaultSpec{1, 2, 0};
  const auto r = run_all(c);
  EXPECT_FALSE(r.verified());
  bool centralizers = false, covering = false;
  for (const auto& f : r.failures) {
    centralizers = centralizers || f.label.rfind("centralizers/", 0) == 0;
    covering = covering || f.label.rfind("covering/", 0) == 0;
  }
  EXPECT_TRUE(centralizers);
}

TEST(Properties, FiveExhaustive) {
  const auto r = algebra_properties(witt::WittAlgebra(ffield::FieldCtx::make(5)), {});
  EXPECT_TRUE(r.verified());
  EXPECT_EQ(r.counts.at("jacobi_triples"), 125u);
  EXPECT_EQ(r.counts.at("restricted"), 3125u);
}

TEST(Properties, BrokenAlgebraFailsJacobiOrRestrictedness) {
  const auto f = ffield::FieldCtx::make(5);
  const auto r = algebra_properties(witt::WittAlgebra(f).with_corrupted_constant(1, 2, f.zero()), {});
  EXPECT_FALSE(r.verified());
}

TEST(Tasks, Names) {
  for (auto t : {Task::Centralizers, Task::Cone, Task::Covering, Task::Middle, Task::Witnesses, Task::Counts,
                 Task::Census, Task::Rectify, Task::All}) {
    EXPECT_EQ(parse_task(to_string(t)), t);
  }
}

class Golden : public ::testing::TestWithParam<const char*> {};

TEST_P(Golden, MatchesCheckedInReport) {
  const std::string name = GetParam();
  const std::string text = read_file(std::filesystem::path(WITTCV_GOLDEN_DIR) / (name + ".json"));
  ASSERT_FALSE(text.empty()) << name;
  std::ifstream args_file(std::filesystem::path(WITTCV_GOLDEN_DIR) / (name + ".args"));
  std::vector<std::string> args;
  for (std::string word; args_file >> word;) args.push_back(word);
  args.push_back("--no-timing");
  const auto r = run(args);
  EXPECT_EQ(r.out, text);
  EXPECT_EQ(parse_report(text).verified(), r.code == 0);
}

INSTANTIATE_TEST_SUITE_P(Reports, Golden,
                         ::testing::Values("p5_all", "p5_cone", "p5_covering_borel", "p7_witnesses_full",
                                           "p7_middle", "p7_counts", "p7_census_borel", "p11_covering_sampled"));
