#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "golden.hpp"
#include "oddctl/commands.hpp"

namespace ot = odd::testing;

namespace {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return odd::cli::run(args, out, err);
}

class GoldenCli : public ::testing::TestWithParam<ot::GoldenCase> {};

}  // namespace

TEST_P(GoldenCli, MatchesFixture) {
  EXPECT_EQ(ot::check_golden_case(GetParam(), run_cli, ODD_TEST_DATA_DIR, ODD_GOLDEN_DIR), "");
}

INSTANTIATE_TEST_SUITE_P(Cases, GoldenCli,
                         ::testing::ValuesIn(ot::load_golden_cases(ODD_GOLDEN_DIR "/cases.txt")),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, UsageErrors) {
  std::ostringstream out, err;
  EXPECT_EQ(odd::cli::run({}, out, err), odd::cli::kUsageError);
  EXPECT_EQ(odd::cli::run({"frobnicate"}, out, err), odd::cli::kUsageError);
  EXPECT_EQ(odd::cli::run({"check", "--taxonomy", "x.json"}, out, err), odd::cli::kUsageError);
  EXPECT_TRUE(out.str().empty());
  EXPECT_NE(err.str().find("error:"), std::string::npos);
}

TEST(Cli, HelpGoesToStdout) {
  std::ostringstream out, err;
  EXPECT_EQ(odd::cli::run({"--help"}, out, err), odd::cli::kSuccess);
  EXPECT_NE(out.str().find("monitor"), std::string::npos);
}

TEST(Cli, WarningsGoToStderr) {
  std::ostringstream out, err;
  std::string dir = ODD_TEST_DATA_DIR;
  std::string spec = (std::filesystem::temp_directory_path() / "odd_cli_eq_real.odd").string();
  {
    std::ofstream f(spec);
    f << "operational_speed == 50 kmh\n";
  }
  EXPECT_EQ(odd::cli::run({"check", "--taxonomy", dir + "/motorway.taxonomy.json", "--spec", spec}, out, err), 0);
  EXPECT_EQ(out.str(), "operational_speed == 50 kmh\nmentioned: operational_speed\n");
  EXPECT_NE(err.str().find("warning:"), std::string::npos);
  std::filesystem::remove(spec);
}

TEST(Cli, UnwritableReportIsUsageError) {
  std::ostringstream out, err;
  std::string dir = ODD_TEST_DATA_DIR;
  EXPECT_EQ(odd::cli::run({"monitor", "--taxonomy", dir + "/motorway.taxonomy.json", "--spec", dir + "/phi_example.odd",
                           "--trace", dir + "/all_in.trace.jsonl", "--report", "/nonexistent/dir/r.json"},
                          out, err),
            odd::cli::kUsageError);
}
