/// End-to-end runs of the bccore binary on the files under tests/data.

#include "support.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>

using namespace bccore;

namespace {

struct Run {
  int code = -1;
  std::string out;
  json parsed() const { return json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(BCCORE_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(BCCORE_TEST_DATA) + "/" + name + ".json"; }

std::string tmp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bccore_cli_" + name + ".json")).string();
}

}  // namespace

TEST(Cli, ComputeZ6Golden) {
  const auto r = run("compute --kind left-dual-bc-core --a " + data("z6_1") + " --b " + data("z6_2") + " --c " + data("z6_2"));
  ASSERT_EQ(r.code, 0);
  const auto j = r.parsed();
  EXPECT_EQ(j["status"], "found");
  EXPECT_EQ(j["witness"], 2);
  EXPECT_EQ(j["verify"]["overall"], true);
}

TEST(Cli, ComputeNotInvertible) {
  const auto r = run("compute --kind left-dual-bc-core --a " + data("z6_5") + " --b " + data("z6_4") + " --c " + data("z6_3"));
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.parsed()["status"], "not-invertible");
}

TEST(Cli, ComputeSwapGolden) {
  const auto r =
      run("compute --kind left-dual-bc-core --a " + data("swap_a") + " --b " + data("swap_b") + " --c " + data("swap_c"));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.parsed()["witness"], json::parse(R"([["0","1"],["0","0"]])"));
}

TEST(Cli, VerifyGoodAndBadCandidates) {
  const std::string base = "verify --kind left-dual-bc-core --a " + data("z6_1") + " --b " + data("z6_2") + " --c " + data("z6_2");
  EXPECT_EQ(run(base + " --x " + data("z6_2")).code, 0);
  const auto bad = run(base + " --x " + data("z6_4"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.parsed()["overall"], false);
  EXPECT_EQ(run("verify --kind left-dual-bc-core --a " + data("swap_a") + " --b " + data("swap_b") + " --c " +
                data("swap_c") + " --candidate " + data("swap_x"))
                .code,
            0);
}

TEST(Cli, ComputeThenVerifyRoundTrip) {
  const auto out = tmp("mp");
  ASSERT_EQ(run("compute --kind moore-penrose --a " + data("nonsym_a") + " --out " + out).code, 0);
  const auto witness = json::parse(std::ifstream(out))["witness"];
  const auto xfile = tmp("mp_x");
  std::ofstream(xfile) << json{{"ring", "Mat:Q:2"}, {"payload", witness}}.dump();
  EXPECT_EQ(run("verify --kind moore-penrose --a " + data("nonsym_a") + " --x " + xfile).code, 0);
  std::filesystem::remove(out);
  std::filesystem::remove(xfile);
}

TEST(Cli, DecomposeGolden) {
  const auto r = run("decompose --a " + data("projection") + " --v " + data("identity"));
  ASSERT_EQ(r.code, 0);
  const auto j = r.parsed();
  EXPECT_EQ(j["a1"], json::parse(R"([["1/2","1/2"],["1/2","1/2"]])"));
  EXPECT_EQ(j["a2"], json::parse(R"([["0","0"],["0","0"]])"));
  EXPECT_EQ(j["overall"], true);
  EXPECT_EQ(run("decompose --a " + data("nonsym_a") + " --v " + data("nonsym_a_star")).code, 0);
  EXPECT_EQ(run("decompose --a " + data("projection") + " --v " + data("zero")).code, 2);
}

TEST(Cli, InputErrorsExitOne) {
  EXPECT_EQ(run("compute --kind left-dual-bc-core --a " + data("z6_1") + " --b " + data("z12_2")).code, 1);
  EXPECT_EQ(run("compute --kind left-dual-bc-core --a " + data("malformed")).code, 1);
  EXPECT_EQ(run("compute --kind no-such-kind --a " + data("z6_1")).code, 1);
  EXPECT_EQ(run("compute --kind left-dual-bc-core --a " + data("missing")).code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("battery --ring Zn:100").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, BatteryAllOnZ6) {
  const auto r = run("battery --ring Zn:6");
  ASSERT_EQ(r.code, 0);
  const auto reports = r.parsed()["reports"];
  ASSERT_EQ(reports.size(), std::size(kAllTheorems));
  for (std::size_t i = 0; i < reports.size(); ++i) {
    EXPECT_EQ(reports[i]["theorem"], to_string(kAllTheorems[i]));
    EXPECT_TRUE(reports[i]["disagreements"].empty());
  }
}

/// Same seed, same bytes once wall time is stripped.
TEST(Cli, BatteryOutputIsStable) {
  for (const std::string args : {"battery --ring Zn:8 --theorem formulas",
                                 "battery --ring MatZp:2x2:p3 --theorem coincidence --samples 300 --seed 5",
                                 "battery --ring Mat:Q --theorem formulas --count 40 --seed 9",
                                 "battery --ring Mat:Q --theorem formulas --count 40 --seed 9 --workers 3"}) {
    const auto first = run(args);
    const auto second = run(args);
    ASSERT_EQ(first.code, 0) << args;
    EXPECT_EQ(without_wall_time(first.parsed()).dump(), without_wall_time(second.parsed()).dump()) << args;
  }
}
