#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(PSEUDOFIELD_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

TEST(Cli, ReconstructRational) {
  RunResult r = run("reconstruct --kind q --p 13 --x 7");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"value\": 2"), std::string::npos);
  EXPECT_NE(r.output.find("+1/2"), std::string::npos);
}

TEST(Cli, ReconstructZero) {
  RunResult r = run("reconstruct --kind q --p 13 --x 0");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"value\": 1"), std::string::npos);
}

TEST(Cli, ReconstructEigenvalue) {
  RunResult r = run("reconstruct --kind qbar --p 199 --x 10 --budget 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"value\": 3"), std::string::npos);
}

TEST(Cli, ReportEmbedsVersionAndConfig) {
  RunResult r = run("reconstruct --kind q --p 13 --x 7");
  EXPECT_NE(r.output.find("\"version\""), std::string::npos);
  EXPECT_NE(r.output.find("\"config\""), std::string::npos);
  EXPECT_NE(r.output.find("\"command\": \"reconstruct\""), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  RunResult a = run("probe --p 7 --d 2 --budget 2");
  RunResult b = run("probe --p 7 --d 2 --budget 2");
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.output, b.output);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("reconstruct --kind q").exit_code, 2);     // missing required flags
  EXPECT_EQ(run("reconstruct --kind q --p 12 --x 1").exit_code, 2);  // composite modulus
  EXPECT_EQ(run("reconstruct --kind q --p 13 --x 99").exit_code, 2);
  EXPECT_EQ(run("nosuchcommand").exit_code, 2);
}

TEST(Cli, BudgetRefusal) {
  EXPECT_EQ(run("reconstruct --kind qbar --p 199 --x 10 --budget 9").exit_code, 3);
}

TEST(Cli, ProbeThreshold) {
  RunResult r = run("probe --p 3 --d 2 --budget 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"max_satisfying\": 1"), std::string::npos);
}

TEST(Cli, ProbeCsvFormat) {
  RunResult r = run("probe --p 3 --d 2 --budget 2 --format csv");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("B,holds"), std::string::npos);
}

TEST(Cli, ToolkitResultant) {
  RunResult r = run("toolkit --op resultant --f 1,0,1 --g 0,1");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"resultant\": \"1\""), std::string::npos);
}

TEST(Cli, ToolkitSturm) {
  RunResult r = run("toolkit --op sturm --f -2,0,1 --lo 1 --hi 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"roots\": 1"), std::string::npos);
}

TEST(Cli, WitnessComposition) {
  RunResult r = run("witness --p 199 --x 10 --y 57 --op sum --budget 4");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"verified\": true"), std::string::npos);
}

TEST(Cli, UnitfindTrivialInterval) {
  RunResult r = run("unitfind --lo 3 --hi 5");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"sturm_count\": 1"), std::string::npos);
}

TEST(Cli, UnitfindWithPolynomial) {
  RunResult r = run("unitfind --poly 0,1 --lo 1 --hi 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"verification\""), std::string::npos);
  EXPECT_NE(r.output.find("\"sturm_count\": 1"), std::string::npos);
}

TEST(Cli, DeadlineKillsLongRun) {
  RunResult r = run("selftest 2>/dev/null");
  // A one-second deadline must interrupt the multi-second selftest.
  RunResult limited = {0, ""};
  {
    std::string cmd = std::string("PSEUDOFIELD_DEADLINE_SECS=1 ") +
                      std::string(PSEUDOFIELD_CLI_PATH) + " selftest 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::array<char, 4096> buf;
    std::string out;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    limited = {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(limited.exit_code, 3);
}

}  // namespace
