#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  const std::string cmd = std::string(CPERM_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(Cli, VerifyEqualExitsZero) {
  const CliRun r = cli("verify --id B-GF-length --n 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "\"equal\": true"));
}

TEST(Cli, OddTypeDCountsElements) {
  const CliRun r = cli("verify --id D-odd-length --n 3");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "322560")) << r.out;
}

TEST(Cli, TamperedSelftestExitsOne) {
  EXPECT_EQ(cli("selftest --only 14 --tamper B-GF-length").status, 1);
  EXPECT_EQ(cli("selftest --only 14").status, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(cli("").status, 2);
  EXPECT_EQ(cli("verify --id nope --n 1").status, 2);
  EXPECT_EQ(cli("verify --id G-main-even --r 3 --n 1 --b 5").status, 2);
  EXPECT_EQ(cli("stats --r 2 \"1 3\"").status, 2);
  EXPECT_EQ(cli("involute --tag eta \"1 2 3\"").status, 2);
  EXPECT_EQ(cli("enumerate --family b --n 2 --restriction /nonexistent.json").status, 2);
}

TEST(Cli, StatsExample) {
  const CliRun r = cli("stats --r 4 \"5 1[1] 3 4[2] 2[1] 6[3]\"");
  ASSERT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "\"len_G\": 29"));
  EXPECT_TRUE(contains(r.out, "\"col\": 7"));
}

TEST(Cli, EnumerateAndFixedPoints) {
  EXPECT_EQ(cli("enumerate --family d --n 2").out, "1 2\n-1 -2\n2 1\n-2 -1\n");
  const CliRun fp = cli("fixed-points --tag psi-b --n 2");
  EXPECT_EQ(fp.status, 0);
  int lines = 0;
  for (char c : fp.out) lines += c == '\n';
  EXPECT_EQ(lines, 4);
  EXPECT_EQ(cli("involute --tag theta \"-1 2 5 -4 -3\"").out, "-1 2 5 -4 3\n");
}

TEST(Cli, RestrictionFile) {
  const std::string path = ::testing::TempDir() + "cperm_restriction.json";
  std::ofstream(path) << R"(["-", "+", "±"])";
  const CliRun r = cli("enumerate --family b --n 3 --restriction " + path);
  EXPECT_EQ(r.status, 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 12);
}

TEST(Cli, OutputIndependentOfJobs) {
  for (const std::string args : {"verify --id G-main-even --r 2 --n 2 --b 1", "series --id lin-nepo --n 2 --K 6"}) {
    const CliRun a = cli(args + " --jobs 1");
    const CliRun b = cli(args + " --jobs 3");
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

}  // namespace
