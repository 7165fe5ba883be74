#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "skoszul/serialize.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SKOSZUL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t k; (k = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), k);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return slurp(std::string(SKOSZUL_GOLDEN_DIR) + "/" + name); }

std::string temp_path(const std::string& name) { return std::string(SKOSZUL_TEST_TMP) + "/" + name; }

}  // namespace

TEST(Cli, BuildGolden) {
  const auto r = run("build --n 2 --endo frobenius:p=2,e=1 --field gf:2 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("build_n2_frob2.json"));
  const auto j = skoszul::Json::parse(r.out);
  EXPECT_EQ(j["differentials"][0]["matrix"].dump(),
            R"([[[[0,[[1,[1,1]]]],[1,[[1,[0,0]]]]],[[0,[[1,[0,2]]]]],[[0,[[1,[2,0]]]]]]])");
}

TEST(Cli, BuildGoldenOverRationals) {
  const auto r = run("build --n 2 --endo power:t=3 --field q --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("build_n2_power3.json"));
}

TEST(Cli, VerifyGolden) {
  const auto r = run("verify --n 3 --endo power:t=2 --field q --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("verify_n3_power2.json"));
  const auto j = skoszul::Json::parse(r.out);
  bool skipped = false;
  for (const auto& report : j["reports"])
    for (const auto& c : report["checks"])
      if (c["name"] == "injectivity") skipped = c["status"] == "skipped";
  EXPECT_TRUE(skipped);
}

TEST(Cli, FedderGolden) {
  const auto r = run("fedder --ideal \"x*y\" --p 2 --emax 2 --field gf:2 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("fedder_xy.json"));
  const auto j = skoszul::Json::parse(r.out);
  EXPECT_EQ(j["levels"][0]["generators"].dump(), R"([[1,1]])");
  EXPECT_EQ(j["levels"][1]["generators"].dump(), R"([[3,3]])");
}

TEST(Cli, LiftGolden) {
  const auto r = run("lift --n 2 --endo frobenius:p=3,e=1 --samples 5 --seed 4 --format json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, golden("lift_n2_frob3.json"));
}

TEST(Cli, DoubleRunDeterminism) {
  for (const char* args : {"lift --n 3 --endo frobenius:p=2,e=1 --samples 10 --seed 9 --format json",
                           "verify --n 3 --endo frobenius:p=3,e=1 --bounds 2,3 --format json",
                           "fedder --ideal \"x*y, y*z, z*x\" --p 3 --emax 2 --format json",
                           "verify --n 2 --endo frobenius:p=2,e=2 --format text"}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
  const auto s1 = run("lift --n 2 --endo frobenius:p=2,e=1 --samples 3 --seed 1 --format json");
  const auto s2 = run("lift --n 2 --endo frobenius:p=2,e=1 --samples 3 --seed 2 --format json");
  EXPECT_NE(s1.out, s2.out);
}

TEST(Cli, TextOutputMentionsEveryCheck) {
  const auto r = run("verify --n 2 --endo frobenius:p=2,e=1");
  EXPECT_EQ(r.status, 0);
  for (const char* name : {"chain l=1", "lemma l=2", "ranks", "injectivity", "composite zero", "section"})
    EXPECT_NE(r.out.find(name), std::string::npos) << name;
}

TEST(Cli, CorruptedComplexFailsVerification) {
  const auto built = run("build --n 2 --endo frobenius:p=3,e=1 --format json");
  ASSERT_EQ(built.status, 0);
  auto j = skoszul::Json::parse(built.out);
  // Negate the x1 entry of d_2: row e{1,2}, column e{2}.
  auto& entry = j["differentials"][1]["matrix"][0][1];
  ASSERT_EQ(entry.dump(), R"([[0,[[1,[1,0]]]]])");
  entry[0][1][0][0] = 2;
  const std::string path = temp_path("corrupted_n2.json");
  std::ofstream(path) << j.dump();
  const auto r = run("verify --complex " + path + " --format json");
  EXPECT_EQ(r.status, 1);
  const auto report = skoszul::Json::parse(r.out);
  EXPECT_FALSE(report["passed"].get<bool>());

  std::ofstream(temp_path("clean_n2.json")) << built.out;
  EXPECT_EQ(run("verify --complex " + temp_path("clean_n2.json")).status, 0);
}

TEST(Cli, CorruptedFixture) {
  const auto r = run("verify --complex " + std::string(SKOSZUL_GOLDEN_DIR) + "/corrupted_n2_frob3.json --format json");
  EXPECT_EQ(r.status, 1);
  const auto j = skoszul::Json::parse(r.out);
  for (const auto& c : j["reports"][0]["checks"])
    if (c["name"] == "chain l=2" || c["name"] == "lemma l=2") EXPECT_EQ(c["status"], "fail");
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const char* args : {"", "frobnicate", "build --n 2", "build --n 2 --endo frob:p=2",
                           "build --n x --endo power:t=2", "build --n 2 --endo power:t=2 --field gf:4",
                           "build --n 3 --endo frobenius:p=2,e=1 --vars 2", "verify --n 2 --endo power:t=2 --bounds 3",
                           "fedder --ideal \"x + y\" --p 2", "fedder --ideal \"x\" --p 2 --emax 1",
                           "build --n 2 --endo frobenius:p=3,e=1 --field gf:2", "verify --complex /nonexistent.json",
                           "build --n 2 --endo power:t=2 --format yaml"})
    EXPECT_EQ(run(args).status, 2) << args;
}
