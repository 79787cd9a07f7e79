#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(TC_CLI) + " " + args + " 2>/dev/null";
  Outcome r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(TC_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string tmp(const std::string& name) { return ::testing::TempDir() + "tc_cli_" + name; }

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t c = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
  return c;
}

}  // namespace

TEST(Cli, VerifyExampleWritesReport) {
  const std::string out = tmp("verify.json");
  Outcome r = run("verify --seed " + data("a2frozen.json") + " --basis " + data("a2frozen.basis.json") + " --out " + out);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all clauses passed"), std::string::npos);
  EXPECT_NE(slurp(out).find("\"passed\": true"), std::string::npos);
}

TEST(Cli, MutateTwiceEchoesSeed) {
  Outcome same = run("mutate --seed " + data("a2frozen.json") + " --word 1,1");
  Outcome none = run("mutate --seed " + data("a2frozen.json") + " --word ''");
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.out, none.out);
  EXPECT_NE(same.out.find("\"B\""), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("nonsense").code, 2);
  EXPECT_EQ(run("fflv --n 9").code, 2);
  EXPECT_EQ(run("mutate --seed /nonexistent.json --word 1").code, 2);
  EXPECT_EQ(run("mutate --seed " + data("a2frozen.json") + " --word 1,a").code, 2);
  EXPECT_EQ(run("verify --seed " + data("a2frozen.json")).code, 2);
  EXPECT_EQ(run("verify").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, FailedVerificationExitsOneAndWritesReport) {
  const std::string basis = tmp("basis.json");
  std::ofstream(basis) << R"({"basis": [{"name": "A1", "index": 1}, {"name": "A2", "index": 2},
                                         {"name": "A3", "index": 3}, {"name": "A5", "word": [1, 2], "index": 2}]})";
  const std::string out = tmp("failed.json");
  Outcome r = run("verify --seed " + data("a2frozen.json") + " --basis " + basis + " --out " + out);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(slurp(out).find("\"passed\": false"), std::string::npos);
}

TEST(Cli, OrbitTableIsDeterministic) {
  const std::string a = tmp("orbit1.json"), b = tmp("orbit3.json");
  Outcome one = run("fflv-orbit --n 5 --jobs 1 --out " + a);
  Outcome three = run("fflv-orbit --n 5 --jobs 3 --out " + b);
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_EQ(count(one.out, "not_positive  three_term"), 120u);
  EXPECT_NE(one.out.find("positive 0, not_positive 120, inconclusive 0"), std::string::npos);
}

TEST(Cli, GvectorsAndPresent) {
  const std::string spec = "--seed " + data("a2frozen.json") + " --basis " + data("a2frozen.basis.json");
  Outcome g = run("gvectors " + spec + " --word 1");
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("g-vectors in frame 1"), std::string::npos);
  Outcome p = run("present " + spec);
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("grading (1,0,-1,-1,-1,0)"), std::string::npos);
}
