#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + FUSIONQ_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST(Cli, RestrictedKostka) {
  const auto r = run("rkostka --level 1 --l 0 --m 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"coeffs\":[\"0\",\"1\"],\"schema\":\"fusionq/1\"}\n");
  EXPECT_EQ(run("rkostka --l 0 --m 0,2").out, run("rkostka --level 2 --l 0 --m 0,2").out);
  EXPECT_EQ(run("rkostka --level 3 --l 0 --m 0,2").out, run("rkostka --level 3 --l 0 --m 0,2,0").out);
}

TEST(Cli, KostkaOutOfRangeIsZero) {
  const auto r = run("kostka --l 9 --m 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"coeffs\":[],\"schema\":\"fusionq/1\"}\n");
}

TEST(Cli, Formats) {
  EXPECT_EQ(run("--format tsv kostka --l 1 --m 3").out, "degree\tcoeff\n0\t0\n1\t1\n2\t1\n");
  EXPECT_EQ(run("supernomial --l 0 --m 2 --format pretty").out.substr(0, 12), "S = 1 + q\n  ");
  EXPECT_EQ(run("verlinde --level 2 --word 1,1 --format pretty").out, "[0] + [2]\n");
  EXPECT_EQ(run("verlinde --level 1 --word 1,1,1 --coef 1").out, "{\"coefficient\":1,\"l\":1,\"level\":1,\"schema\":\"fusionq/1\"}\n");
}

TEST(Cli, FusionAndCoinvariants) {
  EXPECT_EQ(run("coinv --m 3 --level 1 --l 1").out,
            "{\"coeffs\":[\"0\",\"0\",\"1\"],\"dimension\":1,\"mode\":\"graded\",\"schema\":\"fusionq/1\"}\n");
  EXPECT_EQ(run("coinv --m 2 --level 1 --l 0 --mode filtered --points 0,1").code, 0);
  EXPECT_EQ(run("coinv --factors sum:1,sum:1 --level 1 --l 0").out.find("\"dimension\":2") != std::string::npos, true);
  const auto fc = run("fusion-char --m 2 --points 0,1");
  EXPECT_EQ(fc.code, 0);
  EXPECT_NE(fc.out.find("\"dims\":[3,4]"), std::string::npos);
  EXPECT_NE(fc.out.find("\"degree_series\":[\"3\",\"1\"]"), std::string::npos);
}

TEST(Cli, TableauxAndGordon) {
  const auto t = run("tableaux --l 1 --m 3 --list");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("\"count\":2"), std::string::npos);
  const auto g = run("gordon --level 2 --l 0 --m 0,2 --list-basis");
  EXPECT_EQ(g.code, 0);
  EXPECT_NE(g.out.find("\"coeffs\":[\"0\",\"0\",\"1\"]"), std::string::npos);
  EXPECT_NE(g.out.find("x1*x2"), std::string::npos);
}

TEST(Cli, IdealFuse) {
  const std::string path = ::testing::TempDir() + "fusionq_b1.json";
  std::ofstream(path) << R"({"p_e":[0,1],"p_h":[0,1],"p_f":[0,1]})";
  const auto r = run("ideal-fuse --spec " + path + " --points 1,2 --top");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "{\"fused\":{\"p_e\":[\"2\",\"-3\",\"1\"],\"p_f\":[\"2\",\"-3\",\"1\"],\"p_h\":[\"2\",\"-3\",\"1\"]},"
            "\"schema\":\"fusionq/1\",\"top\":{\"p_e\":[\"0\",\"0\",\"1\"],\"p_f\":[\"0\",\"0\",\"1\"],\"p_h\":[\"0\",\"0\",\"1\"]}}\n");
  EXPECT_EQ(run("ideal-fuse --spec " + path + " --points 1,1").code, 1);
  EXPECT_EQ(run("ideal-fuse --spec /nonexistent.json --points 1").code, 2);
}

TEST(Cli, Verify) {
  const auto r = run("verify number --max-size 6 --level 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"pass\":true"), std::string::npos);
  EXPECT_NE(r.out.find("\"failed\":0"), std::string::npos);
  EXPECT_EQ(run("verify all --max-size 3 --format pretty").code, 0);
  EXPECT_EQ(run("verify bogus").code, 2);
  EXPECT_EQ(run("verify coinvariant-kostka --max-size 11").code, 2);
}

TEST(Cli, Deterministic) {
  const std::string args = "verify z-independence --max-size 4 --format tsv";
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_EQ(run("fusion-char --m 3", "FUSIONQ_SEED=9").out, run("fusion-char --m 3", "FUSIONQ_SEED=9").out);
  EXPECT_NE(run("fusion-char --m 3", "FUSIONQ_SEED=9").out.find("\"points\""), std::string::npos);
}

TEST(Cli, UsageAndComputationErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("bogus").code, 2);
  EXPECT_EQ(run("rkostka --l 0 --m 2 --unknown").code, 2);
  EXPECT_EQ(run("rkostka --l 0").code, 2);
  EXPECT_EQ(run("rkostka --l 0 --m 2,x").code, 2);
  EXPECT_EQ(run("rkostka --level 1 --l 2 --m 2").code, 1);
  EXPECT_EQ(run("coinv --m 2 --level 1 --l 0 --points 1,1").code, 1);
  EXPECT_EQ(run("coinv --m 2 --level 1 --l 0 --points 1").code, 2);
  EXPECT_EQ(run("--format xml kostka --l 0 --m 2").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}
