#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sys/wait.h>

namespace {

struct Invocation {
  int code;
  std::string out;
};

Invocation run(const std::string& args) {
  std::string cmd = std::string(THETACAT_CLI) + " --no-timings " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json parse(const Invocation& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(Cli, ObjectsCount) {
  Invocation r = run("--n 2 --max-width 2 objects");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["count"], 8);
}

TEST(Cli, HomCount) {
  Invocation r = run("--n 2 hom --from 1 --to 2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse(r)["count"], 4);
}

TEST(Cli, CounterexampleVerified) {
  Invocation r = run("--n 2 verify-counterexample --k 2");
  ASSERT_EQ(r.code, 0);
  auto j = parse(r);
  EXPECT_EQ(j["verdict"], "verified");
  EXPECT_TRUE(j.contains("witness"));
  EXPECT_TRUE(j.contains("bounds"));
}

TEST(Cli, NegativeVerdictExitsOne) {
  Invocation r = run("trivfib --map collapse:2");
  EXPECT_EQ(r.code, 1);
  auto j = parse(r);
  EXPECT_EQ(j["verdict"], "no-lift");
  EXPECT_EQ(j["scope"], "unconditional");
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("hom --from x --to 2").code, 2);
  EXPECT_EQ(run("no-such-verb").code, 2);
  EXPECT_EQ(run("nerve --cat Q").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, BoundExhaustionExitsThree) {
  EXPECT_EQ(run("--max-width 2 lift --table \"1 1 1 / 0 0\" --map J").code, 3);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"verify-not-2qcat", "nerve --cat J2", "verify-orthogonality --samples 5"}) {
    Invocation a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

TEST(Cli, VerificationReportsCarryBounds) {
  for (const char* args : {"verify-not-2qcat", "verify-resolution", "verify-segal --cat J2", "trivfib --map J",
                           "anodyne --map collapse:2"}) {
    Invocation r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    EXPECT_TRUE(parse(r).contains("bounds")) << args;
  }
}

TEST(Cli, ExportedCategoryReadsBack) {
  std::string path = testing::TempDir() + "j2.json";
  ASSERT_EQ(run("-o " + path + " export --cat J2").code, 0);
  Invocation direct = run("nerve --cat J2");
  Invocation via_file = run("nerve --cat " + path);
  ASSERT_EQ(via_file.code, 0);
  EXPECT_EQ(parse(direct)["tables"], parse(via_file)["tables"]);
}
