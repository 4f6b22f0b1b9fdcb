#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fov_cli/cli.hpp"
#include "helpers.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fov::cli::cli_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& relative) { return (testing_support::kDataDir / relative).string(); }

}  // namespace

TEST(Cli, Invariants) {
  const auto r = run({"invariants", data("groups/s3.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "S3 6 h=3 f=3 clQ=3 irrQ=3 rational\n");
  const auto m = run({"invariants", "--builtin", "Q8", "--format", "machine"});
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("\"h\":5"), std::string::npos);
}

TEST(Cli, TableAndFields) {
  const auto t = run({"table", "--builtin", "S3"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("chi 2: 2 0 -1"), std::string::npos);
  const auto f = run({"fields", "--builtin", "C4"});
  EXPECT_EQ(f.code, 0);
  EXPECT_NE(f.out.find("class 2 order 4 size 1 F(c=4; H={1})"), std::string::npos);
}

TEST(Cli, MissingFileIsUsageError) {
  const auto r = run({"table", "nosuchfile"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("nosuchfile"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--max-order", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--jobs", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "S-NOPE", "--max-order", "2"}).code, 2);
  const auto r = run({"table"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifySuite) {
  const auto r = run({"verify", "--suite", "S-THMB", "--max-order", "64"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("S-THMB"), std::string::npos);
  EXPECT_EQ(r.out.find("failures"), std::string::npos);
}

TEST(Cli, VerifyFailureExitsOne) {
  const auto dir = std::filesystem::temp_directory_path() / "fov_cli_bad";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "bad.json") << R"({"name":"wrong","degree":2,"generators":[[1,0]],)"
                                  << R"("expected":{"order":2,"h":1,"f":2,"cl_Q":2,"irr_Q":2}})";
  const auto r = run({"verify", "--suite", "S-EXPECTED", "--max-order", "1", "--corpus", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("failures"), std::string::npos);
}

TEST(Cli, MachineOutputIsStable) {
  const std::vector<std::string> args = {"verify", "--max-order", "12", "--format", "machine", "--jobs", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, CacheFromEnvironment) {
  const auto cache = std::filesystem::temp_directory_path() / "fov_cli_env_cache.jsonl";
  std::filesystem::remove(cache);
  ::setenv("FOV_CACHE", cache.c_str(), 1);
  const auto first = run({"verify", "--suite", "S-THMA", "--max-order", "8"});
  const auto second = run({"verify", "--suite", "S-THMA", "--max-order", "8"});
  ::unsetenv("FOV_CACHE");
  EXPECT_TRUE(std::filesystem::exists(cache));
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, ScanConjecture) {
  const auto r = run({"scan-conjecture", "--max-order", "24"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("counterexamples: 0"), std::string::npos);
  EXPECT_NE(r.out.find("coverage:"), std::string::npos);
  EXPECT_EQ(run({"scan-conjecture", "--bound", "0", "--max-order", "8"}).code, 0);
}
