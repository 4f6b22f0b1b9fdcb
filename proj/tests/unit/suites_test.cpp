#include <gtest/gtest.h>

#include "fov/error.hpp"
#include "fov/suites.hpp"
#include "helpers.hpp"
#include "json.hpp"

using namespace fov;
using testing_support::builtin;

TEST(Suites, Examples) {
  const auto thmb = run_suite("S-THMB", builtin("S3"));
  EXPECT_EQ(thmb.verdict, Verdict::Pass);
  EXPECT_EQ(thmb.group_name, "S3");
  EXPECT_EQ(thmb.group_order, 6u);
  const auto w = nlohmann::json::parse(thmb.witness);
  EXPECT_EQ(w["h"], 3);
  EXPECT_EQ(w["f"], 3);
  EXPECT_EQ(run_suite("S-RATORD", builtin("C5")).verdict, Verdict::NotApplicable);
  EXPECT_EQ(run_suite("S-GOW", builtin("S4")).verdict, Verdict::Pass);
  EXPECT_EQ(run_suite("S-GOW", builtin("A5")).verdict, Verdict::NotApplicable);
}

TEST(Suites, UnknownSuite) {
  try {
    run_suite("S-NOPE", builtin("S3"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSuite);
  }
  EXPECT_FALSE(is_known_suite("S-NOPE"));
  EXPECT_TRUE(is_known_suite("S-BRAUER"));
}

TEST(Suites, VerdictNames) {
  for (auto v : {Verdict::Pass, Verdict::Fail, Verdict::NotApplicable}) EXPECT_EQ(parse_verdict(to_string(v)), v);
  EXPECT_FALSE(parse_verdict("MAYBE"));
}

TEST(Suites, RecordsAreIdempotent) {
  for (const auto& id : suite_ids()) EXPECT_EQ(run_suite(id, builtin("D5")), run_suite(id, builtin("D5"))) << id;
}

TEST(Suites, ExpectedBlockIsCheckedNotTrusted) {
  GroupSpec s = ingest_group_file(testing_support::kDataDir / "groups/s3.json");
  EXPECT_EQ(run_suite("S-EXPECTED", s).verdict, Verdict::Pass);
  s.expected->f = 4;
  const auto r = run_suite("S-EXPECTED", s);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_NE(r.witness.find("violations"), std::string::npos);
}

TEST(Suites, NoFailureOnSmallBuiltins) {
  for (const auto& spec : builtin_corpus(32)) {
    const GroupAnalysis a(spec);
    for (const auto& id : suite_ids()) {
      const auto out = evaluate_suite(id, a);
      EXPECT_NE(out.verdict, Verdict::Fail) << id << " " << spec.name << " " << out.witness;
    }
  }
}

TEST(Suites, SigmaAppliesToDihedralOddPrime) {
  const auto r = run_suite("S-SIGMA", builtin("D5"));
  EXPECT_EQ(r.verdict, Verdict::Pass);
  EXPECT_NE(r.witness.find("\"p\":5"), std::string::npos);
}
