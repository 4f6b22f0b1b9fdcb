#include <gtest/gtest.h>

#include <algorithm>

#include "fov/analysis.hpp"
#include "fov/corpus.hpp"
#include "fov/error.hpp"
#include "helpers.hpp"

using namespace fov;

namespace {

bool has(const std::vector<GroupSpec>& corpus, const std::string& name) {
  return std::any_of(corpus.begin(), corpus.end(), [&](const GroupSpec& s) { return s.name == name; });
}

ErrorCode parse_code(const std::string& text) {
  try {
    parse_group_spec(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::UnknownSuite;
}

std::string parse_message(const std::string& text) {
  try {
    parse_group_spec(text, "g.json");
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(BuiltinCorpus, Examples) {
  const auto one = builtin_corpus(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].build().order(), 1u);

  const auto ten = builtin_corpus(10);
  EXPECT_TRUE(has(ten, "C5"));
  EXPECT_TRUE(has(ten, "D5"));
  EXPECT_EQ(GroupAnalysis(*std::find_if(ten.begin(), ten.end(), [](auto& s) { return s.name == "C5"; })).profile.h, 4u);
  EXPECT_TRUE(has(builtin_corpus(8), "Q8"));
  EXPECT_THROW(builtin_corpus(0), std::invalid_argument);
}

TEST(BuiltinCorpus, OrdersNamesAndFamilies) {
  const auto corpus = builtin_corpus(128);
  std::set<std::string> names;
  for (const auto& s : corpus) {
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
    EXPECT_EQ(s.source, SpecSource::Builtin);
  }
  for (const char* name : {"C128", "C2xC2xC2xC2xC2xC2xC2", "D64", "Q128", "S5", "A5", "S4", "A4xC2", "Q8xQ8", "S3xS3"})
    EXPECT_TRUE(names.contains(name)) << name;
  EXPECT_FALSE(names.contains("S6"));
  EXPECT_TRUE(std::is_sorted(corpus.begin(), corpus.end(), [](const GroupSpec& a, const GroupSpec& b) {
    return a.build().order() < b.build().order();
  }));
}

TEST(BuiltinCorpus, ConstructorsHaveTheRightOrder) {
  EXPECT_EQ(dihedral_group(7).build().order(), 14u);
  EXPECT_EQ(dicyclic_group(3).build().order(), 12u);
  EXPECT_EQ(symmetric_group(5).build().order(), 120u);
  EXPECT_EQ(alternating_group(6).build().order(), 360u);
  EXPECT_EQ(abelian_group({2, 6}).build().order(), 12u);
  EXPECT_EQ(direct_product(symmetric_group(3), cyclic_group(4)).name, "S3xC4");
  EXPECT_EQ(abelian_invariant_factors(16).size(), 5u);
}

TEST(GroupFile, IngestS3) {
  const GroupSpec s = ingest_group_file(testing_support::kDataDir / "groups/s3.json");
  EXPECT_EQ(s.name, "S3");
  EXPECT_EQ(s.source, SpecSource::File);
  EXPECT_EQ(s.degree, 3u);
  EXPECT_EQ(s.generators.size(), 2u);
  EXPECT_EQ(s.build().order(), 6u);
  ASSERT_TRUE(s.expected);
  EXPECT_EQ(s.expected->h, 3u);
}

TEST(GroupFile, Errors) {
  EXPECT_EQ(parse_code(R"({"name":"x","degree":3,"generators":[[0,0,1]]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"name":"x","degree":3,"generators":[[0,1]]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"degree":3,"generators":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"name":"x","degree":0,"generators":[]})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code(R"({"name":"x","degree":2,"generators":[],"expected":{"order":2}})"), ErrorCode::ParseError);
  EXPECT_EQ(parse_code("{\"name\": \"x\",\n \"degree\": 3,\n oops}"), ErrorCode::ParseError);

  EXPECT_NE(parse_message(R"({"name":"x","degree":3,"generators":[[1,2,0],[0,0,1]]})").find("generators[1]"),
            std::string::npos);
  EXPECT_NE(parse_message("{\"name\": \"x\",\n \"degree\": 3,\n oops}").find("g.json:3"), std::string::npos);
  try {
    ingest_group_file("/nonexistent/file.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
  }
}

TEST(GroupFile, RoundTripAndHash) {
  const GroupSpec s = ingest_group_file(testing_support::kDataDir / "groups/sg_32_42.json");
  const GroupSpec again = parse_group_spec(serialize_group_spec(s));
  EXPECT_EQ(serialize_group_spec(again), serialize_group_spec(s));
  EXPECT_EQ(spec_hash(again), spec_hash(s));
  EXPECT_EQ(spec_hash(s).size(), 64u);
  EXPECT_NE(spec_hash(s), spec_hash(ingest_group_file(testing_support::kDataDir / "groups/sg_32_15.json")));
}

TEST(GroupFile, ExportedSmallGroupsMatchExpectedBlocks) {
  const auto files = ingest_directory(testing_support::kDataDir / "smallgroups");
  ASSERT_GT(files.size(), 500u);
  std::size_t checked = 0;
  for (const auto& spec : files) {
    if (spec.build().order() > 32) continue;
    const GroupAnalysis a(spec);
    ASSERT_TRUE(spec.expected) << spec.name;
    const auto& e = *spec.expected;
    EXPECT_EQ(ExpectedBlock({a.group.order(), a.profile.h, a.profile.f, a.profile.cl_Q, a.profile.irr_Q}), e)
        << spec.name;
    ++checked;
  }
  EXPECT_GT(checked, 100u);
}
