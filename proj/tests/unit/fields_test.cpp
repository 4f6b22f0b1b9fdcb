#include <gtest/gtest.h>

#include "fov/fields.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace fov;
using testing_support::analyse;

namespace {

const FieldKey kQi = field_key_canonicalize(4, {1});
const FieldKey kSqrt5 = field_key_canonicalize(5, {1, 4});
const FieldKey kSqrtM3 = field_key_canonicalize(3, {1});

}  // namespace

TEST(ClassField, Examples) {
  const auto c4 = analyse("C4");
  EXPECT_TRUE(class_field(c4.group, c4.classes, 0).is_rational());
  EXPECT_EQ(class_field(c4.group, c4.classes, 2), kQi);
  const auto d5 = analyse("D5");
  EXPECT_EQ(class_field(d5.group, d5.classes, 2), kSqrt5);
}

TEST(ClassFieldFromTable, Examples) {
  const auto c3 = analyse("C3");
  EXPECT_TRUE(class_field_from_table(c3.table, 0).is_rational());
  EXPECT_EQ(class_field_from_table(c3.table, 1), kSqrtM3);
  const auto q8 = analyse("Q8");
  for (ClassId k = 0; k < q8.classes.size(); ++k) EXPECT_TRUE(class_field_from_table(q8.table, k).is_rational());
}

TEST(CharacterField, Examples) {
  const auto c3 = analyse("C3");
  std::size_t rational = 0, quadratic = 0;
  for (std::size_t x = 0; x < 3; ++x) {
    const FieldKey f = character_field(c3.table, c3.classes, x);
    rational += f.is_rational();
    quadratic += f == kSqrtM3;
  }
  EXPECT_EQ(rational, 1u);
  EXPECT_EQ(quadratic, 2u);
  const auto d5 = analyse("D5");
  for (std::size_t x = 0; x < d5.table.size(); ++x)
    if (d5.table.degrees[x] == 2) EXPECT_EQ(character_field(d5.table, d5.classes, x), kSqrt5);
}

TEST(InvariantProfile, Examples) {
  const auto trivial = analyse("C1");
  EXPECT_EQ(trivial.profile.h, 1u);
  EXPECT_EQ(trivial.profile.f, 1u);
  EXPECT_EQ(trivial.profile.cl_Q, 1u);

  const auto s3 = analyse("S3");
  EXPECT_EQ(s3.profile.h, 3u);
  EXPECT_EQ(s3.profile.f, 3u);
  EXPECT_EQ(s3.profile.cl_Q, 3u);
  EXPECT_EQ(s3.profile.irr_Q, 3u);
  EXPECT_EQ(s3.profile.k_p, (std::map<std::uint64_t, std::size_t>{{2, 2}, {3, 2}}));
  EXPECT_EQ(s3.profile.n_inv, 2u);

  const auto c5 = analyse("C5");
  EXPECT_EQ(c5.profile.h, 4u);
  EXPECT_EQ(c5.profile.f, 4u);
  EXPECT_EQ(c5.profile.cl_Q, 1u);
  EXPECT_EQ(c5.profile.irr_Q, 1u);

  const auto q8 = analyse("Q8");
  EXPECT_EQ(q8.profile.h, 5u);
  EXPECT_EQ(q8.profile.f, 5u);
  EXPECT_TRUE(q8.profile.flags.rational);
}

TEST(Rationality, Examples) {
  const auto q8 = analyse("Q8").profile.flags;
  EXPECT_TRUE(q8.rational && q8.semi_rational && q8.inverse_semi_rational && q8.quadratic_rational);
  EXPECT_EQ(q8.to_string(), "rational");

  const auto c3 = analyse("C3").profile.flags;
  EXPECT_FALSE(c3.rational);
  EXPECT_TRUE(c3.inverse_semi_rational);
  EXPECT_TRUE(c3.semi_rational);

  const auto c5 = analyse("C5").profile.flags;
  EXPECT_EQ(c5.k_rational_degree_max, 4u);
  EXPECT_FALSE(c5.semi_rational);
  EXPECT_EQ(c5.to_string(), "1/4-rational");
}

TEST(RationalOrders, Examples) {
  const auto c2 = analyse("C2");
  EXPECT_EQ(rational_element_orders(c2.group, c2.classes), (std::set<std::uint64_t>{1, 2}));
  const auto s3 = analyse("S3");
  EXPECT_EQ(rational_element_orders(s3.group, s3.classes), (std::set<std::uint64_t>{1, 2, 3}));
  const auto c4 = analyse("C4");
  EXPECT_EQ(rational_element_orders(c4.group, c4.classes), (std::set<std::uint64_t>{1, 2}));
}

TEST(PrimeBound, Examples) {
  const auto s3 = analyse("S3");
  for (auto p : class_field_prime_bound(s3.group, s3.classes)) EXPECT_EQ(p, std::optional<std::uint64_t>(2));
  const auto c4 = analyse("C4");
  EXPECT_EQ(class_field_prime_bound(c4.group, c4.classes)[2], std::optional<std::uint64_t>(2));
  const auto d5 = analyse("D5");
  EXPECT_EQ(class_field_prime_bound(d5.group, d5.classes)[2], std::optional<std::uint64_t>(5));
  EXPECT_EQ(prime_cube_witness(field_key_canonicalize(15, {1})), std::nullopt);
  EXPECT_EQ(prime_cube_witness(field_key_canonicalize(27, {1})), std::optional<std::uint64_t>(3));
}

TEST(InvariantProfile, RegressionAgainstTableOracle) {
  const std::map<std::string, std::pair<std::size_t, std::size_t>> want = {
      {"C1", {1, 1}}, {"C3", {2, 2}}, {"C4", {2, 2}}, {"D5", {2, 2}},
      {"S3", {3, 3}}, {"C5", {4, 4}}, {"Q8", {5, 5}}};
  for (const auto& [name, hf] : want) {
    const auto a = analyse(name);
    const auto o = oracle::table_invariants(a.table);
    EXPECT_EQ(std::pair(o.h, o.f), hf) << name;
    EXPECT_EQ((std::pair<std::size_t, std::size_t>(a.profile.h, a.profile.f)), hf) << name;
  }
}

TEST(InvariantProfile, MatchesTableOracleOnSmallGroups) {
  for (const auto& spec : builtin_corpus(24)) {
    const GroupAnalysis a(spec);
    const auto o = oracle::table_invariants(a.table);
    EXPECT_EQ(a.profile.h, o.h) << spec.name;
    EXPECT_EQ(a.profile.f, o.f) << spec.name;
    EXPECT_EQ(a.profile.cl_Q, o.cl_Q) << spec.name;
    EXPECT_EQ(a.profile.irr_Q, o.irr_Q) << spec.name;
    EXPECT_EQ(a.profile.cl_R, o.cl_R) << spec.name;
    EXPECT_EQ(a.profile.irr_R, o.irr_R) << spec.name;
    for (ClassId k = 0; k < a.classes.size(); ++k) {
      EXPECT_EQ(class_field_from_table(a.table, k), a.fields.classes[k]) << spec.name;
      EXPECT_EQ(fixing_subgroup(a.fields.classes[k], a.table.modulus), o.column_stabilizers[k]) << spec.name;
    }
    for (std::size_t x = 0; x < a.table.size(); ++x)
      EXPECT_EQ(fixing_subgroup(a.fields.characters[x], a.table.modulus), o.row_stabilizers[x]) << spec.name;
  }
}
