#include <gtest/gtest.h>

#include <algorithm>

#include "fov/error.hpp"
#include "fov/group.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace fov;
using testing_support::builtin;

namespace {

std::vector<std::size_t> class_sizes(const ClassData& c) {
  std::vector<std::size_t> out;
  for (const auto& k : c.classes) out.push_back(k.size());
  return out;
}

oracle::Perm as_oracle(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

}  // namespace

TEST(Permutation, Basics) {
  const Permutation a({1, 2, 0});
  const Permutation b({1, 0, 2});
  EXPECT_EQ((a * b)(0), b(a(0)));
  EXPECT_EQ(a.order(), 3u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(a.cycle_string(), "(0,1,2)");
  EXPECT_EQ(Permutation::identity(4).cycle_string(), "()");
}

TEST(Permutation, RejectsNonBijection) {
  try {
    Permutation({0, 0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPermutation);
  }
  EXPECT_THROW(Permutation({0, 3}), Error);
}

TEST(PermGroup, Closure) {
  const PermGroup trivial = group_from_generators(1, {});
  EXPECT_EQ(trivial.order(), 1u);
  const PermGroup s3 = group_from_generators(3, {Permutation({1, 0, 2}), Permutation({1, 2, 0})});
  EXPECT_EQ(s3.order(), 6u);
  const PermGroup q8 = builtin("Q8").build();
  EXPECT_EQ(q8.degree(), 8u);
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_EQ(q8.exponent(), 4u);
}

TEST(PermGroup, ClosureMatchesBruteForce) {
  for (const char* name : {"S4", "Q16", "D6", "C2xC4", "A5", "S3xS3"}) {
    const GroupSpec spec = builtin(name);
    const PermGroup g = spec.build();
    std::vector<oracle::Perm> gens;
    for (const auto& p : spec.generators) gens.push_back(as_oracle(p));
    const auto brute = oracle::closure(spec.degree, gens);
    ASSERT_EQ(g.order(), brute.size()) << name;
    for (const auto& e : g.elements()) EXPECT_TRUE(brute.contains(as_oracle(e))) << name;
  }
}

TEST(PermGroup, Errors) {
  try {
    group_from_generators(5, {Permutation({1, 2, 3, 4, 0}), Permutation({1, 0, 2, 3, 4})}, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderCapExceeded);
  }
  try {
    group_from_generators(4, {Permutation({1, 0, 2})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidPermutation);
  }
}

TEST(Classes, Examples) {
  const PermGroup trivial = group_from_generators(1, {});
  EXPECT_EQ(conjugacy_classes(trivial).size(), 1u);

  const PermGroup s3 = builtin("S3").build();
  const ClassData c = conjugacy_classes(s3);
  EXPECT_EQ(class_sizes(c), (std::vector<std::size_t>{1, 3, 2}));
  EXPECT_EQ(c.classes[1].element_order, 2u);
  EXPECT_EQ(c.classes[2].element_order, 3u);

  const PermGroup q8 = builtin("Q8").build();
  EXPECT_EQ(class_sizes(conjugacy_classes(q8)), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Classes, MatchBruteForceOrbits) {
  for (const char* name : {"S4", "Q12", "D8", "A4xC2", "S3xS3", "Q8xC3"}) {
    const GroupSpec spec = builtin(name);
    const PermGroup g = spec.build();
    const ClassData c = conjugacy_classes(g);
    std::vector<oracle::Perm> gens;
    for (const auto& p : spec.generators) gens.push_back(as_oracle(p));
    auto brute = oracle::conjugacy_classes(oracle::closure(spec.degree, gens));
    ASSERT_EQ(c.size(), brute.size()) << name;
    for (const auto& cls : c.classes) {
      std::set<oracle::Perm> mine;
      for (auto id : cls.members) mine.insert(as_oracle(g.element(id)));
      EXPECT_NE(std::find(brute.begin(), brute.end(), mine), brute.end()) << name;
    }
  }
}

TEST(Classes, ClassEquationAndPowerMaps) {
  for (const auto& spec : builtin_corpus(48)) {
    const PermGroup g = spec.build();
    const ClassData c = conjugacy_classes(g);
    std::size_t total = 0;
    for (ClassId k = 0; k < c.size(); ++k) {
      total += c.classes[k].size();
      EXPECT_EQ(g.order() % c.classes[k].size(), 0u);
      for (std::int64_t j = 0; j < static_cast<std::int64_t>(c.exponent); ++j)
        for (auto x : c.classes[k].members) EXPECT_EQ(c.class_of[g.power(x, j)], c.power_map(k, j));
    }
    EXPECT_EQ(total, g.order()) << spec.name;
  }
}

TEST(RationalityStabilizer, Examples) {
  const PermGroup q8 = builtin("Q8").build();
  const ClassData cq = conjugacy_classes(q8);
  EXPECT_EQ(rationality_stabilizer(q8, cq, 0), ResidueSet{0});
  EXPECT_EQ(rationality_stabilizer(q8, cq, 2), (ResidueSet{1, 3}));
  EXPECT_EQ(bg_order(q8, cq.classes[2].representative), 2u);
  EXPECT_EQ(bg_order(q8, PermGroup::identity()), 1u);

  const PermGroup d5 = builtin("D5").build();
  const ClassData cd = conjugacy_classes(d5);
  const ClassId rotation = 2;
  ASSERT_EQ(cd.classes[rotation].element_order, 5u);
  EXPECT_EQ(rationality_stabilizer(d5, cd, rotation), (ResidueSet{1, 4}));
  EXPECT_EQ(bg_order(d5, cd.classes[rotation].representative), 2u);
}

TEST(RationalityStabilizer, MatchesDefinitionAndIsSubgroup) {
  for (const char* name : {"S4", "Q16", "D10", "S3xC3", "A4", "C15", "Q20"}) {
    const GroupSpec spec = builtin(name);
    const PermGroup g = spec.build();
    const ClassData c = conjugacy_classes(g);
    std::vector<oracle::Perm> gens;
    for (const auto& p : spec.generators) gens.push_back(as_oracle(p));
    const auto brute = oracle::closure(spec.degree, gens);
    for (ClassId k = 0; k < c.size(); ++k) {
      const auto rep = as_oracle(g.element(c.classes[k].representative));
      const std::uint64_t n = c.classes[k].element_order;
      ResidueSet want;
      for (auto r : oracle::units(n))
        if (oracle::is_conjugate(brute, rep, oracle::power(rep, static_cast<std::int64_t>(n == 1 ? 1 : r))))
          want.push_back(r);
      const ResidueSet got = rationality_stabilizer(g, c, k);
      EXPECT_EQ(got, want) << name << " class " << k;
      EXPECT_TRUE(is_unit_subgroup(n, got));
      EXPECT_EQ(bg_order(g, c.classes[k].representative), got.size());
    }
  }
}

TEST(Solvable, Examples) {
  EXPECT_TRUE(is_solvable(group_from_generators(1, {})));
  EXPECT_TRUE(is_solvable(builtin("S4").build()));
  EXPECT_FALSE(is_solvable(builtin("A5").build()));
  EXPECT_FALSE(is_solvable(builtin("S5").build()));
}

TEST(ClassMultiplication, Examples) {
  const PermGroup trivial = group_from_generators(1, {});
  EXPECT_EQ(class_mult_coefficients(conjugacy_classes(trivial), trivial)(0, 0, 0), 1u);
  const PermGroup s3 = builtin("S3").build();
  const ClassData c = conjugacy_classes(s3);
  const auto a = class_mult_coefficients(c, s3);
  EXPECT_EQ(a(1, 1, 2), 3u);
  EXPECT_EQ(a(1, 1, 0), 3u);
}

TEST(ClassMultiplication, MatchesBruteForce) {
  for (const char* name : {"S4", "Q8", "D5", "A4"}) {
    const PermGroup g = builtin(name).build();
    const ClassData c = conjugacy_classes(g);
    const auto a = class_mult_coefficients(c, g);
    for (ClassId i = 0; i < c.size(); ++i)
      for (ClassId j = 0; j < c.size(); ++j)
        for (ClassId k = 0; k < c.size(); ++k) {
          const auto z = as_oracle(g.element(c.classes[k].representative));
          std::uint32_t count = 0;
          for (auto x : c.classes[i].members)
            for (auto y : c.classes[j].members)
              count += oracle::compose(as_oracle(g.element(x)), as_oracle(g.element(y))) == z;
          EXPECT_EQ(a(i, j, k), count) << name;
        }
  }
}
