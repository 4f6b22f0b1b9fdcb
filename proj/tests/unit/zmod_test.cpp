#include <gtest/gtest.h>

#include "fov/error.hpp"
#include "fov/zmod.hpp"
#include "oracle.hpp"

using namespace fov;

TEST(NumberTheory, Basics) {
  EXPECT_EQ(gcd(12, 18), 6u);
  EXPECT_EQ(lcm(4, 6), 12u);
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(36), 12u);
  EXPECT_TRUE(is_prime(127));
  EXPECT_FALSE(is_prime(1));
  EXPECT_EQ(inverse_mod(3, 7), 5u);
  EXPECT_EQ(smallest_primitive_root(7), 3u);
  EXPECT_EQ(smallest_primitive_root(25), 2u);
  EXPECT_EQ(multiplicative_order(2, 7), 3u);
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
}

TEST(NumberTheory, TotientMatchesCount) {
  for (std::uint64_t n = 1; n <= 300; ++n) EXPECT_EQ(euler_phi(n), n == 1 ? 1 : oracle::units(n).size()) << n;
}

TEST(UnitGroup, Elements) {
  EXPECT_EQ(UnitGroup(1).elements(), ResidueSet{0});
  EXPECT_EQ(UnitGroup(8).elements(), (ResidueSet{1, 3, 5, 7}));
  EXPECT_TRUE(is_unit_subgroup(8, {1, 3}));
  EXPECT_FALSE(is_unit_subgroup(8, {1, 2}));
  EXPECT_FALSE(is_unit_subgroup(8, {3}));
  EXPECT_EQ(generate_unit_subgroup(7, {2}), (ResidueSet{1, 2, 4}));
  EXPECT_EQ(reduce_residues({1, 7}, 3), ResidueSet{1});
}

TEST(FieldKey, Canonicalize) {
  const FieldKey q = field_key_canonicalize(8, {1, 3, 5, 7});
  EXPECT_TRUE(q.is_rational());
  EXPECT_EQ(q.degree(), 1u);
  EXPECT_EQ(q.to_string(), "Q");

  const FieldKey sqrt5 = field_key_canonicalize(5, {1, 4});
  EXPECT_EQ(sqrt5.conductor(), 5u);
  EXPECT_EQ(sqrt5.subgroup(), (ResidueSet{1, 4}));
  EXPECT_EQ(sqrt5.degree(), 2u);

  const FieldKey sqrt_m3 = field_key_canonicalize(12, {1, 7});
  EXPECT_EQ(sqrt_m3.conductor(), 3u);
  EXPECT_EQ(sqrt_m3.subgroup(), ResidueSet{1});
  EXPECT_EQ(sqrt_m3.degree(), 2u);
  EXPECT_EQ(sqrt_m3.to_string(), "F(c=3; H={1})");
}

TEST(FieldKey, RejectsNonSubgroup) {
  try {
    field_key_canonicalize(8, {1, 3, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotASubgroup);
  }
}

TEST(FieldKey, Containment) {
  const FieldKey q;
  const FieldKey sqrt5 = field_key_canonicalize(5, {1, 4});
  const FieldKey qi = field_key_canonicalize(4, {1});
  const FieldKey q8 = field_key_canonicalize(8, {1});
  EXPECT_TRUE(field_contains(q, sqrt5));
  EXPECT_TRUE(field_contains(qi, q8));
  EXPECT_FALSE(field_contains(sqrt5, qi));
  EXPECT_FALSE(field_contains(q8, qi));
  EXPECT_EQ(field_compositum(qi, sqrt5), field_key_canonicalize(20, {1, 9}));
  EXPECT_EQ(fixing_subgroup(qi, 8), (ResidueSet{1, 5}));
}

TEST(FieldKey, Signature) {
  EXPECT_EQ(field_signature(FieldKey()).kind, FieldKind::Rational);
  const auto real = field_signature(field_key_canonicalize(5, {1, 4}));
  EXPECT_EQ(real.kind, FieldKind::Real);
  EXPECT_FALSE(real.is_imaginary_quadratic);
  const auto imag = field_signature(field_key_canonicalize(3, {1}));
  EXPECT_EQ(imag.kind, FieldKind::Imaginary);
  EXPECT_TRUE(imag.is_imaginary_quadratic);
  EXPECT_FALSE(field_signature(field_key_canonicalize(5, {1})).is_imaginary_quadratic);
}

TEST(GaloisStructure, Examples) {
  EXPECT_EQ(galois_structure(2, 1).to_string(), "1");
  EXPECT_EQ(galois_structure(2, 3).to_string(), "C2 x C2");
  EXPECT_EQ(galois_structure(7, 1).to_string(), "C6");
  EXPECT_EQ(galois_structure(2, 5).order(), 16u);
}

TEST(CountBoundedSubfields, Examples) {
  EXPECT_EQ(count_bounded_subfields(7, 1, 2), 2u);
  EXPECT_EQ(count_bounded_subfields(2, 3, 2), 4u);
  EXPECT_EQ(count_bounded_subfields(3, 1, 1), 1u);
}

TEST(CountBoundedSubfields, MatchesSubgroupEnumeration) {
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    std::uint64_t q = p;
    for (unsigned a = 1; q <= 256; ++a, q *= p)
      for (std::uint64_t d = 1; d <= 6; ++d)
        EXPECT_EQ(count_bounded_subfields(p, a, d), oracle::count_subgroups_of_index_at_most(q, d))
            << p << "^" << a << " d=" << d;
  }
}

TEST(Crt, Examples) {
  EXPECT_EQ(crt_assemble({{8, 1}, {3, 1}}), (GaloisElement{24, 1}));
  EXPECT_EQ(crt_assemble({{8, 3}, {3, 2}}), (GaloisElement{24, 11}));
  EXPECT_EQ(crt_assemble({{5, 4}}), (GaloisElement{5, 4}));
  EXPECT_EQ((GaloisElement{24, 11}).restrict_to(8), (GaloisElement{8, 3}));
  try {
    crt_assemble({{4, 1}, {6, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonCoprimeModuli);
  }
}
