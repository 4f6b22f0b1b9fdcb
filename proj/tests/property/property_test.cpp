#include <gtest/gtest.h>

#include "properties.hpp"

TEST(Property, GaloisApplyIsAFieldAutomorphism) {
  EXPECT_EQ(properties::galois_apply_is_a_field_automorphism(), std::nullopt);
}

TEST(Property, CanonicalizationIsIdempotent) { EXPECT_EQ(properties::canonicalization_is_idempotent(), std::nullopt); }

TEST(Property, ContainmentIsAPartialOrder) { EXPECT_EQ(properties::containment_is_a_partial_order(), std::nullopt); }

TEST(Property, BoundedSubfieldCounts) { EXPECT_EQ(properties::bounded_subfield_counts(), std::nullopt); }

TEST(Property, FieldInvariantsOnRandomGroups) {
  EXPECT_EQ(properties::field_invariants_on_random_groups(), std::nullopt);
}
