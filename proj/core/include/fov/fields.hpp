#pragma once

// Fields of values of classes and characters, and the invariants built on
// them: h(G), f(G), rational/real counts, k_p(G), n(G), rationality flags.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fov/character_table.hpp"
#include "fov/group.hpp"
#include "fov/zmod.hpp"

namespace fov {

/// Q(K) as the fixed field of R(g) <= (Z/|g|Z)^x acting on Q_|g|.
FieldKey class_field(const PermGroup& g, const ClassData& c, ClassId k);

/// Q(K) from the definition: the stabilizer of column k under galois_apply.
FieldKey class_field_from_table(const CharacterTable& t, ClassId k);

/// { r in (Z/eZ)^x : chi o pi_r = chi }
ResidueSet character_stabilizer(const CharacterTable& t, const ClassData& c, std::size_t row);

/// Q(chi) as the fixed field of the row stabilizer.
FieldKey character_field(const CharacterTable& t, const ClassData& c, std::size_t row);

/// Class and character fields of one group, computed once and shared.
struct GroupFields {
  std::vector<FieldKey> classes;
  std::vector<FieldKey> characters;
};

GroupFields compute_fields(const PermGroup& g, const ClassData& c, const CharacterTable& t);

struct RationalityFlags {
  bool rational = true;
  bool semi_rational = true;
  bool inverse_semi_rational = true;
  bool quadratic_rational = true;
  std::uint64_t k_rational_degree_max = 1;

  /// "rational", or a comma-joined list of the flags that hold followed by
  /// "1/k-rational" when the group is not semi-rational.
  std::string to_string() const;
  bool operator==(const RationalityFlags&) const = default;
};

RationalityFlags classify_rationality(const PermGroup& g, const ClassData& c, const CharacterTable& t);
RationalityFlags classify_rationality(const PermGroup& g, const ClassData& c, const GroupFields& fields);

struct InvariantProfile {
  std::uint64_t h = 1;
  std::uint64_t f = 1;
  std::size_t cl_Q = 1;
  std::size_t irr_Q = 1;
  std::size_t cl_R = 1;
  std::size_t irr_R = 1;
  std::map<std::uint64_t, std::size_t> k_p;
  std::size_t n_inv = 0;
  FieldKey q_of_G;
  std::map<std::string, std::size_t> per_field_class_multiplicity;
  std::map<std::string, std::size_t> per_field_char_multiplicity;
  RationalityFlags flags;
};

InvariantProfile invariant_profile(const PermGroup& g, const ClassData& c, const CharacterTable& t);
InvariantProfile invariant_profile(const PermGroup& g, const ClassData& c, const GroupFields& fields);

/// { |g| : Q(g) = Q }
std::set<std::uint64_t> rational_element_orders(const PermGroup& g, const ClassData& c);
std::set<std::uint64_t> rational_element_orders(const ClassData& c, const GroupFields& fields);

/// Smallest prime p with F contained in Q_{p^3}, if any.
std::optional<std::uint64_t> prime_cube_witness(const FieldKey& f);

/// Per class, the smallest p with Q(K) inside Q_{p^3}, or nullopt.
std::vector<std::optional<std::uint64_t>> class_field_prime_bound(const PermGroup& g, const ClassData& c);
std::vector<std::optional<std::uint64_t>> class_field_prime_bound(const GroupFields& fields);

}  // namespace fov
