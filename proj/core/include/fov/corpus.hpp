#pragma once

// Group specifications: the built-in families and the JSON group-file format.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fov/group.hpp"

namespace fov {

enum class SpecSource { Builtin, File };

struct ExpectedBlock {
  std::uint64_t order = 0;
  std::uint64_t h = 0;
  std::uint64_t f = 0;
  std::uint64_t cl_Q = 0;
  std::uint64_t irr_Q = 0;
  bool operator==(const ExpectedBlock&) const = default;
};

struct GroupSpec {
  std::string name;
  SpecSource source = SpecSource::Builtin;
  /// Free-form provenance: "builtin", or the file's `source` field.
  std::string provenance;
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::optional<ExpectedBlock> expected;
  /// Path the spec was read from, empty for built-in groups.
  std::string path;

  PermGroup build(std::size_t cap = kDefaultOrderCap) const;
};

// --- constructors (0-based point sets) ----------------------------------

GroupSpec cyclic_group(std::uint64_t n);
/// Direct product of cyclic groups of the given orders, named C2xC4 etc.
GroupSpec abelian_group(const std::vector<std::uint64_t>& factors);
/// Dihedral group of order 2n acting on an n-gon, n >= 3; named D<n>.
GroupSpec dihedral_group(std::uint64_t n);
/// Dicyclic group Q_{4n} = <a, x | a^2n, x^2 = a^n, a^x = a^-1>, n >= 2, in
/// its regular representation; named Q<4n> (Q8 is the quaternion group).
GroupSpec dicyclic_group(std::uint64_t n);
GroupSpec symmetric_group(std::uint64_t n);
GroupSpec alternating_group(std::uint64_t n);
/// Acts on the disjoint union of the two point sets.
GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b);

/// Abelian invariant-factor lists (each factor divides the next) of the
/// given order, cyclic group included.
std::vector<std::vector<std::uint64_t>> abelian_invariant_factors(std::uint64_t order);

/// C_n, every abelian group in invariant-factor form, D_n for n >= 4 (D_3 is
/// S3), Q_{4n}, S_n and A_n (n <= 6), and the direct products of a
/// non-abelian member with a cyclic group or with another non-abelian member;
/// all of order at most max_order, sorted by (order, name).
std::vector<GroupSpec> builtin_corpus(std::uint64_t max_order);

// --- group files -------------------------------------------------------

/// Parses one JSON group document. Throws ParseError naming the line or the
/// offending field; `origin` prefixes the diagnostic.
GroupSpec parse_group_spec(std::string_view text, std::string_view origin = "<input>");
GroupSpec ingest_group_file(const std::filesystem::path& path);
/// Every *.json file of a directory, in file-name order.
std::vector<GroupSpec> ingest_directory(const std::filesystem::path& dir);

std::string serialize_group_spec(const GroupSpec& spec);

/// Lower-case hex SHA-256 of the spec's canonical serialization.
std::string spec_hash(const GroupSpec& spec);

}  // namespace fov
