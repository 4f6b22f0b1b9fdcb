#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fov/cyclotomic.hpp"
#include "fov/group.hpp"

namespace fov {

/// Irr(G) x Cl(G) with values in Q_e, e the exponent of G. Rows are sorted
/// by (degree, rendered entries); columns follow the ClassData order.
struct CharacterTable {
  std::uint64_t modulus = 1;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<Cyclotomic>> entries;  // [row][class]
  /// The prime the modular computation finally succeeded with.
  std::uint64_t prime = 0;

  std::size_t size() const noexcept { return entries.size(); }
  const Cyclotomic& operator()(std::size_t row, ClassId k) const { return entries[row][k]; }
};

/// Smallest prime p = 1 (mod e) with p > 2 sqrt(order).
std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order);

/// Smallest admissible prime strictly larger than `after`.
std::uint64_t next_dixon_prime(std::uint64_t e, std::uint64_t order, std::uint64_t after);

/// Dixon-Schneider: split F_p^k into common eigenspaces of the class-sum
/// matrices, then lift each character mod p to Q_e by counting eigenvalue
/// multiplicities with a discrete Fourier inversion.
CharacterTable character_table(const PermGroup& g, const ClassData& c);
CharacterTable character_table(const PermGroup& g, const ClassData& c, const ClassMultiplicationCoefficients& a);

struct OrthogonalityReport {
  bool passed = true;
  std::vector<std::string> violations;
};

/// Exact first and second orthogonality plus sum of squared degrees.
OrthogonalityReport verify_orthogonality(const CharacterTable& t, const ClassData& c);

/// Text dump: header, one line per class, one line per character.
std::string render_table(const CharacterTable& t, const ClassData& c, const PermGroup& g);

}  // namespace fov
