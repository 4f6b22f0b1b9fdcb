#pragma once

// Permutation-group engine: full enumeration, conjugacy classes, power maps,
// normalizers of cyclic subgroups and the derived series.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "fov/zmod.hpp"

namespace fov {

using Point = std::uint32_t;
using ElementId = std::uint32_t;
using ClassId = std::size_t;

inline constexpr std::size_t kDefaultOrderCap = 20000;

class Permutation {
 public:
  /// Degree-0 permutation; mostly useful as a placeholder.
  Permutation() = default;

  /// Throws InvalidPermutation unless `images` is a bijection on
  /// {0, ..., images.size() - 1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  /// Disjoint-cycle notation on 0-based points, "()" for the identity.
  std::string cycle_string() const;

  /// Left-to-right composition: (a * b)(x) = b(a(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// A finite permutation group, fully enumerated. Element 0 is the identity;
/// the remaining elements appear in breadth-first order over the generators.
class PermGroup {
 public:
  /// Closure of `gens`. Throws InvalidPermutation on a degree mismatch and
  /// OrderCapExceeded once more than `cap` elements have been found.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> gens,
                                   std::size_t cap = kDefaultOrderCap);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  std::uint64_t exponent() const noexcept { return exponent_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const std::vector<ElementId>& generator_ids() const noexcept { return generator_ids_; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const Permutation& element(ElementId id) const { return elements_[id]; }

  static constexpr ElementId identity() noexcept { return 0; }
  std::optional<ElementId> find(const Permutation& p) const;

  ElementId multiply(ElementId a, ElementId b) const;
  ElementId inverse(ElementId a) const { return inverses_[a]; }
  ElementId power(ElementId a, std::int64_t j) const;
  /// b^-1 a b
  ElementId conjugate(ElementId a, ElementId b) const;
  std::uint64_t element_order(ElementId a) const { return orders_[a]; }

  /// Elements of the subgroup generated by `gens`, in breadth-first order.
  std::vector<ElementId> subgroup_closure(std::span<const ElementId> gens) const;

 private:
  PermGroup() = default;

  std::size_t degree_ = 0;
  std::uint64_t exponent_ = 1;
  std::vector<Permutation> generators_;
  std::vector<ElementId> generator_ids_;
  std::vector<Permutation> elements_;
  std::vector<ElementId> inverses_;
  std::vector<std::uint64_t> orders_;
  std::unordered_map<Permutation, ElementId, PermutationHash> index_;
};

inline PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens,
                                       std::size_t cap = kDefaultOrderCap) {
  return PermGroup::from_generators(degree, std::move(gens), cap);
}

struct ConjugacyClass {
  ElementId representative;  // smallest member id
  std::vector<ElementId> members;  // sorted
  std::uint64_t element_order;

  std::size_t size() const noexcept { return members.size(); }
};

/// Conjugacy classes sorted by (element order, size, representative) with
/// the power maps pi_j : K -> class of g^j for 0 <= j < exponent.
struct ClassData {
  std::vector<ConjugacyClass> classes;
  std::vector<ClassId> class_of;  // indexed by ElementId
  std::vector<std::vector<ClassId>> power_maps;  // [j][class]
  std::uint64_t exponent = 1;
  std::size_t group_order = 1;

  std::size_t size() const noexcept { return classes.size(); }
  /// pi_j for any integer j, reduced modulo the exponent.
  ClassId power_map(ClassId k, std::int64_t j) const;
  std::size_t centralizer_order(ClassId k) const { return group_order / classes[k].size(); }
};

ClassData conjugacy_classes(const PermGroup& g);

/// R(g) = { r mod |g| : gcd(r, |g|) = 1, g^r conjugate to g } for a
/// representative g of class k. Equals {0} when g is the identity.
ResidueSet rationality_stabilizer(const PermGroup& g, const ClassData& c, ClassId k);

/// |N_G(<g>)| / |C_G(g)| by direct membership tests.
std::uint64_t bg_order(const PermGroup& g, ElementId element);

bool is_solvable(const PermGroup& g);

/// a(i, j, k) = #{(x, y) : x in K_i, y in K_j, x y = z_k} for the
/// representative z_k of class k.
class ClassMultiplicationCoefficients {
 public:
  explicit ClassMultiplicationCoefficients(std::size_t k) : k_(k), data_(k * k * k, 0) {}

  std::size_t class_count() const noexcept { return k_; }
  std::uint32_t operator()(ClassId i, ClassId j, ClassId k) const { return data_[(i * k_ + j) * k_ + k]; }
  std::uint32_t& at(ClassId i, ClassId j, ClassId k) { return data_[(i * k_ + j) * k_ + k]; }

 private:
  std::size_t k_;
  std::vector<std::uint32_t> data_;
};

ClassMultiplicationCoefficients class_mult_coefficients(const ClassData& c, const PermGroup& g);

}  // namespace fov
