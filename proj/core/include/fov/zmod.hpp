#pragma once

// Unit groups (Z/nZ)^x, canonical names for subfields of cyclotomic fields,
// and the Galois elements that act on classes and character values.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fov {

using Residue = std::uint64_t;

/// Sorted, duplicate-free list of residues modulo some n.
using ResidueSet = std::vector<Residue>;

// --- elementary number theory -------------------------------------------

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm(std::uint64_t a, std::uint64_t b);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Smallest residue generating the cyclic group (Z/nZ)^x.
/// Only valid for n in {1, 2, 4, p^a, 2p^a}.
std::uint64_t smallest_primitive_root(std::uint64_t n);

/// Multiplicative order of a modulo n (a coprime to n).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

// --- unit groups ----------------------------------------------------------

class UnitGroup {
 public:
  explicit UnitGroup(std::uint64_t modulus);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const ResidueSet& elements() const& noexcept { return elements_; }
  ResidueSet elements() && noexcept { return std::move(elements_); }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Residue r) const;

 private:
  std::uint64_t modulus_;
  ResidueSet elements_;
};

/// True iff `set` is a non-empty subset of (Z/nZ)^x closed under
/// multiplication (hence a subgroup, the group being finite).
bool is_unit_subgroup(std::uint64_t n, const ResidueSet& set);

/// Subgroup of (Z/nZ)^x generated by `gens`.
ResidueSet generate_unit_subgroup(std::uint64_t n, const ResidueSet& gens);

/// Image of `set` under reduction (Z/nZ)^x -> (Z/dZ)^x, for d | n.
ResidueSet reduce_residues(const ResidueSet& set, std::uint64_t d);

// --- field keys -----------------------------------------------------------

/// A subfield of a cyclotomic field, named by its conductor c (c != 2 mod 4)
/// and the subgroup H of (Z/cZ)^x that fixes it inside Q_c.
class FieldKey {
 public:
  /// The rational field Q.
  FieldKey();

  std::uint64_t conductor() const noexcept { return conductor_; }
  const ResidueSet& subgroup() const noexcept { return subgroup_; }
  std::uint64_t degree() const;
  bool is_rational() const noexcept { return conductor_ == 1; }

  /// `Q` for degree 1, otherwise `F(c=<c>; H={r1,r2,...})`.
  std::string to_string() const;

  auto operator<=>(const FieldKey&) const = default;

 private:
  friend FieldKey field_key_canonicalize(std::uint64_t n, const ResidueSet& h);
  FieldKey(std::uint64_t conductor, ResidueSet subgroup)
      : conductor_(conductor), subgroup_(std::move(subgroup)) {}

  std::uint64_t conductor_;
  ResidueSet subgroup_;
};

/// Fixed field of H <= (Z/nZ)^x acting on Q_n, in minimal-conductor form.
/// Throws NotASubgroup when H is not a subgroup of the units mod n.
FieldKey field_key_canonicalize(std::uint64_t n, const ResidueSet& h);

/// F1 is a subfield of F2.
bool field_contains(const FieldKey& f1, const FieldKey& f2);

/// Smallest field containing both.
FieldKey field_compositum(const FieldKey& f1, const FieldKey& f2);

/// Subgroup of (Z/nZ)^x fixing F, for n a multiple of F's conductor.
ResidueSet fixing_subgroup(const FieldKey& f, std::uint64_t n);

enum class FieldKind { Rational, Real, Imaginary };

struct FieldSignature {
  FieldKind kind;
  bool is_imaginary_quadratic;
};

FieldSignature field_signature(const FieldKey& f);

// --- Galois groups of prime-power cyclotomic fields -----------------------

/// Direct product of cyclic groups, listed by factor order.
struct AbelianGroupDescriptor {
  std::vector<std::uint64_t> cyclic_factors;

  std::uint64_t order() const;
  /// "1", "C6", "C2 x C2", ...
  std::string to_string() const;
  bool operator==(const AbelianGroupDescriptor&) const = default;
};

/// Structure of Gal(Q_{p^a}/Q) ~ (Z/p^aZ)^x.
AbelianGroupDescriptor galois_structure(std::uint64_t p, unsigned a);

/// Number of fields Q <= F <= Q_{p^a} with [F:Q] <= d, i.e. the number of
/// subgroups of (Z/p^aZ)^x of index at most d.
std::uint64_t count_bounded_subfields(std::uint64_t p, unsigned a, std::uint64_t d);

// --- Galois elements ------------------------------------------------------

/// sigma_r in Gal(Q_n/Q): eps_n -> eps_n^r.
struct GaloisElement {
  std::uint64_t modulus = 1;
  Residue residue = 0;

  /// Restriction to Q_d for d | modulus.
  GaloisElement restrict_to(std::uint64_t d) const;
  bool operator==(const GaloisElement&) const = default;
};

struct CrtComponent {
  std::uint64_t modulus;
  Residue residue;
};

/// The unique residue modulo the product of the (pairwise coprime) moduli
/// reducing to each component. Throws NonCoprimeModuli.
GaloisElement crt_assemble(const std::vector<CrtComponent>& components);

}  // namespace fov
