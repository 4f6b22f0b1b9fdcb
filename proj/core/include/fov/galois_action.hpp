#pragma once

// The two actions of Gal(Q_e/Q) ~ (Z/eZ)^x on Cl(G) and Irr(G).
//
// sigma_r acts on characters by Galois conjugation, chi -> chi o pi_r, and
// on classes by K -> pi_{r^-1}(K). With these conventions the actions are
// compatible: T[chi^sigma][K^sigma] = T[chi][K]. Fixed points and orbits
// are the same as for K -> pi_r(K).

#include <cstdint>
#include <utility>
#include <vector>

#include "fov/character_table.hpp"
#include "fov/fields.hpp"
#include "fov/group.hpp"
#include "fov/zmod.hpp"

namespace fov {

struct ActionTable {
  std::uint64_t modulus = 1;
  ResidueSet residues;  // (Z/eZ)^x
  std::vector<std::vector<ClassId>> class_perm;  // [residue index][class]
  std::vector<std::vector<std::size_t>> char_perm;  // [residue index][row]

  std::size_t index_of(Residue r) const;
  std::size_t class_count() const { return class_perm.empty() ? 0 : class_perm[0].size(); }
};

/// Throws RowMatchFailure if some chi o pi_r is not a row of the table.
ActionTable build_actions(const CharacterTable& t, const ClassData& c);

/// Character permutations computed the other way: apply galois_apply(., r)
/// entry-wise and locate the resulting row. Indexed like char_perm.
std::vector<std::vector<std::size_t>> character_action_by_galois(const CharacterTable& t);

struct BrauerCount {
  Residue residue;
  std::size_t fixed_classes;
  std::size_t fixed_characters;
};

struct BrauerReport {
  bool passed = true;
  std::vector<BrauerCount> per_residue;
  std::size_t class_orbits = 0;
  std::size_t character_orbits = 0;
};

BrauerReport brauer_check(const ActionTable& a);

/// Orbits of the whole group on classes (or characters), each sorted, in
/// order of smallest member.
std::vector<std::vector<std::size_t>> class_orbits(const ActionTable& a);
std::vector<std::vector<std::size_t>> character_orbits(const ActionTable& a);

struct PermutationIsomorphism {
  bool isomorphic = false;
  /// When isomorphic: class orbit paired with a character orbit of the same
  /// point stabilizer.
  std::vector<std::pair<std::vector<ClassId>, std::vector<std::size_t>>> pairing;
};

/// The group is abelian, so the two sets are isomorphic iff the multisets of
/// point stabilizers agree.
PermutationIsomorphism permutation_isomorphic(const ActionTable& a);

struct SigmaConstruction {
  /// sigma in Gal(Q_M/Q), M = prod over primes q | e of q^max(3, v_q(e)).
  GaloisElement sigma;
  /// sigma restricted to Q_e, the residue acting on classes and characters.
  Residue residue_mod_exponent = 0;
  std::uint64_t witness_prime = 0;
  /// Generator of Gal(Q_{p^3}/F), as a residue mod p^3.
  Residue tau = 0;
  std::vector<ClassId> fixed_classes;
  std::vector<std::size_t> fixed_characters;
};

/// Builds sigma = (tau, sigma_2, ..., sigma_t) for a non-rational class
/// field F inside some Q_{p^3}: tau on the p-part, a generator of the full
/// Galois group on every odd prime-power part other than p, and the identity
/// on the 2-part when p is odd. Throws HypothesesNotMet when F is not the
/// field of some class, F = Q, |G| is odd, h(G) > 3 or no witness prime
/// exists.
SigmaConstruction construct_sigma_for_field(const PermGroup& g, const ClassData& c, const CharacterTable& t,
                                            const FieldKey& f);
SigmaConstruction construct_sigma_for_field(const PermGroup& g, const ClassData& c, const CharacterTable& t,
                                            const GroupFields& fields, const ActionTable& actions,
                                            const FieldKey& f);

}  // namespace fov
