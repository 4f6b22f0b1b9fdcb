#include "fov/galois_action.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fov/error.hpp"

namespace fov {

std::size_t ActionTable::index_of(Residue r) const {
  auto it = std::lower_bound(residues.begin(), residues.end(), r % modulus);
  if (it == residues.end() || *it != r % modulus) {
    throw Error(ErrorCode::NonCoprime, std::to_string(r) + " is not a unit mod " + std::to_string(modulus));
  }
  return static_cast<std::size_t>(it - residues.begin());
}

namespace {

// Distinct table values numbered once, so rows compare as integer vectors.
struct InternedTable {
  std::map<Cyclotomic, std::size_t> ids;
  std::vector<const Cyclotomic*> values;
  std::vector<std::vector<std::size_t>> rows;
  std::map<std::vector<std::size_t>, std::size_t> row_index;

  explicit InternedTable(const CharacterTable& t) {
    for (std::size_t r = 0; r < t.size(); ++r) {
      std::vector<std::size_t> row;
      row.reserve(t.entries[r].size());
      for (const auto& v : t.entries[r]) {
        auto [it, inserted] = ids.emplace(v, values.size());
        if (inserted) values.push_back(&it->first);
        row.push_back(it->second);
      }
      row_index.emplace(row, r);
      rows.push_back(std::move(row));
    }
  }

  std::size_t match(const std::vector<std::size_t>& row, Residue r) const {
    auto it = row_index.find(row);
    if (it == row_index.end()) {
      throw Error(ErrorCode::RowMatchFailure, "Galois image under r=" + std::to_string(r) + " is not a table row");
    }
    return it->second;
  }
};

std::vector<std::vector<std::size_t>> orbits_of(const std::vector<std::vector<std::size_t>>& perms, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : perms) {
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t a = find(x), b = find(perm[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

std::vector<std::size_t> stabilizer_of(const std::vector<std::vector<std::size_t>>& perms, std::size_t x) {
  std::vector<std::size_t> stab;
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (perms[i][x] == x) stab.push_back(i);
  return stab;
}

}  // namespace

ActionTable build_actions(const CharacterTable& t, const ClassData& c) {
  ActionTable a;
  a.modulus = t.modulus;
  a.residues = UnitGroup(t.modulus).elements();
  const InternedTable interned(t);
  const std::size_t k = c.size();
  for (Residue r : a.residues) {
    const auto rs = static_cast<std::int64_t>(r);
    const auto r_inv = static_cast<std::int64_t>(inverse_mod(r, t.modulus));
    std::vector<ClassId> classes(k);
    for (ClassId K = 0; K < k; ++K) classes[K] = c.power_map(K, r_inv);
    std::vector<std::size_t> chars(t.size());
    std::vector<std::size_t> image(k);
    for (std::size_t row = 0; row < t.size(); ++row) {
      for (ClassId K = 0; K < k; ++K) image[K] = interned.rows[row][c.power_map(K, rs)];
      chars[row] = interned.match(image, r);
    }
    a.class_perm.push_back(std::move(classes));
    a.char_perm.push_back(std::move(chars));
  }
  return a;
}

std::vector<std::vector<std::size_t>> character_action_by_galois(const CharacterTable& t) {
  const InternedTable interned(t);
  std::vector<std::vector<std::size_t>> out;
  for (Residue r : UnitGroup(t.modulus).elements()) {
    // A conjugate that is not itself a table value cannot complete a row.
    constexpr std::size_t kMissing = static_cast<std::size_t>(-1);
    std::vector<std::size_t> image_of(interned.values.size());
    for (std::size_t v = 0; v < interned.values.size(); ++v) {
      auto it = interned.ids.find(galois_apply(*interned.values[v], static_cast<std::int64_t>(r)));
      image_of[v] = it == interned.ids.end() ? kMissing : it->second;
    }
    std::vector<std::size_t> chars(t.size());
    for (std::size_t row = 0; row < t.size(); ++row) {
      std::vector<std::size_t> image;
      image.reserve(interned.rows[row].size());
      for (std::size_t v : interned.rows[row]) image.push_back(image_of[v]);
      chars[row] = interned.match(image, r);
    }
    out.push_back(std::move(chars));
  }
  return out;
}

std::vector<std::vector<std::size_t>> class_orbits(const ActionTable& a) {
  return orbits_of(a.class_perm, a.class_count());
}

std::vector<std::vector<std::size_t>> character_orbits(const ActionTable& a) {
  return orbits_of(a.char_perm, a.char_perm.empty() ? 0 : a.char_perm[0].size());
}

BrauerReport brauer_check(const ActionTable& a) {
  BrauerReport report;
  for (std::size_t i = 0; i < a.residues.size(); ++i) {
    BrauerCount count{a.residues[i], 0, 0};
    for (std::size_t x = 0; x < a.class_perm[i].size(); ++x) count.fixed_classes += a.class_perm[i][x] == x;
    for (std::size_t x = 0; x < a.char_perm[i].size(); ++x) count.fixed_characters += a.char_perm[i][x] == x;
    if (count.fixed_classes != count.fixed_characters) report.passed = false;
    report.per_residue.push_back(count);
  }
  report.class_orbits = class_orbits(a).size();
  report.character_orbits = character_orbits(a).size();
  if (report.class_orbits != report.character_orbits) report.passed = false;
  return report;
}

PermutationIsomorphism permutation_isomorphic(const ActionTable& a) {
  PermutationIsomorphism result;
  const auto cls = class_orbits(a);
  const auto chr = character_orbits(a);
  if (cls.size() != chr.size()) return result;

  std::multiset<std::vector<std::size_t>> class_stabs, char_stabs;
  for (const auto& orbit : cls)
    for (std::size_t x : orbit) class_stabs.insert(stabilizer_of(a.class_perm, x));
  for (const auto& orbit : chr)
    for (std::size_t x : orbit) char_stabs.insert(stabilizer_of(a.char_perm, x));
  if (class_stabs != char_stabs) return result;

  result.isomorphic = true;
  std::vector<bool> used(chr.size(), false);
  for (const auto& orbit : cls) {
    const auto stab = stabilizer_of(a.class_perm, orbit.front());
    for (std::size_t j = 0; j < chr.size(); ++j) {
      if (used[j] || stabilizer_of(a.char_perm, chr[j].front()) != stab) continue;
      used[j] = true;
      result.pairing.emplace_back(orbit, chr[j]);
      break;
    }
  }
  return result;
}

SigmaConstruction construct_sigma_for_field(const PermGroup& g, const ClassData& c, const CharacterTable& t,
                                            const FieldKey& f) {
  return construct_sigma_for_field(g, c, t, compute_fields(g, c, t), build_actions(t, c), f);
}

SigmaConstruction construct_sigma_for_field(const PermGroup& g, const ClassData& c, const CharacterTable& /*t*/,
                                            const GroupFields& fields, const ActionTable& actions,
                                            const FieldKey& f) {
  auto fail = [](const std::string& why) { return Error(ErrorCode::HypothesesNotMet, why); };
  if (g.order() % 2 != 0) throw fail("group order is odd");
  if (f.is_rational()) throw fail("field is Q");
  std::map<FieldKey, std::size_t> multiplicity;
  for (const auto& key : fields.classes) ++multiplicity[key];
  std::size_t h = 0;
  for (const auto& [key, count] : multiplicity) h = std::max(h, count);
  if (h > 3) throw fail("h(G) = " + std::to_string(h) + " > 3");
  if (!multiplicity.contains(f)) throw fail(f.to_string() + " is not the field of a class");
  const auto witness = prime_cube_witness(f);
  if (!witness) throw fail(f.to_string() + " lies in no Q_{p^3}");

  SigmaConstruction out;
  const std::uint64_t p = *witness;
  out.witness_prime = p;
  const std::uint64_t p3 = p * p * p;
  const ResidueSet target = fixing_subgroup(f, p3);
  for (Residue r : UnitGroup(p3).elements()) {
    if (generate_unit_subgroup(p3, {r}) == target) {
      out.tau = r;
      break;
    }
  }
  if (out.tau == 0) throw fail("Gal(Q_{p^3}/F) is not cyclic");

  std::vector<CrtComponent> components;
  for (auto [q, v] : factorize(c.exponent)) {
    std::uint64_t m = 1;
    for (unsigned i = 0; i < std::max(3u, v); ++i) m *= q;
    Residue r = 1;
    if (q == p) {
      r = out.tau;
    } else if (q != 2) {
      r = smallest_primitive_root(m);
    }
    components.push_back({m, r});
  }
  out.sigma = crt_assemble(components);
  out.residue_mod_exponent = out.sigma.residue % c.exponent;

  const std::size_t idx = actions.index_of(out.residue_mod_exponent);
  for (ClassId k = 0; k < actions.class_perm[idx].size(); ++k)
    if (actions.class_perm[idx][k] == k) out.fixed_classes.push_back(k);
  for (std::size_t r = 0; r < actions.char_perm[idx].size(); ++r)
    if (actions.char_perm[idx][r] == r) out.fixed_characters.push_back(r);
  return out;
}

}  // namespace fov
