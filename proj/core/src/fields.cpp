#include "fov/fields.hpp"

#include <algorithm>

namespace fov {

FieldKey class_field(const PermGroup& g, const ClassData& c, ClassId k) {
  return field_key_canonicalize(c.classes[k].element_order, rationality_stabilizer(g, c, k));
}

FieldKey class_field_from_table(const CharacterTable& t, ClassId k) {
  ResidueSet stabilizer;
  for (Residue r : UnitGroup(t.modulus).elements()) {
    const bool fixed = std::all_of(t.entries.begin(), t.entries.end(), [&](const std::vector<Cyclotomic>& row) {
      return galois_apply(row[k], static_cast<std::int64_t>(r)) == row[k];
    });
    if (fixed) stabilizer.push_back(r);
  }
  return field_key_canonicalize(t.modulus, stabilizer);
}

ResidueSet character_stabilizer(const CharacterTable& t, const ClassData& c, std::size_t row) {
  ResidueSet stabilizer;
  const auto& values = t.entries[row];
  for (Residue r : UnitGroup(t.modulus).elements()) {
    bool fixed = true;
    for (ClassId k = 0; k < c.size() && fixed; ++k) {
      fixed = values[c.power_map(k, static_cast<std::int64_t>(r))] == values[k];
    }
    if (fixed) stabilizer.push_back(r);
  }
  return stabilizer;
}

FieldKey character_field(const CharacterTable& t, const ClassData& c, std::size_t row) {
  return field_key_canonicalize(t.modulus, character_stabilizer(t, c, row));
}

GroupFields compute_fields(const PermGroup& g, const ClassData& c, const CharacterTable& t) {
  GroupFields fields;
  for (ClassId k = 0; k < c.size(); ++k) fields.classes.push_back(class_field(g, c, k));
  for (std::size_t r = 0; r < t.size(); ++r) fields.characters.push_back(character_field(t, c, r));
  return fields;
}

std::string RationalityFlags::to_string() const {
  if (rational) return "rational";
  std::string out;
  auto add = [&](const char* name) {
    if (!out.empty()) out += ',';
    out += name;
  };
  if (inverse_semi_rational) add("cut");
  if (semi_rational) add("semi-rational");
  if (quadratic_rational) add("quadratic-rational");
  if (!semi_rational) add(("1/" + std::to_string(k_rational_degree_max) + "-rational").c_str());
  return out;
}

namespace {

// Every generator of <g> is conjugate to g or g^-1.
bool is_inverse_semi_rational(const PermGroup& g, const ClassData& c, ClassId k) {
  const std::uint64_t n = c.classes[k].element_order;
  if (n <= 2) return true;
  const ResidueSet stab = rationality_stabilizer(g, c, k);
  ResidueSet covered = stab;
  for (Residue r : stab) covered.push_back(n - r);
  std::sort(covered.begin(), covered.end());
  covered.erase(std::unique(covered.begin(), covered.end()), covered.end());
  return covered.size() == euler_phi(n);
}

}  // namespace

RationalityFlags classify_rationality(const PermGroup& g, const ClassData& c, const GroupFields& fields) {
  RationalityFlags flags;
  for (ClassId k = 0; k < c.size(); ++k) {
    const std::uint64_t d = fields.classes[k].degree();
    flags.k_rational_degree_max = std::max(flags.k_rational_degree_max, d);
    if (!is_inverse_semi_rational(g, c, k)) flags.inverse_semi_rational = false;
  }
  flags.rational = flags.k_rational_degree_max == 1;
  flags.semi_rational = flags.k_rational_degree_max <= 2;
  flags.quadratic_rational = std::all_of(fields.characters.begin(), fields.characters.end(),
                                         [](const FieldKey& f) { return f.degree() <= 2; });
  return flags;
}

RationalityFlags classify_rationality(const PermGroup& g, const ClassData& c, const CharacterTable& t) {
  return classify_rationality(g, c, compute_fields(g, c, t));
}

InvariantProfile invariant_profile(const PermGroup& g, const ClassData& c, const GroupFields& fields) {
  InvariantProfile p;
  p.per_field_class_multiplicity.clear();
  p.per_field_char_multiplicity.clear();
  for (const auto& f : fields.classes) ++p.per_field_class_multiplicity[f.to_string()];
  for (const auto& f : fields.characters) ++p.per_field_char_multiplicity[f.to_string()];

  auto max_value = [](const std::map<std::string, std::size_t>& m) {
    std::size_t best = 0;
    for (const auto& [key, count] : m) best = std::max(best, count);
    return best;
  };
  p.h = max_value(p.per_field_class_multiplicity);
  p.f = max_value(p.per_field_char_multiplicity);

  auto count_if = [](const std::vector<FieldKey>& keys, auto pred) {
    return static_cast<std::size_t>(std::count_if(keys.begin(), keys.end(), pred));
  };
  auto is_rational = [](const FieldKey& f) { return f.is_rational(); };
  auto is_real = [](const FieldKey& f) { return field_signature(f).kind != FieldKind::Imaginary; };
  p.cl_Q = count_if(fields.classes, is_rational);
  p.irr_Q = count_if(fields.characters, is_rational);
  p.cl_R = count_if(fields.classes, is_real);
  p.irr_R = count_if(fields.characters, is_real);

  for (auto [prime, exp] : factorize(g.order())) {
    std::size_t count = 0;
    for (const auto& cls : c.classes) {
      std::uint64_t n = cls.element_order;
      while (n % prime == 0) n /= prime;
      if (n == 1) ++count;
    }
    p.k_p[prime] = count;
    p.n_inv = std::max(p.n_inv, count);
  }

  p.q_of_G = FieldKey();
  for (const auto& f : fields.characters) p.q_of_G = field_compositum(p.q_of_G, f);
  p.flags = classify_rationality(g, c, fields);
  return p;
}

InvariantProfile invariant_profile(const PermGroup& g, const ClassData& c, const CharacterTable& t) {
  return invariant_profile(g, c, compute_fields(g, c, t));
}

std::set<std::uint64_t> rational_element_orders(const ClassData& c, const GroupFields& fields) {
  std::set<std::uint64_t> orders;
  for (ClassId k = 0; k < c.size(); ++k)
    if (fields.classes[k].is_rational()) orders.insert(c.classes[k].element_order);
  return orders;
}

std::set<std::uint64_t> rational_element_orders(const PermGroup& g, const ClassData& c) {
  std::set<std::uint64_t> orders;
  for (ClassId k = 0; k < c.size(); ++k)
    if (class_field(g, c, k).is_rational()) orders.insert(c.classes[k].element_order);
  return orders;
}

std::optional<std::uint64_t> prime_cube_witness(const FieldKey& f) {
  if (f.is_rational()) return 2;
  // Q_{p^3} can only contain F when the conductor is a power of p.
  const auto factors = factorize(f.conductor());
  if (factors.size() != 1) return std::nullopt;
  const std::uint64_t p = factors[0].first;
  const FieldKey cyclotomic = field_key_canonicalize(p * p * p, {1});
  if (field_contains(f, cyclotomic)) return p;
  return std::nullopt;
}

std::vector<std::optional<std::uint64_t>> class_field_prime_bound(const GroupFields& fields) {
  std::vector<std::optional<std::uint64_t>> out;
  for (const auto& f : fields.classes) out.push_back(prime_cube_witness(f));
  return out;
}

std::vector<std::optional<std::uint64_t>> class_field_prime_bound(const PermGroup& g, const ClassData& c) {
  std::vector<std::optional<std::uint64_t>> out;
  for (ClassId k = 0; k < c.size(); ++k) out.push_back(prime_cube_witness(class_field(g, c, k)));
  return out;
}

}  // namespace fov
