#include "fov/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "fov/error.hpp"
#include "json.hpp"

namespace fov {

using nlohmann::json;

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "PASS") return Verdict::Pass;
  if (text == "FAIL") return Verdict::Fail;
  if (text == "NOT_APPLICABLE") return Verdict::NotApplicable;
  return std::nullopt;
}

namespace {

struct Check {
  Verdict verdict = Verdict::Pass;
  json witness = json::object();

  void fail(const std::string& key, json value) {
    verdict = Verdict::Fail;
    witness["violations"].push_back({{key, std::move(value)}});
  }
};

Check not_applicable(std::string why) {
  Check c;
  c.verdict = Verdict::NotApplicable;
  c.witness["reason"] = std::move(why);
  return c;
}

std::set<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::set<std::uint64_t> out;
  for (auto [p, a] : factorize(n)) out.insert(p);
  return out;
}

bool is_rational_or_imaginary_quadratic(const FieldKey& f) {
  return f.is_rational() || field_signature(f).is_imaginary_quadratic;
}

FieldKey q8_field() { return field_key_canonicalize(8, {1}); }

Check thm_a(const GroupAnalysis& a) {
  Check c;
  const auto& p = a.profile;
  c.witness = {{"n", p.n_inv}, {"h", p.h}, {"k_p", json::object()}};
  for (auto [prime, count] : p.k_p) c.witness["k_p"][std::to_string(prime)] = count;
  if (p.n_inv > 3 * p.h * p.h) c.verdict = Verdict::Fail;
  return c;
}

Check thm_b(const GroupAnalysis& a) {
  const auto& p = a.profile;
  if (p.h > 3) return not_applicable("h > 3");
  Check c;
  c.witness = {{"h", p.h}, {"f", p.f}};
  if (p.f != p.h) c.verdict = Verdict::Fail;
  return c;
}

Check h1(const GroupAnalysis& a) {
  Check c;
  c.witness = {{"h", a.profile.h}, {"order", a.group.order()}};
  if ((a.profile.h == 1) != (a.group.order() == 1)) c.verdict = Verdict::Fail;
  return c;
}

Check h2(const GroupAnalysis& a) {
  if (a.profile.h != 2) return not_applicable("h != 2");
  Check c;
  c.witness = {{"h", a.profile.h}, {"f", a.profile.f}};
  if (a.profile.f != 2) c.verdict = Verdict::Fail;
  return c;
}

Check num_rat(const GroupAnalysis& a) {
  Check c;
  const auto cl = a.profile.cl_Q, irr = a.profile.irr_Q;
  const bool odd = a.group.order() % 2 == 1;
  c.witness = {{"cl_Q", cl}, {"irr_Q", irr}, {"odd", odd}};
  if ((cl == 1) != odd || (irr == 1) != odd) c.fail("part", "i");
  if ((cl == 2) != (irr == 2)) c.fail("part", "ii");
  if (cl == 3 && irr != 3) c.fail("part", "iii");
  return c;
}

Check field_cont(const GroupAnalysis& a) {
  Check c;
  const auto& cls = a.classes;
  for (ClassId k = 0; k < cls.size(); ++k) {
    for (std::uint64_t j = 1; j < cls.exponent; ++j) {
      const ClassId image = cls.power_map(k, static_cast<std::int64_t>(j));
      if (!field_contains(a.fields.classes[image], a.fields.classes[k])) {
        c.fail("class", {{"class", k}, {"j", j}, {"Q(g^j)", a.fields.classes[image].to_string()},
                         {"Q(g)", a.fields.classes[k].to_string()}});
      }
    }
  }
  return c;
}

Check k_rat(const GroupAnalysis& a) {
  Check c;
  const auto h = a.profile.h;
  c.witness["h"] = h;
  std::map<FieldKey, std::size_t> count;
  for (ClassId k = 0; k < a.classes.size(); ++k) {
    const auto& f = a.fields.classes[k];
    ++count[f];
    if (f.degree() > h) c.fail("class", {{"class", k}, {"degree", f.degree()}});
  }
  for (const auto& [f, n] : count)
    if (n % f.degree() != 0) c.fail("orbit", {{"field", f.to_string()}, {"classes", n}});
  return c;
}

Check bg(const GroupAnalysis& a) {
  Check c;
  for (ClassId k = 0; k < a.classes.size(); ++k) {
    const auto& cls = a.classes.classes[k];
    const auto stab = rationality_stabilizer(a.group, a.classes, k);
    const auto from_table = class_field_from_table(a.table, k);
    const std::uint64_t b = bg_order(a.group, cls.representative);
    if (euler_phi(cls.element_order) / stab.size() != from_table.degree() ||
        euler_phi(cls.element_order) % stab.size() != 0)
      c.fail("degree", {{"class", k}, {"phi", euler_phi(cls.element_order)}, {"R", stab.size()},
                        {"degree", from_table.degree()}});
    if (b != stab.size()) c.fail("bg_order", {{"class", k}, {"B", b}, {"R", stab.size()}});
    if (!(from_table == a.fields.classes[k]))
      c.fail("field", {{"class", k}, {"power_maps", a.fields.classes[k].to_string()}, {"table", from_table.to_string()}});
  }
  return c;
}

Check rat_orders(const GroupAnalysis& a) {
  const auto cl = a.profile.cl_Q;
  if (cl != 2 && cl != 3) return not_applicable("|Cl_Q| not in {2,3}");
  Check c;
  const auto orders = rational_element_orders(a.classes, a.fields);
  c.witness["orders"] = orders;
  std::vector<std::uint64_t> v(orders.begin(), orders.end());
  const bool ok = v == std::vector<std::uint64_t>{1, 2} || v == std::vector<std::uint64_t>{1, 2, 4} ||
                  (v.size() == 3 && v[0] == 1 && v[1] == 2 && v[2] % 2 == 1 && is_prime(v[2]));
  if (!ok) c.verdict = Verdict::Fail;
  return c;
}

Check cl_field(const GroupAnalysis& a) {
  if (a.group.order() % 2 == 1) return not_applicable("|G| odd");
  if (a.profile.h > 3) return not_applicable("h > 3");
  Check c;
  const auto bounds = class_field_prime_bound(a.fields);
  c.witness["primes"] = json::array();
  for (ClassId k = 0; k < bounds.size(); ++k) {
    if (bounds[k]) {
      c.witness["primes"].push_back(*bounds[k]);
    } else {
      c.witness["primes"].push_back(nullptr);
      c.fail("class", {{"class", k}, {"field", a.fields.classes[k].to_string()}});
    }
  }
  return c;
}

Check sigma(const GroupAnalysis& a) {
  if (a.group.order() % 2 == 1) return not_applicable("|G| odd");
  if (a.profile.h > 3) return not_applicable("h > 3");
  std::set<FieldKey> targets;
  for (const auto& f : a.fields.classes)
    if (!f.is_rational()) targets.insert(f);
  if (targets.empty()) return not_applicable("every class is rational");

  Check c;
  c.witness["fields"] = json::array();
  const FieldKey q8 = q8_field();
  const std::size_t k = a.classes.size();
  for (const auto& f : targets) {
    SigmaConstruction s;
    try {
      s = construct_sigma_for_field(a.group, a.classes, a.table, a.fields, a.actions, f);
    } catch (const Error& err) {
      c.fail("construction", {{"field", f.to_string()}, {"error", err.what()}});
      continue;
    }
    std::vector<ClassId> want_classes;
    std::vector<std::size_t> want_chars;
    if (s.witness_prime == 2) {
      for (ClassId t = 0; t < k; ++t)
        if (a.fields.classes[t].is_rational() || a.fields.classes[t] == f) want_classes.push_back(t);
      for (std::size_t x = 0; x < k; ++x)
        if (a.fields.characters[x].is_rational() || a.fields.characters[x] == f) want_chars.push_back(x);
    } else {
      for (ClassId t = 0; t < k; ++t)
        if (field_contains(a.fields.classes[t], q8) || a.fields.classes[t] == f) want_classes.push_back(t);
      for (std::size_t x = 0; x < k; ++x)
        if (field_contains(a.fields.characters[x], q8) || field_contains(f, a.fields.characters[x]))
          want_chars.push_back(x);
    }
    const auto with_field = [&](const std::vector<FieldKey>& keys) {
      return static_cast<std::size_t>(std::count(keys.begin(), keys.end(), f));
    };
    const std::size_t n_classes = with_field(a.fields.classes), n_chars = with_field(a.fields.characters);
    json entry = {{"field", f.to_string()},
                  {"p", s.witness_prime},
                  {"tau", s.tau},
                  {"sigma", s.sigma.residue},
                  {"modulus", s.sigma.modulus},
                  {"fixed_classes", s.fixed_classes.size()},
                  {"fixed_characters", s.fixed_characters.size()},
                  {"classes_with_field", n_classes},
                  {"characters_with_field", n_chars}};
    c.witness["fields"].push_back(entry);
    if (s.fixed_classes != want_classes) c.fail("fixed_classes", entry);
    if (s.fixed_characters != want_chars) c.fail("fixed_characters", entry);
    if (n_classes != n_chars) c.fail("count", entry);
  }
  return c;
}

Check cut(const GroupAnalysis& a) {
  Check c;
  const bool isr = a.profile.flags.inverse_semi_rational;
  const bool classes_ok = std::all_of(a.fields.classes.begin(), a.fields.classes.end(), is_rational_or_imaginary_quadratic);
  const bool chars_ok =
      std::all_of(a.fields.characters.begin(), a.fields.characters.end(), is_rational_or_imaginary_quadratic);
  c.witness = {{"inverse_semi_rational", isr}, {"class_fields", classes_ok}, {"character_fields", chars_ok}};
  if (isr != classes_ok || isr != chars_ok) c.fail("equivalence", c.witness);
  if (isr && !(a.profile.flags.quadratic_rational && a.profile.flags.semi_rational))
    c.fail("consequence", "cut group not quadratic rational and semi-rational");
  return c;
}

Check main_thm(const GroupAnalysis& a) {
  if (a.profile.irr_Q != a.profile.cl_Q) return not_applicable("|Irr_Q| != |Cl_Q|");
  Check c;
  const bool qr = a.profile.flags.quadratic_rational, sr = a.profile.flags.semi_rational;
  c.witness = {{"quadratic_rational", qr}, {"semi_rational", sr}};
  if (qr != sr) c.fail("equivalence", c.witness);
  if (qr && sr) {
    const bool iso = permutation_isomorphic(a.actions).isomorphic;
    c.witness["permutation_isomorphic"] = iso;
    if (!iso) c.fail("isomorphism", false);
  }
  return c;
}

Check quad_semi(const GroupAnalysis& a) {
  if (!a.profile.flags.quadratic_rational || !a.profile.flags.semi_rational)
    return not_applicable("not both quadratic rational and semi-rational");
  Check c;
  const bool iso = permutation_isomorphic(a.actions).isomorphic;
  c.witness["permutation_isomorphic"] = iso;
  if (!iso) c.verdict = Verdict::Fail;
  return c;
}

Check odd_case(const GroupAnalysis& a) {
  if (a.profile.h > 3) return not_applicable("h > 3");
  if (a.profile.cl_Q != 1) return not_applicable("|Cl_Q| != 1");
  Check c;
  const bool iso = permutation_isomorphic(a.actions).isomorphic;
  c.witness = {{"permutation_isomorphic", iso}, {"h", a.profile.h}, {"f", a.profile.f}};
  if (!iso) c.fail("isomorphism", false);
  if (a.profile.f != a.profile.h) c.fail("f_eq_h", c.witness);
  return c;
}

Check brauer(const GroupAnalysis& a) {
  Check c;
  const auto report = brauer_check(a.actions);
  c.witness = {{"class_orbits", report.class_orbits}, {"character_orbits", report.character_orbits}};
  for (const auto& r : report.per_residue)
    if (r.fixed_classes != r.fixed_characters)
      c.fail("residue", {{"r", r.residue}, {"classes", r.fixed_classes}, {"characters", r.fixed_characters}});
  if (report.class_orbits != report.character_orbits) c.fail("orbits", c.witness);
  return c;
}

Check action_laws(const GroupAnalysis& a) {
  Check c;
  const auto& act = a.actions;
  const auto e = act.modulus;
  const std::size_t k = a.classes.size();
  for (std::size_t i = 0; i < act.residues.size(); ++i) {
    for (std::size_t j = 0; j < act.residues.size(); ++j) {
      const std::size_t ij = act.index_of(act.residues[i] * act.residues[j] % e);
      for (std::size_t x = 0; x < k; ++x) {
        if (act.class_perm[ij][x] != act.class_perm[j][act.class_perm[i][x]])
          c.fail("class_homomorphism", {{"r", act.residues[i]}, {"s", act.residues[j]}, {"class", x}});
        if (act.char_perm[ij][x] != act.char_perm[j][act.char_perm[i][x]])
          c.fail("character_homomorphism", {{"r", act.residues[i]}, {"s", act.residues[j]}, {"row", x}});
      }
      if (c.verdict == Verdict::Fail) return c;
    }
  }
  std::map<Cyclotomic, std::size_t> ids;
  std::vector<std::vector<std::size_t>> value(k, std::vector<std::size_t>(k));
  for (std::size_t x = 0; x < k; ++x)
    for (ClassId K = 0; K < k; ++K) value[x][K] = ids.emplace(a.table(x, K), ids.size()).first->second;
  for (std::size_t i = 0; i < act.residues.size(); ++i)
    for (std::size_t x = 0; x < k; ++x)
      for (ClassId K = 0; K < k; ++K)
        if (value[act.char_perm[i][x]][act.class_perm[i][K]] != value[x][K]) {
          c.fail("compatibility", {{"r", act.residues[i]}, {"row", x}, {"class", K}});
          return c;
        }
  if (character_action_by_galois(a.table) != act.char_perm) c.fail("dual", "galois_apply disagrees with power maps");
  return c;
}

Check real_counts(const GroupAnalysis& a) {
  Check c;
  c.witness = {{"cl_R", a.profile.cl_R}, {"irr_R", a.profile.irr_R}};
  if (a.profile.cl_R != a.profile.irr_R) c.verdict = Verdict::Fail;
  return c;
}

Check orthogonality(const GroupAnalysis& a) {
  Check c;
  const auto report = verify_orthogonality(a.table, a.classes);
  for (const auto& v : report.violations) c.fail("orthogonality", v);
  for (std::size_t r = 0; r < a.table.size(); ++r)
    if (a.group.order() % a.table.degrees[r] != 0) c.fail("degree", {{"row", r}, {"degree", a.table.degrees[r]}});
  c.witness["prime"] = a.table.prime;
  return c;
}

Check prime_set(const GroupAnalysis& a, bool applies, const char* hypothesis, std::set<std::uint64_t> allowed) {
  if (!a.solvable) return not_applicable("not solvable");
  if (!applies) return not_applicable(std::string("not ") + hypothesis);
  Check c;
  const auto primes = prime_divisors(a.group.order());
  c.witness["primes"] = primes;
  for (auto p : primes)
    if (!allowed.contains(p)) c.fail("prime", p);
  return c;
}

Check expected(const GroupAnalysis& a) {
  if (!a.spec.expected) return not_applicable("no expected block");
  Check c;
  const auto& e = *a.spec.expected;
  const ExpectedBlock got{a.group.order(), a.profile.h, a.profile.f, a.profile.cl_Q, a.profile.irr_Q};
  c.witness = {{"order", got.order}, {"h", got.h}, {"f", got.f}, {"cl_Q", got.cl_Q}, {"irr_Q", got.irr_Q}};
  if (!(got == e)) {
    c.fail("expected", {{"order", e.order}, {"h", e.h}, {"f", e.f}, {"cl_Q", e.cl_Q}, {"irr_Q", e.irr_Q}});
  }
  return c;
}

using SuiteFn = std::function<Check(const GroupAnalysis&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"S-THMA", thm_a},
      {"S-THMB", thm_b},
      {"S-H1", h1},
      {"S-H2", h2},
      {"S-NUMRAT", num_rat},
      {"S-FIELDCONT", field_cont},
      {"S-KRAT", k_rat},
      {"S-BG", bg},
      {"S-RATORD", rat_orders},
      {"S-CLFIELD", cl_field},
      {"S-SIGMA", sigma},
      {"S-CUT", cut},
      {"S-MAIN", main_thm},
      {"S-QUADSEMI", quad_semi},
      {"S-ODD", odd_case},
      {"S-BRAUER", brauer},
      {"S-ACTION", action_laws},
      {"S-REAL", real_counts},
      {"S-ORTH", orthogonality},
      {"S-GOW", [](const GroupAnalysis& a) { return prime_set(a, a.profile.flags.rational, "rational", {2, 3, 5}); }},
      {"S-CD",
       [](const GroupAnalysis& a) {
         return prime_set(a, a.profile.flags.semi_rational, "semi-rational", {2, 3, 5, 7, 13, 17});
       }},
      {"S-TENT",
       [](const GroupAnalysis& a) {
         return prime_set(a, a.profile.flags.quadratic_rational, "quadratic rational", {2, 3, 5, 7, 13});
       }},
      {"S-EXPECTED", expected},
  };
  return suites;
}

const SuiteFn& find_suite(std::string_view id) {
  for (const auto& [name, fn] : registry())
    if (name == id) return fn;
  throw Error(ErrorCode::UnknownSuite, "no suite named '" + std::string(id) + "'");
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return ids;
}

bool is_known_suite(std::string_view id) {
  const auto& ids = suite_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

SuiteOutcome evaluate_suite(std::string_view id, const GroupAnalysis& a) {
  Check c = find_suite(id)(a);
  return {c.verdict, c.witness.dump()};
}

VerdictRecord make_record(std::string_view id, const GroupAnalysis& a, const std::string& hash) {
  auto outcome = evaluate_suite(id, a);
  VerdictRecord r;
  r.group_name = a.spec.name;
  r.group_order = a.group.order();
  r.suite_id = std::string(id);
  r.verdict = outcome.verdict;
  r.witness = std::move(outcome.witness);
  r.spec_hash = hash;
  return r;
}

VerdictRecord run_suite(std::string_view id, const GroupSpec& spec) {
  find_suite(id);
  const GroupAnalysis a(spec);
  return make_record(id, a, spec_hash(spec));
}

}  // namespace fov
