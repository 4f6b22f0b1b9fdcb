#include "fov/zmod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fov/error.hpp"

namespace fov {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi(0)");
  std::uint64_t phi = n;
  for (auto [p, a] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  if (mod == 1) return 0;
  unsigned __int128 result = 1;
  unsigned __int128 b = base % mod;
  while (exp > 0) {
    if (exp & 1) result = result * b % mod;
    b = b * b % mod;
    exp >>= 1;
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  if (mod == 1) return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(a % mod);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorCode::NonCoprime, std::to_string(a) + " is not invertible mod " + std::to_string(mod));
  if (t < 0) t += static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 1;
  if (gcd(a, n) != 1) throw Error(ErrorCode::NonCoprime, "order of a non-unit");
  std::uint64_t order = euler_phi(n);
  for (auto [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % p == 0 && pow_mod(a, order / p, n) == 1; ++i) order /= p;
  }
  return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t n) {
  if (n <= 2) return n == 1 ? 0 : 1;
  const std::uint64_t phi = euler_phi(n);
  for (std::uint64_t g = 2; g < n; ++g) {
    if (gcd(g, n) == 1 && multiplicative_order(g, n) == phi) return g;
  }
  throw std::invalid_argument("(Z/" + std::to_string(n) + "Z)^x is not cyclic");
}

UnitGroup::UnitGroup(std::uint64_t modulus) : modulus_(modulus) {
  if (modulus == 0) throw std::invalid_argument("UnitGroup modulus must be positive");
  if (modulus == 1) {
    elements_ = {0};
    return;
  }
  for (std::uint64_t r = 1; r < modulus; ++r)
    if (gcd(r, modulus) == 1) elements_.push_back(r);
}

bool UnitGroup::contains(Residue r) const {
  return std::binary_search(elements_.begin(), elements_.end(), r);
}

bool is_unit_subgroup(std::uint64_t n, const ResidueSet& set) {
  if (n == 0 || set.empty()) return false;
  if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end())
    return false;
  for (Residue r : set) {
    if (r >= n && !(n == 1 && r == 0)) return false;
    if (n > 1 && gcd(r, n) != 1) return false;
  }
  for (Residue a : set)
    for (Residue b : set)
      if (!std::binary_search(set.begin(), set.end(), (a * b) % n)) return false;
  return true;
}

ResidueSet generate_unit_subgroup(std::uint64_t n, const ResidueSet& gens) {
  ResidueSet group = {n == 1 ? Residue{0} : Residue{1}};
  for (std::size_t i = 0; i < group.size(); ++i) {
    for (Residue g : gens) {
      Residue next = (group[i] * (g % n)) % n;
      if (std::find(group.begin(), group.end(), next) == group.end()) group.push_back(next);
    }
  }
  std::sort(group.begin(), group.end());
  return group;
}

ResidueSet reduce_residues(const ResidueSet& set, std::uint64_t d) {
  ResidueSet out;
  out.reserve(set.size());
  for (Residue r : set) out.push_back(r % d);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// --- field keys -----------------------------------------------------------

FieldKey::FieldKey() : conductor_(1), subgroup_{0} {}

std::uint64_t FieldKey::degree() const { return euler_phi(conductor_) / subgroup_.size(); }

std::string FieldKey::to_string() const {
  if (degree() == 1) return "Q";
  std::ostringstream os;
  os << "F(c=" << conductor_ << "; H={";
  for (std::size_t i = 0; i < subgroup_.size(); ++i) os << (i ? "," : "") << subgroup_[i];
  os << "})";
  return os.str();
}

FieldKey field_key_canonicalize(std::uint64_t n, const ResidueSet& h) {
  if (!is_unit_subgroup(n, h)) {
    throw Error(ErrorCode::NotASubgroup, "residue set is not a subgroup of (Z/" + std::to_string(n) + "Z)^x");
  }
  const UnitGroup units(n);
  for (std::uint64_t d : divisors(n)) {
    if (d % 4 == 2) continue;
    // Q_n^H lies in Q_d exactly when the kernel of reduction mod d is inside H.
    bool kernel_inside = std::all_of(units.elements().begin(), units.elements().end(), [&](Residue r) {
      return r % d != 1 % d || std::binary_search(h.begin(), h.end(), r);
    });
    if (kernel_inside) return FieldKey(d, reduce_residues(h, d));
  }
  throw std::logic_error("field_key_canonicalize: no conductor found");
}

bool field_contains(const FieldKey& f1, const FieldKey& f2) {
  if (f2.conductor() % f1.conductor() != 0) return false;
  for (Residue r : reduce_residues(f2.subgroup(), f1.conductor())) {
    if (!std::binary_search(f1.subgroup().begin(), f1.subgroup().end(), r)) return false;
  }
  return true;
}

ResidueSet fixing_subgroup(const FieldKey& f, std::uint64_t n) {
  if (n % f.conductor() != 0) {
    throw std::invalid_argument("modulus " + std::to_string(n) + " is not a multiple of the conductor");
  }
  ResidueSet out;
  for (Residue r : UnitGroup(n).elements()) {
    if (std::binary_search(f.subgroup().begin(), f.subgroup().end(), r % f.conductor())) out.push_back(r);
  }
  return out;
}

FieldKey field_compositum(const FieldKey& f1, const FieldKey& f2) {
  const std::uint64_t n = lcm(f1.conductor(), f2.conductor());
  const ResidueSet h1 = fixing_subgroup(f1, n);
  const ResidueSet h2 = fixing_subgroup(f2, n);
  ResidueSet both;
  std::set_intersection(h1.begin(), h1.end(), h2.begin(), h2.end(), std::back_inserter(both));
  return field_key_canonicalize(n, both);
}

FieldSignature field_signature(const FieldKey& f) {
  if (f.is_rational()) return {FieldKind::Rational, false};
  const auto& h = f.subgroup();
  const bool real = std::binary_search(h.begin(), h.end(), f.conductor() - 1);
  return {real ? FieldKind::Real : FieldKind::Imaginary, !real && f.degree() == 2};
}

// --- Galois groups of prime-power cyclotomic fields -----------------------

std::uint64_t AbelianGroupDescriptor::order() const {
  std::uint64_t n = 1;
  for (auto c : cyclic_factors) n *= c;
  return n;
}

std::string AbelianGroupDescriptor::to_string() const {
  if (cyclic_factors.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < cyclic_factors.size(); ++i) {
    if (i) out += " x ";
    out += "C" + std::to_string(cyclic_factors[i]);
  }
  return out;
}

AbelianGroupDescriptor galois_structure(std::uint64_t p, unsigned a) {
  if (!is_prime(p) || a == 0) throw std::invalid_argument("galois_structure needs a prime p and a >= 1");
  std::uint64_t pa1 = 1;
  for (unsigned i = 1; i < a; ++i) pa1 *= p;
  if (p != 2) return {{pa1 * (p - 1)}};
  if (a == 1) return {{}};
  if (a == 2) return {{2}};
  return {{pa1 / 2, 2}};
}

namespace {

// Subgroups of Z_n1 x Z_n2 of index m correspond to Hermite normal forms
// [[a, b], [0, c]] (a*c = m, 0 <= b < c) of lattices containing n1 Z + n2 Z.
std::uint64_t count_index_m_subgroups(const std::vector<std::uint64_t>& factors, std::uint64_t m) {
  if (factors.empty()) return m == 1 ? 1 : 0;
  if (factors.size() == 1) return factors[0] % m == 0 ? 1 : 0;
  if (factors.size() != 2) throw std::logic_error("unit groups of prime-power moduli have rank <= 2");
  const std::uint64_t n1 = factors[0], n2 = factors[1];
  std::uint64_t count = 0;
  for (std::uint64_t a : divisors(m)) {
    const std::uint64_t c = m / a;
    if (n1 % a != 0 || n2 % c != 0) continue;
    for (std::uint64_t b = 0; b < c; ++b)
      if ((n1 / a) * b % c == 0) ++count;
  }
  return count;
}

}  // namespace

std::uint64_t count_bounded_subfields(std::uint64_t p, unsigned a, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("degree bound must be >= 1");
  const auto structure = galois_structure(p, a);
  std::uint64_t count = 0;
  for (std::uint64_t m = 1; m <= d; ++m) count += count_index_m_subgroups(structure.cyclic_factors, m);
  return count;
}

// --- Galois elements ------------------------------------------------------

GaloisElement GaloisElement::restrict_to(std::uint64_t d) const {
  if (d == 0 || modulus % d != 0) throw std::invalid_argument("restriction modulus must divide the modulus");
  return {d, residue % d};
}

GaloisElement crt_assemble(const std::vector<CrtComponent>& components) {
  std::uint64_t modulus = 1;
  std::uint64_t residue = 0;
  for (const auto& [m, r] : components) {
    if (m == 0) throw std::invalid_argument("zero modulus");
    if (gcd(modulus, m) != 1) {
      throw Error(ErrorCode::NonCoprimeModuli, "modulus " + std::to_string(m) + " shares a factor with " +
                                                   std::to_string(modulus));
    }
    if (m > 1 && gcd(r % m, m) != 1) {
      throw Error(ErrorCode::NonCoprime, std::to_string(r) + " is not a unit mod " + std::to_string(m));
    }
    // x = residue + modulus * t with x = r (mod m).
    const std::uint64_t diff = (r % m + m - residue % m) % m;
    const std::uint64_t t = static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(diff) * inverse_mod(modulus % m, m) % m);
    residue += modulus * t;
    modulus *= m;
  }
  return {modulus, residue % modulus};
}

}  // namespace fov
