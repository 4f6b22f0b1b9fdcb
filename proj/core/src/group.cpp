#include "fov/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include <boost/container_hash/hash.hpp>

#include "fov/error.hpp"

namespace fov {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) throw Error(ErrorCode::InvalidPermutation, "images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (Point x = 0; x < images_.size(); ++x) inv.images_[images_[x]] = x;
  return inv;
}

bool Permutation::is_identity() const {
  for (Point x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t order = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    os << '(';
    for (Point y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (y != x) os << ',';
      os << y;
    }
    os << ')';
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation out;
  out.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < a.images_.size(); ++x) out.images_[x] = b.images_[a.images_[x]];
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return boost::hash_range(p.images().begin(), p.images().end());
}

// --- PermGroup ------------------------------------------------------------

PermGroup PermGroup::from_generators(std::size_t degree, std::vector<Permutation> gens, std::size_t cap) {
  for (const auto& g : gens) {
    if (g.degree() != degree) {
      throw Error(ErrorCode::InvalidPermutation,
                  "generator of degree " + std::to_string(g.degree()) + " in a group of degree " +
                      std::to_string(degree));
    }
  }
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(gens);

  auto add = [&](Permutation p) {
    auto [it, inserted] = group.index_.emplace(p, static_cast<ElementId>(group.elements_.size()));
    if (inserted) {
      if (group.elements_.size() >= cap) {
        throw Error(ErrorCode::OrderCapExceeded, "group order exceeds cap " + std::to_string(cap));
      }
      group.elements_.push_back(std::move(p));
    }
    return it->second;
  };
  add(Permutation::identity(degree));
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    for (const auto& s : group.generators_) add(group.elements_[i] * s);
  }
  for (const auto& s : group.generators_) group.generator_ids_.push_back(group.index_.at(s));

  const std::size_t n = group.elements_.size();
  group.inverses_.resize(n);
  group.orders_.resize(n);
  for (ElementId i = 0; i < n; ++i) {
    group.inverses_[i] = group.index_.at(group.elements_[i].inverse());
    group.orders_[i] = group.elements_[i].order();
    group.exponent_ = std::lcm(group.exponent_, group.orders_[i]);
  }
  return group;
}

std::optional<ElementId> PermGroup::find(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ElementId PermGroup::multiply(ElementId a, ElementId b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  return index_.at(elements_[a] * elements_[b]);
}

ElementId PermGroup::power(ElementId a, std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(orders_[a]);
  j %= n;
  if (j < 0) j += n;
  // Apply the power pointwise instead of repeated multiplication.
  const auto& p = elements_[a];
  std::vector<Point> images(degree_);
  std::vector<bool> seen(degree_, false);
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x]) continue;
    std::vector<Point> cycle;
    for (Point y = x; !seen[y]; y = p(y)) {
      seen[y] = true;
      cycle.push_back(y);
    }
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) images[cycle[i]] = cycle[(i + static_cast<std::size_t>(j)) % len];
  }
  return index_.at(Permutation(std::move(images)));
}

ElementId PermGroup::conjugate(ElementId a, ElementId b) const { return multiply(multiply(inverses_[b], a), b); }

std::vector<ElementId> PermGroup::subgroup_closure(std::span<const ElementId> gens) const {
  std::vector<ElementId> members = {identity()};
  std::vector<bool> in(order(), false);
  in[identity()] = true;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (ElementId s : gens) {
      ElementId next = multiply(members[i], s);
      if (!in[next]) {
        in[next] = true;
        members.push_back(next);
      }
    }
  }
  return members;
}

// --- classes --------------------------------------------------------------

ClassId ClassData::power_map(ClassId k, std::int64_t j) const {
  const auto e = static_cast<std::int64_t>(exponent);
  j %= e;
  if (j < 0) j += e;
  return power_maps[static_cast<std::size_t>(j)][k];
}

ClassData conjugacy_classes(const PermGroup& g) {
  const std::size_t n = g.order();
  constexpr ClassId kUnassigned = static_cast<ClassId>(-1);
  std::vector<ClassId> orbit_of(n, kUnassigned);
  std::vector<std::vector<ElementId>> orbits;

  for (ElementId x = 0; x < n; ++x) {
    if (orbit_of[x] != kUnassigned) continue;
    const ClassId id = orbits.size();
    std::vector<ElementId> orbit = {x};
    orbit_of[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElementId s : g.generator_ids()) {
        ElementId y = g.conjugate(orbit[i], s);
        if (orbit_of[y] == kUnassigned) {
          orbit_of[y] = id;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  std::vector<std::size_t> order(orbits.size());
  std::iota(order.begin(), order.end(), 0);
  auto key = [&](std::size_t i) {
    return std::make_tuple(g.element_order(orbits[i].front()), orbits[i].size(), orbits[i].front());
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });

  ClassData data;
  data.exponent = g.exponent();
  data.group_order = n;
  data.class_of.assign(n, 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    auto& orbit = orbits[order[pos]];
    for (ElementId x : orbit) data.class_of[x] = pos;
    const ElementId rep = orbit.front();
    data.classes.push_back({rep, std::move(orbit), g.element_order(rep)});
  }

  data.power_maps.assign(data.exponent, std::vector<ClassId>(data.size()));
  for (ClassId k = 0; k < data.size(); ++k) {
    const ElementId rep = data.classes[k].representative;
    ElementId x = PermGroup::identity();
    for (std::uint64_t j = 0; j < data.exponent; ++j) {
      data.power_maps[j][k] = data.class_of[x];
      x = g.multiply(x, rep);
    }
  }
  return data;
}

ResidueSet rationality_stabilizer(const PermGroup& g, const ClassData& c, ClassId k) {
  const auto& cls = c.classes[k];
  const std::uint64_t n = cls.element_order;
  if (n == 1) return {0};
  ResidueSet out;
  for (Residue r : UnitGroup(n).elements()) {
    if (c.class_of[g.power(cls.representative, static_cast<std::int64_t>(r))] == k) out.push_back(r);
  }
  return out;
}

std::uint64_t bg_order(const PermGroup& g, ElementId element) {
  std::vector<bool> in_cyclic(g.order(), false);
  ElementId x = PermGroup::identity();
  do {
    in_cyclic[x] = true;
    x = g.multiply(x, element);
  } while (x != PermGroup::identity());

  std::uint64_t normalizer = 0, centralizer = 0;
  for (ElementId y = 0; y < g.order(); ++y) {
    const ElementId conj = g.conjugate(element, y);
    if (in_cyclic[conj]) ++normalizer;
    if (conj == element) ++centralizer;
  }
  return normalizer / centralizer;
}

namespace {

// Derived subgroup of the subgroup generated by `gens`: the normal closure
// of the generator commutators. Returns a generating set.
std::vector<ElementId> derived_generators(const PermGroup& g, const std::vector<ElementId>& gens) {
  std::vector<ElementId> result;
  for (ElementId a : gens) {
    for (ElementId b : gens) {
      ElementId comm = g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
      if (comm != PermGroup::identity()) result.push_back(comm);
    }
  }
  std::vector<bool> member(g.order(), false);
  auto refresh = [&] {
    std::fill(member.begin(), member.end(), false);
    for (ElementId x : g.subgroup_closure(result)) member[x] = true;
  };
  refresh();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < result.size(); ++i) {
      for (ElementId h : gens) {
        ElementId conj = g.conjugate(result[i], h);
        if (!member[conj]) {
          result.push_back(conj);
          refresh();
          changed = true;
        }
      }
    }
  }
  return result;
}

}  // namespace

bool is_solvable(const PermGroup& g) {
  std::vector<ElementId> gens = g.generator_ids();
  std::size_t size = g.subgroup_closure(gens).size();
  while (size > 1) {
    std::vector<ElementId> next = derived_generators(g, gens);
    const std::size_t next_size = g.subgroup_closure(next).size();
    if (next_size == size) return false;
    gens = std::move(next);
    size = next_size;
  }
  return true;
}

ClassMultiplicationCoefficients class_mult_coefficients(const ClassData& c, const PermGroup& g) {
  const std::size_t k = c.size();
  ClassMultiplicationCoefficients a(k);
  for (ClassId l = 0; l < k; ++l) {
    const ElementId z = c.classes[l].representative;
    for (ElementId x = 0; x < g.order(); ++x) {
      const ElementId y = g.multiply(g.inverse(x), z);
      ++a.at(c.class_of[x], c.class_of[y], l);
    }
  }
  return a;
}

}  // namespace fov
