#include "fov/corpus.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "fov/error.hpp"
#include "json.hpp"

namespace fov {

using nlohmann::json;

PermGroup GroupSpec::build(std::size_t cap) const { return group_from_generators(degree, generators, cap); }

namespace {

Permutation shift_cycle(std::size_t degree, std::size_t start, std::size_t length) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 0);
  for (std::size_t i = 0; i < length; ++i) images[start + i] = static_cast<Point>(start + (i + 1) % length);
  return Permutation(std::move(images));
}

GroupSpec builtin(std::string name, std::size_t degree, std::vector<Permutation> gens) {
  GroupSpec spec;
  spec.name = std::move(name);
  spec.source = SpecSource::Builtin;
  spec.provenance = "builtin";
  spec.degree = degree;
  spec.generators = std::move(gens);
  return spec;
}

}  // namespace

GroupSpec cyclic_group(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclic group order must be positive");
  if (n == 1) return builtin("C1", 1, {});
  return builtin("C" + std::to_string(n), n, {shift_cycle(n, 0, n)});
}

GroupSpec abelian_group(const std::vector<std::uint64_t>& factors) {
  std::vector<std::uint64_t> fs;
  for (auto f : factors)
    if (f > 1) fs.push_back(f);
  if (fs.empty()) return cyclic_group(1);
  std::size_t degree = std::accumulate(fs.begin(), fs.end(), std::size_t{0});
  std::vector<Permutation> gens;
  std::string name;
  std::size_t start = 0;
  for (auto f : fs) {
    gens.push_back(shift_cycle(degree, start, f));
    start += f;
    name += (name.empty() ? "C" : "xC") + std::to_string(f);
  }
  return builtin(name, degree, std::move(gens));
}

GroupSpec dihedral_group(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("dihedral groups need n >= 3");
  std::vector<Point> reflection(n);
  for (std::uint64_t i = 0; i < n; ++i) reflection[i] = static_cast<Point>((n - i) % n);
  return builtin("D" + std::to_string(n), n, {shift_cycle(n, 0, n), Permutation(std::move(reflection))});
}

GroupSpec dicyclic_group(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("dicyclic groups need n >= 2");
  // Element a^i x^j is point i + 2n j; generators act by right multiplication.
  const std::uint64_t m = 2 * n;
  std::vector<Point> by_a(2 * m), by_x(2 * m);
  for (std::uint64_t i = 0; i < m; ++i) {
    by_a[i] = static_cast<Point>((i + 1) % m);
    by_a[m + i] = static_cast<Point>(m + (i + m - 1) % m);
    by_x[i] = static_cast<Point>(m + i);
    by_x[m + i] = static_cast<Point>((i + n) % m);
  }
  return builtin("Q" + std::to_string(4 * n), 2 * m, {Permutation(std::move(by_a)), Permutation(std::move(by_x))});
}

GroupSpec symmetric_group(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("symmetric groups need n >= 2");
  return builtin("S" + std::to_string(n), n, {shift_cycle(n, 0, 2), shift_cycle(n, 0, n)});
}

GroupSpec alternating_group(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("alternating groups need n >= 3");
  std::vector<Permutation> gens = {shift_cycle(n, 0, 3)};
  if (n > 3) gens.push_back(n % 2 == 1 ? shift_cycle(n, 0, n) : shift_cycle(n, 1, n - 1));
  return builtin("A" + std::to_string(n), n, std::move(gens));
}

GroupSpec direct_product(const GroupSpec& a, const GroupSpec& b) {
  const std::size_t degree = a.degree + b.degree;
  std::vector<Permutation> gens;
  for (const auto& g : a.generators) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t i = 0; i < a.degree; ++i) images[i] = g(static_cast<Point>(i));
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators) {
    std::vector<Point> images(degree);
    std::iota(images.begin(), images.end(), 0);
    for (std::size_t i = 0; i < b.degree; ++i) images[a.degree + i] = static_cast<Point>(a.degree + g(static_cast<Point>(i)));
    gens.emplace_back(std::move(images));
  }
  return builtin(a.name + "x" + b.name, degree, std::move(gens));
}

std::vector<std::vector<std::uint64_t>> abelian_invariant_factors(std::uint64_t order) {
  if (order == 0) throw std::invalid_argument("order must be positive");
  // Partitions of each prime exponent, largest part first.
  std::function<void(unsigned, unsigned, std::vector<unsigned>&, std::vector<std::vector<unsigned>>&)> partitions =
      [&](unsigned rest, unsigned max_part, std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
        if (rest == 0) {
          out.push_back(cur);
          return;
        }
        for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
          cur.push_back(part);
          partitions(rest - part, part, cur, out);
          cur.pop_back();
        }
      };
  std::vector<std::vector<std::uint64_t>> groups = {{}};
  for (auto [p, a] : factorize(order)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(a, a, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& g : groups) {
      for (const auto& lambda : parts) {
        // Largest factors first while combining, reversed at the end.
        std::vector<std::uint64_t> merged(std::max(g.size(), lambda.size()), 1);
        for (std::size_t i = 0; i < g.size(); ++i) merged[i] *= g[i];
        for (std::size_t i = 0; i < lambda.size(); ++i)
          for (unsigned e = 0; e < lambda[i]; ++e) merged[i] *= p;
        next.push_back(std::move(merged));
      }
    }
    groups = std::move(next);
  }
  for (auto& g : groups) std::reverse(g.begin(), g.end());
  std::sort(groups.begin(), groups.end());
  return groups;
}

std::vector<GroupSpec> builtin_corpus(std::uint64_t max_order) {
  if (max_order == 0) throw std::invalid_argument("max_order must be at least 1");
  std::vector<std::pair<std::uint64_t, GroupSpec>> out;
  for (std::uint64_t n = 1; n <= max_order; ++n)
    for (const auto& factors : abelian_invariant_factors(n)) out.emplace_back(n, abelian_group(factors));

  std::vector<std::pair<std::uint64_t, GroupSpec>> nonabelian;
  for (std::uint64_t n = 4; 2 * n <= max_order; ++n) nonabelian.emplace_back(2 * n, dihedral_group(n));
  for (std::uint64_t n = 2; 4 * n <= max_order; ++n) nonabelian.emplace_back(4 * n, dicyclic_group(n));
  for (std::uint64_t n = 3, f = 6; n <= 6 && f <= max_order; ++n, f *= n) nonabelian.emplace_back(f, symmetric_group(n));
  for (std::uint64_t n = 4, f = 12; n <= 6 && f <= max_order; ++n, f *= n) nonabelian.emplace_back(f, alternating_group(n));
  out.insert(out.end(), nonabelian.begin(), nonabelian.end());

  for (const auto& [order, g] : nonabelian)
    for (std::uint64_t m = 2; order * m <= max_order; ++m) out.emplace_back(order * m, direct_product(g, cyclic_group(m)));
  for (std::size_t i = 0; i < nonabelian.size(); ++i)
    for (std::size_t j = i; j < nonabelian.size(); ++j)
      if (nonabelian[i].first * nonabelian[j].first <= max_order)
        out.emplace_back(nonabelian[i].first * nonabelian[j].first,
                         direct_product(nonabelian[i].second, nonabelian[j].second));

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second.name) < std::tie(y.first, y.second.name);
  });
  std::vector<GroupSpec> specs;
  specs.reserve(out.size());
  for (auto& [order, spec] : out) specs.push_back(std::move(spec));
  return specs;
}

// --- group files -------------------------------------------------------

namespace {

[[noreturn]] void field_error(std::string_view origin, const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, std::string(origin) + ": field '" + field + "': " + what);
}

std::uint64_t require_uint(const json& obj, const std::string& key, std::string_view origin, const std::string& path) {
  if (!obj.contains(key)) field_error(origin, path + key, "missing");
  const json& v = obj.at(key);
  if (!v.is_number_unsigned()) field_error(origin, path + key, "expected a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text, std::string_view origin) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t byte = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte ? byte - 1 : 0), '\n');
    throw Error(ErrorCode::ParseError, std::string(origin) + ":" + std::to_string(line) + ": malformed JSON (" + e.what() + ")");
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, std::string(origin) + ": top level must be an object");

  GroupSpec spec;
  spec.source = SpecSource::File;
  if (!doc.contains("name")) field_error(origin, "name", "missing");
  if (!doc["name"].is_string() || doc["name"].get<std::string>().empty())
    field_error(origin, "name", "expected a non-empty string");
  spec.name = doc["name"].get<std::string>();
  if (doc.contains("source")) {
    if (!doc["source"].is_string()) field_error(origin, "source", "expected a string");
    spec.provenance = doc["source"].get<std::string>();
  }
  spec.degree = require_uint(doc, "degree", origin, "");
  if (spec.degree == 0) field_error(origin, "degree", "must be at least 1");

  if (!doc.contains("generators")) field_error(origin, "generators", "missing");
  if (!doc["generators"].is_array()) field_error(origin, "generators", "expected an array of integer arrays");
  const auto& gens = doc["generators"];
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string field = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_array()) field_error(origin, field, "expected an integer array");
    if (gens[i].size() != spec.degree)
      field_error(origin, field, "has length " + std::to_string(gens[i].size()) + ", degree is " + std::to_string(spec.degree));
    std::vector<Point> images;
    for (const auto& v : gens[i]) {
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= spec.degree)
        field_error(origin, field, "entries must be integers in [0, " + std::to_string(spec.degree) + ")");
      images.push_back(v.get<Point>());
    }
    try {
      spec.generators.emplace_back(std::move(images));
    } catch (const Error&) {
      field_error(origin, field, "is not a bijection");
    }
  }

  if (doc.contains("expected")) {
    const auto& e = doc["expected"];
    if (!e.is_object()) field_error(origin, "expected", "expected an object");
    ExpectedBlock block;
    block.order = require_uint(e, "order", origin, "expected.");
    block.h = require_uint(e, "h", origin, "expected.");
    block.f = require_uint(e, "f", origin, "expected.");
    block.cl_Q = require_uint(e, "cl_Q", origin, "expected.");
    block.irr_Q = require_uint(e, "irr_Q", origin, "expected.");
    spec.expected = block;
  }
  return spec;
}

GroupSpec ingest_group_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  GroupSpec spec = parse_group_spec(buffer.str(), path.string());
  spec.path = path.string();
  return spec;
}

std::vector<GroupSpec> ingest_directory(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) throw Error(ErrorCode::ParseError, dir.string() + ": not a directory");
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<GroupSpec> specs;
  for (const auto& f : files) specs.push_back(ingest_group_file(f));
  return specs;
}

std::string serialize_group_spec(const GroupSpec& spec) {
  json doc;
  doc["name"] = spec.name;
  doc["source"] = spec.provenance;
  doc["degree"] = spec.degree;
  doc["generators"] = json::array();
  for (const auto& g : spec.generators) doc["generators"].push_back(std::vector<Point>(g.images().begin(), g.images().end()));
  if (spec.expected) {
    const auto& e = *spec.expected;
    doc["expected"] = {{"order", e.order}, {"h", e.h}, {"f", e.f}, {"cl_Q", e.cl_Q}, {"irr_Q", e.irr_Q}};
  }
  return doc.dump();
}

std::string spec_hash(const GroupSpec& spec) {
  const std::string text = serialize_group_spec(spec);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &length, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < length; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

}  // namespace fov
