#include "fov/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "fov/error.hpp"
#include "fov/zmod.hpp"

namespace fov {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact division of a by a monic b.
IntPoly divide_monic(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

const IntPoly& cyclotomic_polynomial_locked(std::uint64_t n) {
  static std::map<std::uint64_t, IntPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  IntPoly poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) continue;
    poly = divide_monic(std::move(poly), cyclotomic_polynomial_locked(d));
  }
  return cache.emplace(n, std::move(poly)).first->second;
}

void check_modulus(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic modulus must be positive");
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n) {
  check_modulus(n);
  std::lock_guard lock(cache_mutex());
  return cyclotomic_polynomial_locked(n);
}

std::shared_ptr<const PowerReduction> power_reduction(std::uint64_t n) {
  check_modulus(n);
  static std::mutex m;
  static std::map<std::uint64_t, std::shared_ptr<const PowerReduction>> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  const IntPoly& phi_poly = cyclotomic_polynomial(n);
  auto table = std::make_shared<PowerReduction>();
  table->modulus = n;
  table->phi = phi_poly.size() - 1;
  const std::size_t phi = table->phi;
  std::vector<std::int64_t> v(phi, 0);
  v[0] = 1;
  table->images.resize(n);
  for (std::uint64_t u = 0; u < n; ++u) {
    auto& img = table->images[u];
    for (std::uint32_t i = 0; i < phi; ++i)
      if (v[i] != 0) img.push_back({i, v[i]});
    // v <- x * v mod Phi_n
    const std::int64_t top = v[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < phi; ++i) v[i] -= top * phi_poly[i];
  }
  std::lock_guard lock(m);
  return cache.emplace(n, std::move(table)).first->second;
}

// --- Cyclotomic -----------------------------------------------------------

Cyclotomic::Cyclotomic(std::uint64_t n) : modulus_(n) { check_modulus(n); }

Cyclotomic Cyclotomic::rational(std::uint64_t n, const Rational& value) {
  Cyclotomic x(n);
  if (value != 0) x.terms_.push_back({0, value});
  return x;
}

Cyclotomic Cyclotomic::root_of_unity(std::uint64_t n, std::int64_t k) {
  check_modulus(n);
  const auto sn = static_cast<std::int64_t>(n);
  const auto u = static_cast<std::uint64_t>(((k % sn) + sn) % sn);
  const auto table = power_reduction(n);
  Cyclotomic x(n);
  for (const auto& [index, coeff] : table->images[u]) x.terms_.push_back({index, Rational(coeff)});
  return x;
}

Cyclotomic Cyclotomic::from_exponent_counts(std::uint64_t n, std::span<const std::int64_t> counts) {
  check_modulus(n);
  if (counts.size() != n) throw std::invalid_argument("exponent count vector must have length n");
  const auto table = power_reduction(n);
  std::vector<std::int64_t> dense(table->phi, 0);
  for (std::uint64_t u = 0; u < n; ++u) {
    if (counts[u] == 0) continue;
    for (const auto& [index, coeff] : table->images[u]) dense[index] += counts[u] * coeff;
  }
  Cyclotomic x(n);
  for (std::uint32_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) x.terms_.push_back({i, Rational(dense[i])});
  return x;
}

Cyclotomic Cyclotomic::from_dense(std::uint64_t n, std::vector<Rational> dense) {
  Cyclotomic x(n);
  for (std::uint32_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) x.terms_.push_back({i, std::move(dense[i])});
  return x;
}

std::optional<Cyclotomic> Cyclotomic::from_dense(std::uint64_t n, const std::vector<__int128>& dense) {
  Cyclotomic x(n);
  for (std::uint32_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == 0) continue;
    if (dense[i] > INT64_MAX || dense[i] < -INT64_MAX) return std::nullopt;
    x.terms_.push_back({i, Rational(static_cast<std::int64_t>(dense[i]))});
  }
  return x;
}

std::optional<std::vector<Cyclotomic::IntTerm>> Cyclotomic::integer_terms() const {
  constexpr std::int64_t kLimit = std::int64_t{1} << 40;
  std::vector<IntTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (boost::multiprecision::denominator(t.coeff) != 1) return std::nullopt;
    const auto& num = boost::multiprecision::numerator(t.coeff);
    if (num >= kLimit || num <= -kLimit) return std::nullopt;
    out.push_back({t.power, static_cast<std::int64_t>(num)});
  }
  return out;
}

bool Cyclotomic::is_rational() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].power == 0); }

std::optional<Rational> Cyclotomic::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Cyclotomic Cyclotomic::embed(std::uint64_t m) const {
  if (m == 0 || m % modulus_ != 0) throw Error(ErrorCode::ModulusMismatch, "embedding target is not a multiple");
  if (m == modulus_) return *this;
  const auto table = power_reduction(m);
  const std::uint64_t step = m / modulus_;
  std::vector<Rational> dense(table->phi);
  for (const auto& t : terms_)
    for (const auto& [index, coeff] : table->images[t.power * step]) dense[index] += t.coeff * coeff;
  return from_dense(m, std::move(dense));
}

std::string Cyclotomic::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [power, coeff] : terms_) {
    std::string piece;
    if (power == 0) {
      piece = coeff.str();
    } else {
      if (coeff == 1) {
        piece = "";
      } else if (coeff == -1) {
        piece = "-";
      } else {
        piece = coeff.str() + "*";
      }
      piece += "E(" + std::to_string(modulus_) + ")";
      if (power > 1) piece += "^" + std::to_string(power);
    }
    if (!first && piece.front() != '-') os << '+';
    os << piece;
    first = false;
  }
  return os.str();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic x = *this;
  for (auto& t : x.terms_) t.coeff = -t.coeff;
  return x;
}

namespace {

std::uint64_t common_modulus(std::uint64_t a, std::uint64_t b) {
  if (a == b || b == 1) return a;
  if (a == 1) return b;
  throw Error(ErrorCode::ModulusMismatch,
              "Q_" + std::to_string(a) + " and Q_" + std::to_string(b) + " values must be embedded first");
}

}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  const std::uint64_t n = common_modulus(modulus_, other.modulus_);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->power < b->power)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->power < a->power) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->coeff + b->coeff;
      if (sum != 0) merged.push_back({a->power, std::move(sum)});
      ++a;
      ++b;
    }
  }
  modulus_ = n;
  terms_ = std::move(merged);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this += -other; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  const std::uint64_t n = common_modulus(a.modulus_, b.modulus_);
  if (a.is_zero() || b.is_zero()) return Cyclotomic(n);
  const auto table = power_reduction(n);
  if (auto ia = a.integer_terms(), ib = b.integer_terms(); ia && ib) {
    std::vector<__int128> dense(table->phi, 0);
    for (const auto& x : *ia) {
      for (const auto& y : *ib) {
        const __int128 prod = static_cast<__int128>(x.coeff) * y.coeff;
        for (const auto& [index, coeff] : table->images[(x.power + y.power) % n]) dense[index] += prod * coeff;
      }
    }
    if (auto out = Cyclotomic::from_dense(n, dense)) return std::move(*out);
  }
  std::vector<Rational> dense(table->phi);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const Rational prod = x.coeff * y.coeff;
      for (const auto& [index, coeff] : table->images[(x.power + y.power) % n]) dense[index] += prod * coeff;
    }
  }
  return Cyclotomic::from_dense(n, std::move(dense));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) { return *this = *this * other; }

Cyclotomic& Cyclotomic::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= scalar;
  return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.modulus_ == b.modulus_ && a.terms_ == b.terms_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].power <=> b.terms_[i].power; c != 0) return c;
    if (a.terms_[i].coeff < b.terms_[i].coeff) return std::strong_ordering::less;
    if (b.terms_[i].coeff < a.terms_[i].coeff) return std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t r) {
  const std::uint64_t n = x.modulus_;
  const auto sn = static_cast<std::int64_t>(n);
  const auto ur = static_cast<std::uint64_t>(((r % sn) + sn) % sn);
  if (gcd(ur, n) != 1) {
    throw Error(ErrorCode::NonCoprime, std::to_string(r) + " is not a unit mod " + std::to_string(n));
  }
  if (ur == 1 % n || x.is_rational()) return x;
  const auto table = power_reduction(n);
  if (auto ix = x.integer_terms()) {
    std::vector<__int128> dense(table->phi, 0);
    for (const auto& t : *ix)
      for (const auto& [index, coeff] : table->images[(t.power * ur) % n])
        dense[index] += static_cast<__int128>(t.coeff) * coeff;
    if (auto out = Cyclotomic::from_dense(n, dense)) return std::move(*out);
  }
  std::vector<Rational> dense(table->phi);
  for (const auto& t : x.terms_)
    for (const auto& [index, coeff] : table->images[(t.power * ur) % n]) dense[index] += t.coeff * coeff;
  return Cyclotomic::from_dense(n, std::move(dense));
}

}  // namespace fov
