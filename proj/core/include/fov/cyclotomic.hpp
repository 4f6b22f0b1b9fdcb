#pragma once

// Exact arithmetic in cyclotomic fields Q_n = Q(eps_n), eps_n = exp(2 pi i / n).
//
// Values are stored in the power basis {1, eps_n, ..., eps_n^(phi(n)-1)},
// i.e. as polynomials reduced modulo the n-th cyclotomic polynomial. Only
// non-zero coefficients are kept, so the representation is canonical and
// equality is structural.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fov {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Integer coefficients of Phi_n, lowest degree first (monic, length phi(n)+1).
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint64_t n);

/// Precomputed reductions of eps_n^u, 0 <= u < n, in the power basis.
struct PowerReduction {
  struct Entry {
    std::uint32_t index;
    std::int64_t coeff;
  };
  std::uint64_t modulus;
  std::uint64_t phi;
  std::vector<std::vector<Entry>> images;  // [u]
};

/// Shared per-modulus table; thread-safe.
std::shared_ptr<const PowerReduction> power_reduction(std::uint64_t n);

class Cyclotomic {
 public:
  struct Term {
    std::uint32_t power;
    Rational coeff;
    bool operator==(const Term&) const = default;
  };

  /// Zero of Q_1 = Q.
  Cyclotomic() = default;
  /// Zero of Q_n.
  explicit Cyclotomic(std::uint64_t n);

  static Cyclotomic rational(std::uint64_t n, const Rational& value);
  /// eps_n^k for any integer k.
  static Cyclotomic root_of_unity(std::uint64_t n, std::int64_t k);
  /// sum over t of counts[t] * eps_n^t, where counts has length n.
  static Cyclotomic from_exponent_counts(std::uint64_t n, std::span<const std::int64_t> counts);

  std::uint64_t modulus() const noexcept { return modulus_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  std::optional<Rational> as_rational() const;

  struct IntTerm {
    std::uint32_t power;
    std::int64_t coeff;
  };
  /// The terms as machine integers, when every coefficient is an integer of
  /// magnitude below 2^40 (always the case for character values).
  std::optional<std::vector<IntTerm>> integer_terms() const;

  /// Same value viewed in Q_m; m must be a multiple of the modulus.
  Cyclotomic embed(std::uint64_t m) const;

  /// "c*E(n)^k" terms joined by signs in increasing k, "0" for zero.
  std::string to_string() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& scalar);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// Total order (modulus, then terms); no arithmetic meaning.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  friend Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t r);
  static Cyclotomic from_dense(std::uint64_t n, std::vector<Rational> dense);
  static std::optional<Cyclotomic> from_dense(std::uint64_t n, const std::vector<__int128>& dense);

  std::uint64_t modulus_ = 1;
  std::vector<Term> terms_;  // sorted by power, non-zero coefficients
};

/// Image of x under eps_n -> eps_n^r. Throws NonCoprime if gcd(r, n) != 1.
/// r = -1 gives complex conjugation.
Cyclotomic galois_apply(const Cyclotomic& x, std::int64_t r);

inline Cyclotomic complex_conjugate(const Cyclotomic& x) { return galois_apply(x, -1); }

}  // namespace fov
