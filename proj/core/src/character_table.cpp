#include "fov/character_table.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fov/error.hpp"
#include "fov/modp.hpp"
#include "fov/zmod.hpp"

namespace fov {

std::uint64_t next_dixon_prime(std::uint64_t e, std::uint64_t order, std::uint64_t after) {
  if (e == 0 || order == 0) throw std::invalid_argument("dixon_prime needs e, order >= 1");
  // p > 2 sqrt(order)  <=>  p^2 > 4 order
  std::uint64_t p = after + 1;
  p += (e + 1 - p % e) % e;  // first p = 1 (mod e) at or above after + 1
  for (;; p += e) {
    if (p * p > 4 * order && is_prime(p)) return p;
  }
}

std::uint64_t dixon_prime(std::uint64_t e, std::uint64_t order) { return next_dixon_prime(e, order, 0); }

namespace {

using modp::Matrix;

struct Eigenspace {
  Matrix basis;
  std::vector<std::size_t> pivots;
  std::size_t dim() const { return basis.cols(); }
};

// (M_j)_{i,l} = a(j, i, l): M_j w = omega(K_j) w for every central character.
Matrix class_matrix(const ClassMultiplicationCoefficients& a, ClassId j, std::uint64_t p) {
  const std::size_t k = a.class_count();
  Matrix m(k, k);
  for (ClassId i = 0; i < k; ++i)
    for (ClassId l = 0; l < k; ++l) m(i, l) = a(j, i, l) % p;
  return m;
}

std::vector<Eigenspace> split(const Eigenspace& space, const Matrix& m, std::uint64_t p) {
  const std::size_t d = space.dim();
  const Matrix image = modp::multiply(m, space.basis, p);
  Matrix restricted(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) restricted(r, c) = image(space.pivots[r], c);
  if (modp::multiply(space.basis, restricted, p) != image) {
    throw Error(ErrorCode::EigenspaceSplitFailure, "subspace is not invariant under a class matrix");
  }
  std::vector<Eigenspace> parts;
  std::size_t total = 0;
  for (std::uint64_t lambda : modp::roots(modp::charpoly(restricted, p), p)) {
    Matrix shifted = restricted;
    for (std::size_t r = 0; r < d; ++r) shifted(r, r) = (shifted(r, r) + p - lambda) % p;
    const Matrix kernel = modp::nullspace(shifted, p);
    if (kernel.cols() == 0) continue;
    auto echelon = modp::column_echelon(modp::multiply(space.basis, kernel, p), p);
    total += echelon.basis.cols();
    parts.push_back({std::move(echelon.basis), std::move(echelon.pivots)});
  }
  if (total != d) {
    throw Error(ErrorCode::EigenspaceSplitFailure, "class matrix is not diagonalizable mod " + std::to_string(p));
  }
  return parts;
}

struct LiftedCharacter {
  std::uint64_t degree;
  std::vector<Cyclotomic> values;
  std::vector<std::string> rendered;
};

std::vector<LiftedCharacter> dixon_schneider(const ClassData& c, const ClassMultiplicationCoefficients& a,
                                             std::uint64_t p) {
  const std::size_t k = c.size();
  const std::uint64_t e = c.exponent;
  const std::uint64_t order = c.group_order;

  std::vector<Eigenspace> spaces = {{Matrix::identity(k), std::vector<std::size_t>(k)}};
  std::iota(spaces[0].pivots.begin(), spaces[0].pivots.end(), 0);
  for (ClassId j = 0; j < k; ++j) {
    if (std::all_of(spaces.begin(), spaces.end(), [](const Eigenspace& s) { return s.dim() == 1; })) break;
    const Matrix m = class_matrix(a, j, p);
    std::vector<Eigenspace> next;
    for (const auto& s : spaces) {
      if (s.dim() == 1) {
        next.push_back(s);
        continue;
      }
      for (auto& part : split(s, m, p)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  }
  if (spaces.size() != k) {
    throw Error(ErrorCode::EigenspaceSplitFailure, "common eigenspaces did not split into lines mod " + std::to_string(p));
  }

  const std::uint64_t z_e = pow_mod(smallest_primitive_root(p), (p - 1) / e, p);

  // Class i = pi_j(source[i]) with j a unit mod |g|: the eigenvalue
  // multiplicities of i are those of its source, reindexed by t -> t j.
  std::vector<ClassId> source(k, k);
  std::vector<std::uint64_t> twist(k, 1);
  for (ClassId i = 0; i < k; ++i) {
    if (source[i] != k) continue;
    const std::uint64_t n = c.classes[i].element_order;
    for (std::uint64_t j = 1; j <= n; ++j) {
      if (gcd(j, n) != 1) continue;
      const ClassId image = c.power_map(i, static_cast<std::int64_t>(j));
      if (source[image] == k) {
        source[image] = i;
        twist[image] = j % n;
      }
    }
  }

  std::vector<LiftedCharacter> out;
  for (const auto& s : spaces) {
    std::vector<std::uint64_t> omega(k);
    if (s.basis(0, 0) == 0) throw Error(ErrorCode::EigenspaceSplitFailure, "central character vanishes at 1");
    const std::uint64_t norm = inverse_mod(s.basis(0, 0), p);
    for (ClassId i = 0; i < k; ++i) omega[i] = s.basis(i, 0) * norm % p;

    // chi(1)^2 * sum_i omega_i omega_{i*} / |K_i| = |G|
    std::uint64_t sum = 0;
    for (ClassId i = 0; i < k; ++i) {
      const std::uint64_t term = omega[i] * omega[c.power_map(i, -1)] % p;
      sum = (sum + term * inverse_mod(c.classes[i].size() % p, p)) % p;
    }
    if (sum == 0) throw Error(ErrorCode::EigenspaceSplitFailure, "degenerate degree equation");
    const std::uint64_t target = order % p * inverse_mod(sum, p) % p;
    std::uint64_t degree = 0;
    for (std::uint64_t d = 1; d * d <= order; ++d) {
      if (d * d % p == target) {
        degree = d;
        break;
      }
    }
    if (degree == 0) throw Error(ErrorCode::LiftOutOfRange, "no admissible degree for a central character");

    std::vector<std::uint64_t> values(k);
    for (ClassId i = 0; i < k; ++i) {
      values[i] = degree % p * omega[i] % p * inverse_mod(c.classes[i].size() % p, p) % p;
    }

    std::vector<std::vector<std::int64_t>> source_counts(k);
    LiftedCharacter chi{degree, {}, {}};
    for (ClassId i = 0; i < k; ++i) {
      const std::uint64_t n = c.classes[i].element_order;
      if (source[i] != i) {
        const auto& from = source_counts[source[i]];
        std::vector<std::int64_t> counts(e, 0);
        for (std::uint64_t t = 0; t < n; ++t) counts[t * twist[i] % n * (e / n)] = from[t * (e / n)];
        chi.values.push_back(Cyclotomic::from_exponent_counts(e, counts));
        chi.rendered.push_back(chi.values.back().to_string());
        continue;
      }
      const std::uint64_t z_inv = inverse_mod(pow_mod(z_e, e / n, p), p);
      const std::uint64_t n_inv = inverse_mod(n % p, p);
      std::vector<std::uint64_t> along(n), z_pow(n);
      for (std::uint64_t l = 0, w = 1; l < n; ++l, w = w * z_inv % p) {
        along[l] = values[c.power_map(i, static_cast<std::int64_t>(l))];
        z_pow[l] = w;
      }
      std::vector<std::int64_t> counts(e, 0);
      std::uint64_t total = 0;
      for (std::uint64_t t = 0; t < n; ++t) {
        // m_t = (1/n) sum_l chi(g^l) z^{-t l}
        std::uint64_t raw = 0;
        for (std::uint64_t l = 0, idx = 0; l < n; ++l, idx = (idx + t) % n) {
          raw += along[l] * z_pow[idx];
          if (raw >= (std::uint64_t{1} << 63)) raw %= p;
        }
        const std::uint64_t acc = raw % p;
        const std::uint64_t mult = acc * n_inv % p;
        if (mult > degree) {
          throw Error(ErrorCode::LiftOutOfRange, "eigenvalue multiplicity " + std::to_string(mult) +
                                                     " exceeds degree " + std::to_string(degree));
        }
        counts[t * (e / n)] = static_cast<std::int64_t>(mult);
        total += mult;
      }
      if (total != degree) throw Error(ErrorCode::LiftOutOfRange, "multiplicities do not sum to the degree");
      chi.values.push_back(Cyclotomic::from_exponent_counts(e, counts));
      source_counts[i] = std::move(counts);
      chi.rendered.push_back(chi.values.back().to_string());
    }
    out.push_back(std::move(chi));
  }
  std::sort(out.begin(), out.end(), [](const LiftedCharacter& x, const LiftedCharacter& y) {
    if (x.degree != y.degree) return x.degree < y.degree;
    return x.rendered < y.rendered;
  });
  return out;
}

// acc += w * x * conj(y) in Z[X]/(X^n - 1); reduce_to_basis finishes the job.
void accumulate_hermitian(std::vector<Rational>& acc, const Cyclotomic& x, const Cyclotomic& y_conj, const Rational& w) {
  const std::size_t n = acc.size();
  for (const auto& a : x.terms())
    for (const auto& b : y_conj.terms()) acc[(a.power + b.power) % n] += w * a.coeff * b.coeff;
}

void accumulate_hermitian(std::vector<__int128>& acc, const std::vector<Cyclotomic::IntTerm>& x,
                          const std::vector<Cyclotomic::IntTerm>& y_conj, std::int64_t w) {
  const std::size_t n = acc.size();
  for (const auto& a : x)
    for (const auto& b : y_conj) acc[(a.power + b.power) % n] += static_cast<__int128>(w) * a.coeff * b.coeff;
}

template <typename T>
std::vector<T> reduce_to_basis(const std::vector<T>& acc, const PowerReduction& table) {
  std::vector<T> out(table.phi, T(0));
  for (std::size_t u = 0; u < acc.size(); ++u) {
    if (acc[u] == 0) continue;
    for (const auto& [index, coeff] : table.images[u]) out[index] += acc[u] * T(coeff);
  }
  return out;
}

bool equals_integer(const std::vector<__int128>& acc, std::uint64_t value) {
  if (acc.empty()) return value == 0;
  if (acc[0] != static_cast<__int128>(value)) return false;
  return std::all_of(acc.begin() + 1, acc.end(), [](__int128 q) { return q == 0; });
}

bool equals_integer(const std::vector<Rational>& acc, std::uint64_t value) {
  if (acc.empty()) return value == 0;
  if (acc[0] != Rational(value)) return false;
  return std::all_of(acc.begin() + 1, acc.end(), [](const Rational& q) { return q == 0; });
}

}  // namespace

CharacterTable character_table(const PermGroup& g, const ClassData& c) {
  return character_table(g, c, class_mult_coefficients(c, g));
}

CharacterTable character_table(const PermGroup& g, const ClassData& c, const ClassMultiplicationCoefficients& a) {
  constexpr int kMaxPrimeAttempts = 32;
  std::uint64_t p = dixon_prime(c.exponent, g.order());
  for (int attempt = 0;; ++attempt) {
    try {
      auto rows = dixon_schneider(c, a, p);
      CharacterTable t;
      t.modulus = c.exponent;
      t.prime = p;
      for (auto& row : rows) {
        t.degrees.push_back(row.degree);
        t.entries.push_back(std::move(row.values));
      }
      return t;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::EigenspaceSplitFailure || attempt + 1 == kMaxPrimeAttempts) throw;
      p = next_dixon_prime(c.exponent, g.order(), p);
    }
  }
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t, const ClassData& c) {
  OrthogonalityReport report;
  const std::size_t k = c.size();
  auto fail = [&](std::string msg) {
    report.passed = false;
    report.violations.push_back(std::move(msg));
  };
  if (t.size() != k || t.degrees.size() != k) {
    fail("table has " + std::to_string(t.size()) + " rows for " + std::to_string(k) + " classes");
    return report;
  }
  for (std::size_t r = 0; r < k; ++r) {
    if (t.entries[r].size() != k) {
      fail("row " + std::to_string(r) + " has wrong length");
      return report;
    }
  }
  const auto table = power_reduction(t.modulus);
  std::vector<std::vector<Cyclotomic>> conj(k, std::vector<Cyclotomic>(k));
  for (std::size_t r = 0; r < k; ++r)
    for (ClassId K = 0; K < k; ++K) conj[r][K] = complex_conjugate(t.entries[r][K]);

  std::uint64_t degree_squares = 0;
  for (std::size_t r = 0; r < k; ++r) {
    degree_squares += t.degrees[r] * t.degrees[r];
    if (t.entries[r][0] != Cyclotomic::rational(t.modulus, Rational(t.degrees[r]))) {
      fail("row " + std::to_string(r) + " value at the identity differs from its degree");
    }
  }
  if (degree_squares != c.group_order) {
    fail("sum of squared degrees " + std::to_string(degree_squares) + " != |G| = " + std::to_string(c.group_order));
  }

  // Character values are algebraic integers, so the relations are normally
  // checked in machine integers; anything else falls back to rationals.
  std::vector<std::vector<std::vector<Cyclotomic::IntTerm>>> ints(k), conj_ints(k);
  bool integral = true;
  for (std::size_t r = 0; r < k && integral; ++r) {
    for (ClassId K = 0; K < k && integral; ++K) {
      auto a = t.entries[r][K].integer_terms();
      auto b = conj[r][K].integer_terms();
      integral = a && b;
      if (integral) {
        ints[r].push_back(std::move(*a));
        conj_ints[r].push_back(std::move(*b));
      }
    }
  }

  auto row_sum = [&](std::size_t r, std::size_t s) {
    if (integral) {
      std::vector<__int128> acc(t.modulus, 0);
      for (ClassId K = 0; K < k; ++K) accumulate_hermitian(acc, ints[r][K], conj_ints[s][K], c.classes[K].size());
      return equals_integer(reduce_to_basis(acc, *table), r == s ? c.group_order : 0);
    }
    std::vector<Rational> acc(t.modulus);
    for (ClassId K = 0; K < k; ++K)
      accumulate_hermitian(acc, t.entries[r][K], conj[s][K], Rational(c.classes[K].size()));
    return equals_integer(reduce_to_basis(acc, *table), r == s ? c.group_order : 0);
  };
  auto column_sum = [&](ClassId K, ClassId L) {
    if (integral) {
      std::vector<__int128> acc(t.modulus, 0);
      for (std::size_t r = 0; r < k; ++r) accumulate_hermitian(acc, ints[r][K], conj_ints[r][L], 1);
      return equals_integer(reduce_to_basis(acc, *table), K == L ? c.centralizer_order(K) : 0);
    }
    std::vector<Rational> acc(t.modulus);
    for (std::size_t r = 0; r < k; ++r) accumulate_hermitian(acc, t.entries[r][K], conj[r][L], Rational(1));
    return equals_integer(reduce_to_basis(acc, *table), K == L ? c.centralizer_order(K) : 0);
  };

  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t s = r; s < k; ++s)
      if (!row_sum(r, s)) fail("row orthogonality fails for rows (" + std::to_string(r) + "," + std::to_string(s) + ")");
  for (ClassId K = 0; K < k; ++K)
    for (ClassId L = K; L < k; ++L)
      if (!column_sum(K, L))
        fail("column orthogonality fails for classes (" + std::to_string(K) + "," + std::to_string(L) + ")");
  return report;
}

std::string render_table(const CharacterTable& t, const ClassData& c, const PermGroup& g) {
  std::ostringstream os;
  os << "order=" << c.group_order << " exponent=" << c.exponent << " classes=" << c.size() << '\n';
  for (ClassId k = 0; k < c.size(); ++k) {
    const auto& cls = c.classes[k];
    os << "class " << k << ": " << g.element(cls.representative).cycle_string() << " size=" << cls.size()
       << " order=" << cls.element_order << '\n';
  }
  for (std::size_t r = 0; r < t.size(); ++r) {
    os << "chi " << r << ":";
    for (const auto& v : t.entries[r]) os << ' ' << v.to_string();
    os << '\n';
  }
  return os.str();
}

}  // namespace fov
