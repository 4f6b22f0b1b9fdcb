#include "fov/modp.hpp"

#include <utility>

#include "fov/zmod.hpp"

namespace fov::modp {

namespace {

std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b, std::uint64_t p) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const std::uint64_t x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + x * b(l, j)) % p;
    }
  }
  return c;
}

std::vector<std::size_t> row_reduce(Matrix& a, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows() && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(row, j));
    const std::uint64_t inv = inverse_mod(a(row, col), p);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = a(row, j) * inv % p;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      const std::uint64_t f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = sub(a(i, j), f * a(row, j) % p, p);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Matrix nullspace(Matrix a, std::uint64_t p) {
  const auto pivots = row_reduce(a, p);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(free[f], f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], f) = sub(0, a(r, free[f]), p);
  }
  return basis;
}

EchelonBasis column_echelon(const Matrix& b, std::uint64_t p) {
  Matrix t(b.cols(), b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) t(j, i) = b(i, j);
  auto pivots = row_reduce(t, p);
  Matrix basis(b.rows(), pivots.size());
  for (std::size_t j = 0; j < pivots.size(); ++j)
    for (std::size_t i = 0; i < b.rows(); ++i) basis(i, j) = t(j, i);
  return {std::move(basis), std::move(pivots)};
}

std::vector<std::uint64_t> charpoly(Matrix h, std::uint64_t p) {
  const std::size_t n = h.rows();
  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    const std::uint64_t t_inv = inverse_mod(h(m, m - 1), p);
    for (i = m + 1; i < n; ++i) {
      const std::uint64_t u = h(i, m - 1) * t_inv % p;
      if (u == 0) continue;
      for (std::size_t j = 0; j < n; ++j) h(i, j) = sub(h(i, j), u * h(m, j) % p, p);
      for (std::size_t j = 0; j < n; ++j) h(j, m) = (h(j, m) + u * h(j, i)) % p;
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1..m} h_{j,j-1}) p_{i-1}
  std::vector<std::vector<std::uint64_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    const auto& prev = polys[m - 1];
    std::vector<std::uint64_t> cur(m + 1, 0);
    for (std::size_t d = 0; d < prev.size(); ++d) {
      cur[d + 1] = (cur[d + 1] + prev[d]) % p;
      cur[d] = sub(cur[d], h(m - 1, m - 1) * prev[d] % p, p);
    }
    std::uint64_t t = 1;
    for (std::size_t i = m - 1; i >= 1; --i) {
      t = t * h(i, i - 1) % p;
      const std::uint64_t f = t * h(i - 1, m - 1) % p;
      if (f == 0) continue;
      for (std::size_t d = 0; d < polys[i - 1].size(); ++d) cur[d] = sub(cur[d], f * polys[i - 1][d] % p, p);
    }
    polys[m] = std::move(cur);
  }
  return polys[n];
}

std::vector<std::uint64_t> roots(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t d = poly.size(); d-- > 0;) acc = (acc * x + poly[d]) % p;
    if (acc == 0) out.push_back(x);
  }
  return out;
}

}  // namespace fov::modp
