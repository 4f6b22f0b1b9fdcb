#pragma once

// Dense linear algebra over F_p for small primes (p < 2^32).

#include <cstdint>
#include <vector>

namespace fov::modp {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint64_t> data_;
};

Matrix multiply(const Matrix& a, const Matrix& b, std::uint64_t p);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& a, std::uint64_t p);

/// Columns form a basis of { x : a x = 0 }.
Matrix nullspace(Matrix a, std::uint64_t p);

/// Column basis of the same span such that the rows listed in `pivots`
/// form an identity block.
struct EchelonBasis {
  Matrix basis;
  std::vector<std::size_t> pivots;
};
EchelonBasis column_echelon(const Matrix& b, std::uint64_t p);

/// det(x I - a), lowest degree first, via Hessenberg reduction.
std::vector<std::uint64_t> charpoly(Matrix a, std::uint64_t p);

/// Distinct roots in [0, p), increasing.
std::vector<std::uint64_t> roots(const std::vector<std::uint64_t>& poly, std::uint64_t p);

}  // namespace fov::modp
