#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "malcolmson/ring.hpp"

namespace malcolmson {

/// Dense rectangular matrix of ring elements. Both dimensions are >= 1.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Element& fill);
  /// Throws PreconditionError on ragged or empty input.
  static Matrix from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols);
Matrix identity(const Ring& ring, std::size_t m);
/// rows x cols matrix with the given diagonal entries, zeros elsewhere.
Matrix diagonal(const Ring& ring, std::size_t rows, std::size_t cols, const std::vector<Element>& diag);

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b);
Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b);
/// [[a, 0], [0, b]]
Matrix block_diag(const Ring& ring, const Matrix& a, const Matrix& b);
/// [[a, c], [0, b]]
Matrix block_upper(const Ring& ring, const Matrix& a, const Matrix& c, const Matrix& b);
/// a on top of b (same column count).
Matrix stack(const Ring& ring, const Matrix& top, const Matrix& bottom);
Matrix transpose(const Matrix& a);
Matrix submatrix(const Matrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);

bool is_zero_matrix(const Ring& ring, const Matrix& a);

/// Division-free Laplace expansion (row by row over column subsets).
Element determinant(const Ring& ring, const Matrix& a);
/// Determinant of the k x k submatrix on the given (distinct, in-range) indices.
Element minor(const Ring& ring, const Matrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols);
/// Every k x k minor of a lies in R * gen. Requires 1 <= k <= min(rows, cols).
bool minors_in_ideal(const Ring& ring, const Matrix& a, std::size_t k, const Element& gen);
/// Square with unit determinant (all supported rings are commutative).
bool is_invertible(const Ring& ring, const Matrix& a);

Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng);

/// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace malcolmson
