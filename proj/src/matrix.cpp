#include "malcolmson/matrix.hpp"

#include <bit>
#include <string>

#include "malcolmson/errors.hpp"

namespace malcolmson {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw PreconditionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, const Element& fill) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw PreconditionError("matrices must have at least one row and one column");
  data_.assign(rows * cols, fill);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Element>>& rows) {
  if (rows.empty() || rows.front().empty()) throw PreconditionError("matrices must have at least one row and one column");
  Matrix m(rows.size(), rows.front().size(), Element{});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw PreconditionError("ragged matrix literal");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix zeros(const Ring& ring, std::size_t rows, std::size_t cols) { return Matrix(rows, cols, ring.zero()); }

Matrix identity(const Ring& ring, std::size_t m) {
  Matrix out = zeros(ring, m, m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = ring.one();
  return out;
}

Matrix diagonal(const Ring& ring, std::size_t rows, std::size_t cols, const std::vector<Element>& diag) {
  if (diag.size() > std::min(rows, cols)) throw PreconditionError("diagonal longer than the matrix");
  Matrix out = zeros(ring, rows, cols);
  for (std::size_t i = 0; i < diag.size(); ++i) out(i, i) = diag[i];
  return out;
}

Matrix mat_mul(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw PreconditionError("mat_mul: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                            std::to_string(b.rows()) + ")");
  }
  Matrix out = zeros(ring, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = ring.add(out(i, j), ring.mul(a(i, k), b(k, j)));
      }
    }
  }
  return out;
}

Matrix mat_add(const Ring& ring, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "mat_add");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = ring.add(a(i, j), b(i, j));
  }
  return out;
}

Matrix block_upper(const Ring& ring, const Matrix& a, const Matrix& c, const Matrix& b) {
  if (c.rows() != a.rows() || c.cols() != b.cols()) throw PreconditionError("block_upper: off-diagonal block has the wrong shape");
  Matrix out = zeros(ring, a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < c.cols(); ++j) out(i, a.cols() + j) = c(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
  }
  return out;
}

Matrix block_diag(const Ring& ring, const Matrix& a, const Matrix& b) {
  return block_upper(ring, a, zeros(ring, a.rows(), b.cols()), b);
}

Matrix stack(const Ring& ring, const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw PreconditionError("stack: column counts differ");
  Matrix out = zeros(ring, top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < top.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) out(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) out(top.rows() + i, j) = bottom(i, j);
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.cols(), a.rows(), a(0, 0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

Matrix submatrix(const Matrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.empty() || cols.empty()) throw PreconditionError("submatrix: empty index set");
  Matrix out(rows.size(), cols.size(), a(0, 0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= a.rows() || cols[j] >= a.cols()) throw PreconditionError("submatrix: index out of range");
      out(i, j) = a(rows[i], cols[j]);
    }
  }
  return out;
}

bool is_zero_matrix(const Ring& ring, const Matrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!ring.is_zero(a(i, j))) return false;
    }
  }
  return true;
}

Element determinant(const Ring& ring, const Matrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n > 20) throw PreconditionError("determinant: matrix too large for Laplace expansion");
  // partial[mask]: signed sum over injections of rows 0..|mask|-1 onto the columns in mask.
  std::vector<Element> partial(std::size_t{1} << n, ring.zero());
  partial[0] = ring.one();
  for (std::size_t mask = 0; mask + 1 < partial.size(); ++mask) {
    if (ring.is_zero(partial[mask])) continue;
    const auto row = static_cast<std::size_t>(std::popcount(mask));
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (ring.is_zero(a(row, j))) continue;
      Element term = ring.mul(partial[mask], a(row, j));
      // Each chosen column to the right of j is one inversion.
      if (std::popcount(mask >> (j + 1)) % 2 == 1) term = ring.neg(term);
      auto& slot = partial[mask | (std::size_t{1} << j)];
      slot = ring.add(slot, term);
    }
  }
  return partial.back();
}

Element minor(const Ring& ring, const Matrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  if (rows.size() != cols.size()) throw PreconditionError("minor: row and column index sets differ in size");
  if (rows.size() > std::min(a.rows(), a.cols())) throw PreconditionError("minor: order exceeds the matrix size");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i] == rows[j] || cols[i] == cols[j]) throw PreconditionError("minor: repeated index");
    }
  }
  return determinant(ring, submatrix(a, rows, cols));
}

bool minors_in_ideal(const Ring& ring, const Matrix& a, std::size_t k, const Element& gen) {
  if (k < 1 || k > std::min(a.rows(), a.cols())) {
    throw PreconditionError("minors_in_ideal: k = " + std::to_string(k) + " outside [1, min(rows, cols)]");
  }
  const auto row_sets = combinations(a.rows(), k);
  const auto col_sets = combinations(a.cols(), k);
  for (const auto& r : row_sets) {
    for (const auto& c : col_sets) {
      if (!ring.ideal_member(minor(ring, a, r, c), gen)) return false;
    }
  }
  return true;
}

bool is_invertible(const Ring& ring, const Matrix& a) {
  if (a.rows() != a.cols()) throw PreconditionError("is_invertible needs a square matrix");
  return ring.is_unit(determinant(ring, a));
}

Matrix random_matrix(const Ring& ring, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix out = zeros(ring, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = ring.random_element(rng);
  }
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace malcolmson
