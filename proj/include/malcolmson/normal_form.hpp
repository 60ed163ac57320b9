#pragma once

#include <vector>

#include "malcolmson/matrix.hpp"
#include "malcolmson/ring.hpp"

namespace malcolmson {

/// A = left * D * right, where D carries c^exponents[i] at (i, i) for
/// i < exponents.size() and zeros everywhere else.
struct DiagonalForm {
  std::vector<int> exponents;  // ascending, each in [0, n-1]
  std::size_t zero_count = 0;  // min(rows, cols) - exponents.size()
  Matrix left;
  Matrix right;
};

/// The diagonal matrix D of a form, shaped rows x cols.
Matrix diagonal_part(const Ring& ring, const DiagonalForm& form, std::size_t rows, std::size_t cols);

/// Pivoting on the entry of least valuation (first in row-major order),
/// using only swaps, unit scalings and transvections. Local families only.
DiagonalForm diagonalize(const Ring& ring, const Matrix& a);

bool verify_factorization(const Ring& ring, const Matrix& a, const DiagonalForm& form);

}  // namespace malcolmson
