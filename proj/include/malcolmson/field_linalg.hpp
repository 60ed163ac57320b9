#pragma once

// Dense linear algebra over a single GaloisField, used per component of a
// product of fields.

#include <vector>

#include "malcolmson/galois_field.hpp"
#include "malcolmson/matrix.hpp"
#include "malcolmson/ring.hpp"

namespace malcolmson {

using FieldMatrix = std::vector<std::vector<GaloisField::Value>>;

FieldMatrix field_zeros(const GaloisField& f, std::size_t rows, std::size_t cols);
FieldMatrix field_identity(const GaloisField& f, std::size_t m);
/// rows x cols with ones on the first r diagonal positions.
FieldMatrix partial_identity(const GaloisField& f, std::size_t rows, std::size_t cols, std::size_t r);
FieldMatrix field_mul(const GaloisField& f, const FieldMatrix& a, const FieldMatrix& b);

/// A = left * J_r * right with left, right invertible; the inverses come along.
struct RankFactorization {
  std::size_t rank = 0;
  FieldMatrix left, left_inv;
  FieldMatrix right, right_inv;
};

RankFactorization rank_factorize(const GaloisField& f, const FieldMatrix& a);
std::size_t field_rank(const GaloisField& f, const FieldMatrix& a);

/// Component i of a matrix over a product of fields.
FieldMatrix component_matrix(const Ring& ring, const Matrix& a, std::size_t i);
/// Inverse of component_matrix over all components (shapes must agree).
Matrix assemble_components(const Ring& ring, const std::vector<FieldMatrix>& parts);

}  // namespace malcolmson
