#include "malcolmson/field_linalg.hpp"

#include "malcolmson/errors.hpp"

namespace malcolmson {

FieldMatrix field_zeros(const GaloisField& f, std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, std::vector<GaloisField::Value>(cols, f.zero()));
}

FieldMatrix field_identity(const GaloisField& f, std::size_t m) { return partial_identity(f, m, m, m); }

FieldMatrix partial_identity(const GaloisField& f, std::size_t rows, std::size_t cols, std::size_t r) {
  FieldMatrix out = field_zeros(f, rows, cols);
  for (std::size_t i = 0; i < r && i < rows && i < cols; ++i) out[i][i] = f.one();
  return out;
}

FieldMatrix field_mul(const GaloisField& f, const FieldMatrix& a, const FieldMatrix& b) {
  const std::size_t inner = b.size();
  if (a.empty() || a[0].size() != inner) throw PreconditionError("field_mul: shape mismatch");
  FieldMatrix out = field_zeros(f, a.size(), b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].empty()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] = f.add(out[i][j], f.mul(a[i][k], b[k][j]));
    }
  }
  return out;
}

RankFactorization rank_factorize(const GaloisField& f, const FieldMatrix& a) {
  const std::size_t rows = a.size(), cols = a.at(0).size();
  FieldMatrix w = a;
  RankFactorization out{0, field_identity(f, rows), field_identity(f, rows), field_identity(f, cols),
                        field_identity(f, cols)};
  // Invariant: left * w * right == a, left_inv * a * right_inv == w.
  auto row_op = [&](std::size_t dst, std::size_t src, const GaloisField::Value& s) {  // row dst += s * row src
    for (std::size_t c = 0; c < cols; ++c) w[dst][c] = f.add(w[dst][c], f.mul(s, w[src][c]));
    for (std::size_t c = 0; c < rows; ++c) out.left_inv[dst][c] = f.add(out.left_inv[dst][c], f.mul(s, out.left_inv[src][c]));
    for (std::size_t r = 0; r < rows; ++r) out.left[r][src] = f.sub(out.left[r][src], f.mul(s, out.left[r][dst]));
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const GaloisField::Value& s) {  // col dst += s * col src
    for (std::size_t r = 0; r < rows; ++r) w[r][dst] = f.add(w[r][dst], f.mul(s, w[r][src]));
    for (std::size_t r = 0; r < cols; ++r) out.right_inv[r][dst] = f.add(out.right_inv[r][dst], f.mul(s, out.right_inv[r][src]));
    for (std::size_t c = 0; c < cols; ++c) out.right[src][c] = f.sub(out.right[src][c], f.mul(s, out.right[dst][c]));
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(w[i], w[j]);
    std::swap(out.left_inv[i], out.left_inv[j]);
    for (std::size_t r = 0; r < rows; ++r) std::swap(out.left[r][i], out.left[r][j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap(w[r][i], w[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(out.right_inv[r][i], out.right_inv[r][j]);
    std::swap(out.right[i], out.right[j]);
  };
  auto scale_row = [&](std::size_t i, const GaloisField::Value& s) {
    const auto s_inv = f.inv(s);
    for (std::size_t c = 0; c < cols; ++c) w[i][c] = f.mul(s, w[i][c]);
    for (std::size_t c = 0; c < rows; ++c) out.left_inv[i][c] = f.mul(s, out.left_inv[i][c]);
    for (std::size_t r = 0; r < rows; ++r) out.left[r][i] = f.mul(out.left[r][i], s_inv);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows && pr == rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (!w[i][j].empty()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    swap_rows(t, pr);
    swap_cols(t, pc);
    scale_row(t, f.inv(w[t][t]));
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (!w[i][t].empty()) row_op(i, t, f.neg(w[i][t]));
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (!w[t][j].empty()) col_op(j, t, f.neg(w[t][j]));
    }
    ++out.rank;
  }
  return out;
}

std::size_t field_rank(const GaloisField& f, const FieldMatrix& a) { return rank_factorize(f, a).rank; }

FieldMatrix component_matrix(const Ring& ring, const Matrix& a, std::size_t i) {
  FieldMatrix out(a.rows(), std::vector<GaloisField::Value>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = ring.component(a(r, c), i);
  }
  return out;
}

Matrix assemble_components(const Ring& ring, const std::vector<FieldMatrix>& parts) {
  if (parts.size() != ring.component_count()) throw PreconditionError("assemble_components: component count");
  const std::size_t rows = parts[0].size(), cols = parts[0].at(0).size();
  Matrix out = zeros(ring, rows, cols);
  std::vector<GaloisField::Value> entry(parts.size());
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size() != rows || parts[i][r].size() != cols) {
          throw PreconditionError("assemble_components: shape mismatch");
        }
        entry[i] = parts[i][r][c];
      }
      out(r, c) = ring.from_components(entry);
    }
  }
  return out;
}

}  // namespace malcolmson
