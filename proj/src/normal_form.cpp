#include "malcolmson/normal_form.hpp"

#include <algorithm>

#include "malcolmson/errors.hpp"

namespace malcolmson {

namespace {

// Row/column operations on w, mirrored on left/right so that
// left * w * right stays equal to the input.
struct Workspace {
  const Ring& ring;
  Matrix w;
  Matrix left;
  Matrix right;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w(i, c), w(j, c));
    for (std::size_t r = 0; r < left.rows(); ++r) std::swap(left(r, i), left(r, j));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < w.rows(); ++r) std::swap(w(r, i), w(r, j));
    for (std::size_t c = 0; c < right.cols(); ++c) std::swap(right(i, c), right(j, c));
  }

  void scale_row(std::size_t i, const Element& u) {
    const Element u_inv = ring.unit_inverse(u);
    for (std::size_t c = 0; c < w.cols(); ++c) w(i, c) = ring.mul(u, w(i, c));
    for (std::size_t r = 0; r < left.rows(); ++r) left(r, i) = ring.mul(left(r, i), u_inv);
  }

  // row j -= s * row i
  void reduce_row(std::size_t j, std::size_t i, const Element& s) {
    for (std::size_t c = 0; c < w.cols(); ++c) w(j, c) = ring.sub(w(j, c), ring.mul(s, w(i, c)));
    for (std::size_t r = 0; r < left.rows(); ++r) left(r, i) = ring.add(left(r, i), ring.mul(s, left(r, j)));
  }

  // col j -= s * col i
  void reduce_col(std::size_t j, std::size_t i, const Element& s) {
    for (std::size_t r = 0; r < w.rows(); ++r) w(r, j) = ring.sub(w(r, j), ring.mul(s, w(r, i)));
    for (std::size_t c = 0; c < right.cols(); ++c) right(i, c) = ring.add(right(i, c), ring.mul(s, right(j, c)));
  }
};

}  // namespace

Matrix diagonal_part(const Ring& ring, const DiagonalForm& form, std::size_t rows, std::size_t cols) {
  std::vector<Element> diag;
  for (int e : form.exponents) diag.push_back(ring.pow(ring.uniformizer(), static_cast<unsigned>(e)));
  return diagonal(ring, rows, cols, diag);
}

DiagonalForm diagonalize(const Ring& ring, const Matrix& a) {
  if (!ring.is_local()) throw PreconditionError("diagonalize: ring " + ring.to_string() + " is not local");
  const int n = ring.nilpotency();
  Workspace ws{ring, a, identity(ring, a.rows()), identity(ring, a.cols())};
  const std::size_t limit = std::min(a.rows(), a.cols());
  DiagonalForm form{{}, 0, ws.left, ws.right};

  for (std::size_t t = 0; t < limit; ++t) {
    int best = n;
    std::size_t pr = t, pc = t;
    for (std::size_t i = t; i < a.rows() && best > 0; ++i) {
      for (std::size_t j = t; j < a.cols(); ++j) {
        const int v = ring.valuation(ws.w(i, j));
        if (v < best) {
          best = v;
          pr = i;
          pc = j;
          if (v == 0) break;
        }
      }
    }
    if (best == n) break;

    ws.swap_rows(t, pr);
    ws.swap_cols(t, pc);
    ws.scale_row(t, ring.unit_inverse(ring.local_form(ws.w(t, t))->unit));
    const Element pivot = ws.w(t, t);

    for (std::size_t i = t + 1; i < a.rows(); ++i) {
      if (ring.is_zero(ws.w(i, t))) continue;
      ws.reduce_row(i, t, *ring.divide(ws.w(i, t), pivot));
    }
    for (std::size_t j = t + 1; j < a.cols(); ++j) {
      if (ring.is_zero(ws.w(t, j))) continue;
      ws.reduce_col(j, t, *ring.divide(ws.w(t, j), pivot));
    }
    form.exponents.push_back(best);
  }

  form.zero_count = limit - form.exponents.size();
  form.left = std::move(ws.left);
  form.right = std::move(ws.right);
  return form;
}

bool verify_factorization(const Ring& ring, const Matrix& a, const DiagonalForm& form) {
  if (!ring.is_local()) return false;
  if (form.left.rows() != a.rows() || form.left.cols() != a.rows()) return false;
  if (form.right.rows() != a.cols() || form.right.cols() != a.cols()) return false;
  if (form.exponents.size() + form.zero_count != std::min(a.rows(), a.cols())) return false;
  for (int e : form.exponents) {
    if (e < 0 || e >= ring.nilpotency()) return false;
  }
  if (!is_invertible(ring, form.left) || !is_invertible(ring, form.right)) return false;
  const Matrix d = diagonal_part(ring, form, a.rows(), a.cols());
  return mat_mul(ring, mat_mul(ring, form.left, d), form.right) == a;
}

}  // namespace malcolmson
