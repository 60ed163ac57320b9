#pragma once

// Independent reference computations used only by the test suites.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <numeric>
#include <optional>
#include <vector>

#include "malcolmson/matrix.hpp"
#include "malcolmson/ring.hpp"

namespace oracle {

using malcolmson::Element;
using malcolmson::Matrix;
using malcolmson::Ring;

/// Leibniz formula: sum over all permutations with explicit inversion counting.
inline Element permutation_determinant(const Ring& ring, const Matrix& a) {
  std::vector<std::size_t> perm(a.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Element total = ring.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    }
    Element term = ring.one();
    for (std::size_t i = 0; i < perm.size(); ++i) term = ring.mul(term, a(i, perm[i]));
    total = inversions % 2 ? ring.sub(total, term) : ring.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Exists r in the (finite) ring with r * gen == x.
inline bool brute_ideal_member(const Ring& ring, const Element& x, const Element& gen) {
  for (const auto& r : ring.elements()) {
    if (ring.mul(r, gen) == x) return true;
  }
  return false;
}

}  // namespace oracle

namespace oracle {

/// Local class from the row space alone: the row space of a diagonal form is
/// a sum of copies of c^e R, and |c^t * rowspace| = p^(sum_e max(0, n - e - t)).
inline std::vector<std::int64_t> class_from_row_space(const Ring& ring, const Matrix& a) {
  const int n = ring.nilpotency();
  const auto elements = ring.elements();
  std::set<std::vector<std::string>> span{std::vector<std::string>(a.cols(), ring.format(ring.zero()))};
  std::vector<std::vector<Element>> vectors{std::vector<Element>(a.cols(), ring.zero())};
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::vector<std::vector<Element>> next_vectors;
    std::set<std::vector<std::string>> next;
    for (const auto& v : vectors) {
      for (const auto& s : elements) {
        std::vector<Element> w = v;
        std::vector<std::string> key;
        for (std::size_t c = 0; c < w.size(); ++c) {
          w[c] = ring.add(w[c], ring.mul(s, a(r, c)));
          key.push_back(ring.format(w[c]));
        }
        if (next.insert(key).second) next_vectors.push_back(w);
      }
    }
    vectors = std::move(next_vectors);
    span = std::move(next);
  }
  // log_p |c^t * rowspace| for t = 0..n
  std::vector<std::int64_t> logs;
  for (int t = 0; t <= n; ++t) {
    std::set<std::vector<std::string>> image;
    const Element ct = ring.pow(ring.uniformizer(), static_cast<unsigned>(t));
    for (const auto& v : vectors) {
      std::vector<std::string> key;
      for (const auto& x : v) key.push_back(ring.format(ring.mul(ct, x)));
      image.insert(key);
    }
    std::int64_t lg = 0;
    for (std::size_t size = 1; size < image.size(); size *= static_cast<std::size_t>(ring.prime())) ++lg;
    logs.push_back(lg);
  }
  // d_t = #{e : n - e > t}; count of exponent n - 1 - t is d_t - d_{t+1}.
  std::vector<std::int64_t> d;
  for (int t = 0; t < n; ++t) d.push_back(logs[static_cast<std::size_t>(t)] - logs[static_cast<std::size_t>(t) + 1]);
  d.push_back(0);
  std::vector<std::int64_t> counts(static_cast<std::size_t>(n), 0);
  for (int t = 0; t < n; ++t) {
    counts[static_cast<std::size_t>(n - 1 - t)] = d[static_cast<std::size_t>(t)] - d[static_cast<std::size_t>(t) + 1];
  }
  return counts;
}

/// Dimension of the row space of a matrix over a finite field, from the
/// number of distinct vectors in it.
inline std::int64_t rank_by_counting(const std::vector<std::vector<std::int64_t>>& rows, std::int64_t q,
                                     const std::function<std::int64_t(std::int64_t, std::int64_t)>& add,
                                     const std::function<std::int64_t(std::int64_t, std::int64_t)>& mul) {
  std::set<std::vector<std::int64_t>> span{std::vector<std::int64_t>(rows.at(0).size(), 0)};
  for (const auto& row : rows) {
    std::set<std::vector<std::int64_t>> next;
    for (const auto& v : span) {
      for (std::int64_t s = 0; s < q; ++s) {
        auto w = v;
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = add(w[i], mul(s, row[i]));
        next.insert(w);
      }
    }
    span = std::move(next);
  }
  std::int64_t dim = 0;
  for (std::size_t size = 1; size < span.size(); size *= static_cast<std::size_t>(q)) ++dim;
  return dim;
}

}  // namespace oracle

namespace oracle {

// Plain integer matrices over Z/q, used for F2 x F3 = Z/6 by the Chinese
// remainder theorem.
using IntMatrix = std::vector<std::vector<int>>;

inline int encode_column(const IntMatrix& a, std::size_t col, int q) {
  int code = 0;
  for (std::size_t r = a.size(); r-- > 0;) code = code * q + a[r][col];
  return code;
}

/// Bitmask of the columns of A, as vectors in (Z/q)^rows.
inline std::uint64_t column_mask(const IntMatrix& a, int q) {
  std::uint64_t mask = 0;
  for (std::size_t c = 0; c < a[0].size(); ++c) mask |= std::uint64_t{1} << encode_column(a, c, q);
  return mask;
}

/// For every C of shape rows x rows(B): the set {C * B * d : d} as a bitmask.
/// Distinct masks only, sorted. Needs q^rows <= 64.
inline std::vector<std::uint64_t> reachable_column_sets(const IntMatrix& b, std::size_t rows, int q) {
  const std::size_t br = b.size(), bc = b[0].size();
  std::size_t c_count = 1;
  for (std::size_t i = 0; i < rows * br; ++i) c_count *= static_cast<std::size_t>(q);
  std::size_t d_count = 1;
  for (std::size_t i = 0; i < bc; ++i) d_count *= static_cast<std::size_t>(q);
  std::set<std::uint64_t> masks;
  for (std::size_t code = 0; code < c_count; ++code) {
    IntMatrix c(rows, std::vector<int>(br));
    std::size_t rest = code;
    for (auto& row : c) {
      for (auto& x : row) {
        x = static_cast<int>(rest % static_cast<std::size_t>(q));
        rest /= static_cast<std::size_t>(q);
      }
    }
    IntMatrix cb(rows, std::vector<int>(bc, 0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < br; ++k) {
        for (std::size_t j = 0; j < bc; ++j) cb[i][j] = (cb[i][j] + c[i][k] * b[k][j]) % q;
      }
    }
    std::uint64_t mask = 0;
    for (std::size_t dcode = 0; dcode < d_count; ++dcode) {
      std::vector<int> d(bc);
      std::size_t r2 = dcode;
      for (auto& x : d) {
        x = static_cast<int>(r2 % static_cast<std::size_t>(q));
        r2 /= static_cast<std::size_t>(q);
      }
      int v = 0;
      for (std::size_t i = rows; i-- > 0;) {
        int s = 0;
        for (std::size_t j = 0; j < bc; ++j) s = (s + cb[i][j] * d[j]) % q;
        v = v * q + s;
      }
      mask |= std::uint64_t{1} << v;
    }
    masks.insert(mask);
  }
  return {masks.begin(), masks.end()};
}

/// Exists C, D over Z/q with A = C * B * D: every column of A must be C*B*d for one C.
inline bool exists_cbd(const IntMatrix& a, const IntMatrix& b, int q) {
  const std::uint64_t need = column_mask(a, q);
  for (std::uint64_t m : reachable_column_sets(b, a.size(), q)) {
    if ((m & need) == need) return true;
  }
  return false;
}

/// All matrices over Z/q of the given shape.
inline std::vector<IntMatrix> all_int_matrices(std::size_t rows, std::size_t cols, int q) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < rows * cols; ++i) count *= static_cast<std::size_t>(q);
  std::vector<IntMatrix> out;
  for (std::size_t code = 0; code < count; ++code) {
    IntMatrix m(rows, std::vector<int>(cols));
    std::size_t rest = code;
    for (auto& row : m) {
      for (auto& x : row) {
        x = static_cast<int>(rest % static_cast<std::size_t>(q));
        rest /= static_cast<std::size_t>(q);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

inline Matrix to_ring_matrix(const Ring& ring, const IntMatrix& a) {
  std::vector<std::vector<Element>> rows;
  for (const auto& r : a) {
    rows.emplace_back();
    for (int x : r) rows.back().push_back(ring.from_integer(x));
  }
  return Matrix::from_rows(rows);
}

}  // namespace oracle
