#include <doctest.h>

#include <algorithm>
#include <random>

#include "malcolmson/errors.hpp"
#include "malcolmson/normal_form.hpp"

using namespace malcolmson;

namespace {

Matrix lit(const Ring& ring, std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const char* e : r) out.back().push_back(ring.parse_element(e));
  }
  return Matrix::from_rows(out);
}

Matrix random_invertible(const Ring& ring, std::size_t m, std::mt19937_64& rng) {
  for (;;) {
    Matrix u = random_matrix(ring, m, m, rng);
    if (is_invertible(ring, u)) return u;
  }
}

}  // namespace

TEST_CASE("diagonalize examples") {
  const Ring z8 = Ring::parse("Z/8");
  const auto zero = diagonalize(z8, zeros(z8, 3, 3));
  CHECK(zero.exponents.empty());
  CHECK(zero.zero_count == 3);
  CHECK(zero.left == identity(z8, 3));
  CHECK(zero.right == identity(z8, 3));

  const Matrix a = lit(z8, {{"2", "1"}, {"0", "4"}});
  const auto form = diagonalize(z8, a);
  CHECK(form.exponents == std::vector<int>{0});
  CHECK(form.zero_count == 1);
  CHECK(verify_factorization(z8, a, form));

  const Ring t = Ring::parse("F2[x]/x^3");
  const Matrix d = lit(t, {{"1", "0", "0"}, {"0", "x^2", "0"}, {"0", "0", "x"}});
  const auto df = diagonalize(t, d);
  CHECK(df.exponents == std::vector<int>{0, 1, 2});
  CHECK(df.zero_count == 0);
  CHECK(verify_factorization(t, d, df));

  CHECK_THROWS_AS(diagonalize(Ring::integers(), identity(Ring::integers(), 2)), PreconditionError);
  CHECK_THROWS_AS(diagonalize(Ring::parse("F2*F3"), identity(Ring::parse("F2*F3"), 2)), PreconditionError);
}

TEST_CASE("verify_factorization rejects tampering") {
  const Ring z8 = Ring::parse("Z/8");
  const DiagonalForm id{{0, 0}, 0, identity(z8, 2), identity(z8, 2)};
  CHECK(verify_factorization(z8, identity(z8, 2), id));

  const Matrix a = lit(z8, {{"2", "1"}, {"0", "4"}});
  auto form = diagonalize(z8, a);
  form.left = lit(z8, {{"2", "0"}, {"0", "1"}});
  CHECK_FALSE(verify_factorization(z8, a, form));

  auto wrong_exp = diagonalize(z8, a);
  wrong_exp.exponents = {1};
  CHECK_FALSE(verify_factorization(z8, a, wrong_exp));

  auto wrong_count = diagonalize(z8, a);
  wrong_count.zero_count = 0;
  CHECK_FALSE(verify_factorization(z8, a, wrong_count));
}

TEST_CASE("round trip on random matrices") {
  std::mt19937_64 rng(101);
  const std::vector<Ring> rings{Ring::parse("Z/4"), Ring::parse("Z/8"), Ring::parse("Z/9"), Ring::parse("Z/27"),
                                Ring::parse("F2[x]/x^3"), Ring::parse("F3[x]/x^2"), Ring::parse("F5[x]/x^4")};
  for (int trial = 0; trial < 1000; ++trial) {
    const Ring& ring = rings[static_cast<std::size_t>(trial) % rings.size()];
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const Matrix a = random_matrix(ring, r, c, rng);
    const auto form = diagonalize(ring, a);
    CHECK(verify_factorization(ring, a, form));
    CHECK(std::is_sorted(form.exponents.begin(), form.exponents.end()));
    CHECK(diagonalize(ring, a).exponents == form.exponents);
  }
}

TEST_CASE("invariant under invertible multiplication") {
  std::mt19937_64 rng(202);
  for (const char* spec : {"Z/4", "Z/8", "Z/9", "F2[x]/x^3"}) {
    const Ring ring = Ring::parse(spec);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
      const Matrix a = random_matrix(ring, r, c, rng);
      const Matrix b = mat_mul(ring, mat_mul(ring, random_invertible(ring, r, rng), a), random_invertible(ring, c, rng));
      const auto fa = diagonalize(ring, a), fb = diagonalize(ring, b);
      CHECK(fa.exponents == fb.exponents);
      CHECK(fa.zero_count == fb.zero_count);
    }
  }
}

TEST_CASE("least minor valuation is a prefix sum of exponents") {
  std::mt19937_64 rng(303);
  for (const char* spec : {"Z/8", "Z/9", "F2[x]/x^3", "Z/16"}) {
    const Ring ring = Ring::parse(spec);
    const int n = ring.nilpotency();
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      const Matrix a = random_matrix(ring, r, c, rng);
      const auto form = diagonalize(ring, a);
      for (std::size_t k = 1; k <= std::min(r, c); ++k) {
        int least = n;
        for (const auto& rows : combinations(r, k)) {
          for (const auto& cols : combinations(c, k)) least = std::min(least, ring.valuation(minor(ring, a, rows, cols)));
        }
        int expected = n;
        if (k <= form.exponents.size()) {
          int sum = 0;
          for (std::size_t i = 0; i < k; ++i) sum += form.exponents[i];
          expected = std::min(sum, n);
        }
        CHECK(least == expected);
      }
    }
  }
}
