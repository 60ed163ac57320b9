#include <doctest.h>

#include <random>

#include "malcolmson/errors.hpp"
#include "malcolmson/modules.hpp"

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

Rational q(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Presentation random_presentation(const Ring& ring, std::mt19937_64& rng) {
  const std::size_t m = 1 + rng() % 3;
  return make_presentation(m, random_matrix(ring, 1 + rng() % 3, m, rng));
}

Matrix random_invertible(const Ring& ring, std::size_t m, std::mt19937_64& rng) {
  for (;;) {
    Matrix u = random_matrix(ring, m, m, rng);
    if (is_invertible(ring, u)) return u;
  }
}

}  // namespace

TEST_CASE("presentations") {
  const Ring z8 = Ring::parse("Z/8");
  CHECK_THROWS_AS(make_presentation(2, lit(z8, {{"1"}})), PreconditionError);
  CHECK_THROWS_AS(make_presentation(0, lit(z8, {{"1"}})), PreconditionError);
  CHECK(free_presentation(z8, 3).relations == zeros(z8, 1, 3));
}

TEST_CASE("dim examples") {
  const Ring z8 = Ring::parse("Z/8");
  const Presentation p = make_presentation(1, lit(z8, {{"2"}}));
  CHECK(dim(z8, 1, p) == 1);
  CHECK(dim(z8, 2, p) == q(1, 2));
  CHECK(dim(z8, 3, p) == q(1, 3));
  for (int k = 1; k <= 3; ++k) {
    CHECK(dim(z8, k, free_presentation(z8, 2)) == 2);
    CHECK(dim(z8, k, make_presentation(1, lit(z8, {{"1"}}))) == 0);
  }
  CHECK_THROWS_AS(dim(z8, 4, p), PreconditionError);
  CHECK_THROWS_AS(dim(Ring::parse("F2*F3"), 1, free_presentation(Ring::parse("F2*F3"), 1)), PreconditionError);
}

TEST_CASE("signature examples") {
  const Ring z8 = Ring::parse("Z/8");
  const auto s = signature(z8, make_presentation(2, lit(z8, {{"2", "0"}, {"0", "1"}})));
  CHECK(s.torsion == std::vector<std::int64_t>{1});
  CHECK(s.free_rank == 0);
  const auto fr = signature(z8, free_presentation(z8, 2));
  CHECK(fr.torsion.empty());
  CHECK(fr.free_rank == 2);
  CHECK(signature(z8, make_presentation(1, lit(z8, {{"4"}}))).torsion == std::vector<std::int64_t>{2});
  // A wide relation row leaves the extra generators free.
  const auto wide = signature(z8, make_presentation(3, lit(z8, {{"2", "4", "6"}})));
  CHECK(wide.torsion == std::vector<std::int64_t>{1});
  CHECK(wide.free_rank == 2);

  const Ring f = Ring::parse("F2*F3");
  const auto r = signature(f, make_presentation(2, lit(f, {{"(1,0)", "0"}})));
  CHECK(r.kind == MonoidKind::Regular);
  CHECK(r.multiplicities == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("equivalence examples") {
  const Ring z8 = Ring::parse("Z/8");
  const Presentation p = make_presentation(1, lit(z8, {{"2"}}));
  CHECK(presentations_equivalent(z8, p, make_presentation(2, lit(z8, {{"2", "0"}, {"0", "1"}}))));
  CHECK_FALSE(presentations_equivalent(z8, p, make_presentation(1, lit(z8, {{"4"}}))));
  CHECK(presentations_equivalent(z8, p, p));
}

TEST_CASE("phi and psi examples") {
  const Ring z8 = Ring::parse("Z/8");
  const GroupElement g = phi(z8, make_presentation(1, lit(z8, {{"2"}})));
  CHECK(g == GroupElement::of(MonoidElement::basis(3, 0), MonoidElement::basis(3, 1)));
  CHECK(psi(z8, identity(z8, 1)).diff == std::vector<std::int64_t>{1, 0, 0});
  const Ring f = Ring::parse("F2*F3");
  CHECK(psi(f, identity(f, 1)).diff == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("Phi and Psi are inverse and positive") {
  std::mt19937_64 rng(43);
  for (const char* spec : {"Z/8", "F2*F3", "Z/9", "F2[x]/x^3", "F4*F3"}) {
    const Ring ring = Ring::parse(spec);
    const std::size_t size = monoid_size(ring);
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix a = random_matrix(ring, 1 + rng() % 3, 1 + rng() % 3, rng);
      const GroupElement ga = GroupElement::of(class_of(ring, a), MonoidElement::zero(monoid_kind(ring), size));
      CHECK(phi_group(ring, psi(ring, a)) == ga);
      CHECK(psi_group(ring, ga) == psi(ring, a));

      const Presentation p = random_presentation(ring, rng);
      CHECK(psi_group(ring, phi(ring, p)) == module_class(ring, p));
      CHECK(phi_group(ring, module_class(ring, p)) == phi(ring, p));

      const Presentation p2 = random_presentation(ring, rng);
      const GroupElement diff = module_class(ring, p) + -module_class(ring, p2);
      CHECK(module_cone_member(diff) == cone_member(phi_group(ring, diff)));
      const Matrix b = random_matrix(ring, 1 + rng() % 3, 1 + rng() % 3, rng);
      const GroupElement mdiff = GroupElement::of(class_of(ring, a), class_of(ring, b));
      CHECK(cone_member(mdiff) == module_cone_member(psi_group(ring, mdiff)));
    }
  }
}

TEST_CASE("dim satisfies the module rank axioms") {
  std::mt19937_64 rng(47);
  for (const char* spec : {"Z/4", "Z/8", "Z/9", "F2[x]/x^3"}) {
    const Ring ring = Ring::parse(spec);
    const int n = ring.nilpotency();
    for (int k = 1; k <= n; ++k) {
      CHECK(dim(ring, k, make_presentation(1, identity(ring, 1))) == 0);
      CHECK(dim(ring, k, free_presentation(ring, 1)) == 1);
    }
    for (int trial = 0; trial < 500; ++trial) {
      const Presentation p = random_presentation(ring, rng), p2 = random_presentation(ring, rng);
      const Presentation sum = make_presentation(p.generators + p2.generators, block_diag(ring, p.relations, p2.relations));
      const Presentation quotient =
          make_presentation(p.generators, stack(ring, p.relations, random_matrix(ring, 1 + rng() % 2, p.generators, rng)));
      for (int k = 1; k <= n; ++k) {
        CHECK(dim(ring, k, sum) == dim(ring, k, p) + dim(ring, k, p2));
        CHECK(dim(ring, k, quotient) <= dim(ring, k, p));
        CHECK(dim(ring, k, p) >= 0);
        CHECK(dim(ring, k, p) <= static_cast<long>(p.generators));
        CHECK(rk(k, class_of(ring, p.relations)) ==
              Rational(static_cast<long>(p.generators)) - dim(ring, k, p));
      }
    }
  }
}

TEST_CASE("signature is invariant under presentation moves") {
  std::mt19937_64 rng(53);
  for (const char* spec : {"Z/8", "Z/9", "F2[x]/x^3", "F2*F3"}) {
    const Ring ring = Ring::parse(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const Presentation p = random_presentation(ring, rng);
      const ModuleSignature s = signature(ring, p);
      const Matrix mixed = mat_mul(ring, mat_mul(ring, random_invertible(ring, p.relations.rows(), rng), p.relations),
                                   random_invertible(ring, p.generators, rng));
      CHECK(signature(ring, make_presentation(p.generators, mixed)) == s);
      Element unit = ring.random_element(rng);
      while (!ring.is_unit(unit)) unit = ring.random_element(rng);
      const Matrix padded = block_diag(ring, p.relations, Matrix(1, 1, unit));
      CHECK(signature(ring, make_presentation(p.generators + 1, padded)) == s);
      const Matrix extra_row = stack(ring, p.relations, zeros(ring, 1, p.generators));
      CHECK(signature(ring, make_presentation(p.generators, extra_row)) == s);
    }
  }
}

TEST_CASE("module order over a product of fields") {
  const Ring f = Ring::parse("F2*F3");
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const Presentation p = random_presentation(f, rng);
    const Matrix more = stack(f, p.relations, random_matrix(f, 1, p.generators, rng));
    CHECK(module_leq(f, make_presentation(p.generators, more), p));
  }
  // multiplicities (1, 2) and (2, 1)
  const Presentation a = make_presentation(2, lit(f, {{"(1,0)", "0"}}));
  const Presentation b = make_presentation(2, lit(f, {{"(0,1)", "0"}}));
  CHECK(signature(f, a).multiplicities == std::vector<std::int64_t>{1, 2});
  CHECK(signature(f, b).multiplicities == std::vector<std::int64_t>{2, 1});
  CHECK_FALSE(module_leq(f, a, b));
  CHECK_FALSE(module_leq(f, b, a));
  CHECK_THROWS_AS(module_leq(Ring::parse("Z/8"), free_presentation(Ring::parse("Z/8"), 1),
                             free_presentation(Ring::parse("Z/8"), 1)),
                  PreconditionError);
}

TEST_CASE("row spaces carry the matrix order to the module order") {
  std::mt19937_64 rng(61);
  for (const char* spec : {"F2*F3", "F4*F5"}) {
    const Ring f = Ring::parse(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const Matrix a = random_matrix(f, 1 + rng() % 3, 1 + rng() % 3, rng);
      const Matrix b = random_matrix(f, 1 + rng() % 3, 1 + rng() % 3, rng);
      const Presentation ra = row_space_presentation(f, a), rb = row_space_presentation(f, b);
      CHECK(signature(f, ra).multiplicities == class_of(f, a).counts);
      CHECK(module_leq(f, ra, rb) == leq(class_of(f, a), class_of(f, b)));
    }
  }
}
