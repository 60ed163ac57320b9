#include <doctest.h>

#include <functional>
#include <random>

#include "malcolmson/errors.hpp"
#include "malcolmson/states.hpp"

using namespace malcolmson;

namespace {

MonoidElement local(std::vector<std::int64_t> counts) { return {MonoidKind::Local, std::move(counts)}; }
MonoidElement regular(std::vector<std::int64_t> counts) { return {MonoidKind::Regular, std::move(counts)}; }

std::vector<MonoidElement> all_elements(MonoidKind kind, std::size_t n, std::int64_t bound) {
  std::vector<MonoidElement> out;
  std::function<void(std::vector<std::int64_t>&, std::size_t, std::int64_t)> rec =
      [&](std::vector<std::int64_t>& c, std::size_t i, std::int64_t left) {
        if (i == n) {
          out.push_back({kind, c});
          return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
          c[i] = x;
          rec(c, i + 1, left - x);
        }
        c[i] = 0;
      };
  std::vector<std::int64_t> c(n, 0);
  rec(c, 0, bound);
  return out;
}

Rational q(long num, unsigned long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Matrix lit(const Ring& ring, std::vector<std::vector<const char*>> rows) {
  std::vector<std::vector<Element>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (const char* e : r) out.back().push_back(ring.parse_element(e));
  }
  return Matrix::from_rows(out);
}

const MonoidElement v3 = MonoidElement::basis(3, 0);

}  // namespace

TEST_CASE("group elements are canonical differences") {
  const auto all = all_elements(MonoidKind::Local, 2, 2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      for (const auto& c : all) {
        for (const auto& d : all) {
          CHECK((GroupElement::of(a, b) == GroupElement::of(c, d)) == (a + d == b + c));
        }
      }
    }
  }
}

TEST_CASE("cone membership examples") {
  CHECK(cone_member(GroupElement::of(local({1, 0, 0}), local({0, 1, 0}))));
  CHECK(cone_member(GroupElement::of(local({0, 2, 1}), local({0, 2, 1}))));
  CHECK_FALSE(cone_member(GroupElement::of(local({0, 1, 0}), local({1, 0, 0}))));
  auto w = cone_witness(GroupElement::of(local({1, 0, 1}), local({0, 2, 0})));
  REQUIRE(w);
  CHECK(w->c == local({0, 0, 0}));
  CHECK(verify_certificate(local({0, 2, 0}), local({1, 0, 1}), w->certificate));
  CHECK_FALSE(cone_witness(GroupElement::of(local({0, 1, 0}), local({1, 0, 0}))));
}

TEST_CASE("bounded search agrees with the direct decision") {
  const OrderOracle order = [](const MonoidElement& x, const MonoidElement& y) { return leq(x, y); };
  const auto all = all_elements(MonoidKind::Local, 3, 2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      const GroupElement g = GroupElement::of(a, b);
      const auto c = bounded_cone_member(g, order, 2);
      CHECK(c.has_value() == cone_member(g));
      if (c) CHECK(leq(g.negative_part() + *c, g.positive_part() + *c));
    }
  }
  // An order that is not cancellative needs a nonzero c.
  const OrderOracle coarse = [](const MonoidElement& x, const MonoidElement& y) {
    return x.norm() >= 2 ? x.norm() <= y.norm() : x == y || x.norm() == 0;
  };
  const GroupElement g = GroupElement::of(local({0, 1, 0}), local({1, 0, 0}));
  const auto c = bounded_cone_member(g, coarse, 3);
  REQUIRE(c);
  CHECK(c->norm() >= 1);
  CHECK_FALSE(bounded_cone_member(g, coarse, 0));
}

TEST_CASE("group axioms on Z/8") {
  std::vector<GroupElement> samples;
  const auto all = all_elements(MonoidKind::Local, 3, 3);
  for (const auto& a : all) {
    for (const auto& b : all) samples.push_back(GroupElement::of(a, b));
  }
  const GroupReport report = group_props_check(samples, v3, 12);
  CHECK(report.ok());
  CHECK(report.failures.empty());
  CHECK(report.cone_size > 0);

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& g = samples[rng() % samples.size()];
    const auto& h = samples[rng() % samples.size()];
    if (cone_member(g) && cone_member(h)) CHECK(cone_member(g + h));
  }
  CHECK(cone_member(GroupElement::of(v3, local({0, 0, 1}))));
}

TEST_CASE("state_range examples") {
  const StateRange r = state_range(local({0, 1, 0}), v3, 6, 6);
  CHECK(r.p_lb == 0);
  REQUIRE(r.q_ub);
  CHECK(*r.q_ub == q(2, 3));
  CHECK(r.p_witness == std::vector<std::int64_t>{1, 1, 1});
  CHECK(r.q_witness == std::vector<std::int64_t>{2, 0, 3});
  REQUIRE(r.exact);
  CHECK((*r.exact)[0] == 0);
  CHECK((*r.exact)[1] == q(2, 3));

  const StateRange unit = state_range(v3, v3, 6, 6);
  CHECK(unit.p_lb == 1);
  CHECK(*unit.q_ub == 1);
  CHECK((*unit.exact)[0] == 1);
  CHECK((*unit.exact)[1] == 1);

  const StateRange zero = state_range(local({0, 0, 0}), v3, 6, 6);
  CHECK(zero.p_lb == 0);
  CHECK(*zero.q_ub == 0);
  CHECK((*zero.exact)[0] == 0);
  CHECK((*zero.exact)[1] == 0);

  CHECK_THROWS_AS(state_range(v3, local({0, 0, 0}), 6, 6), PreconditionError);
  CHECK_THROWS_AS(state_range(v3, v3, 0, 6), PreconditionError);
}

TEST_CASE("state ranges refine monotonically and converge") {
  for (std::size_t n : {2u, 3u}) {
    const MonoidElement v = MonoidElement::basis(n, 0);
    for (const auto& a : all_elements(MonoidKind::Local, n, 3)) {
      std::optional<StateRange> previous;
      for (std::int64_t bound = 4; bound <= 12; bound += 4) {
        const StateRange r = state_range(a, v, bound, bound);
        REQUIRE(r.exact);
        CHECK(r.p_lb <= (*r.exact)[0]);
        if (r.q_ub) CHECK(*r.q_ub >= (*r.exact)[1]);
        if (previous) {
          CHECK(r.p_lb >= previous->p_lb);
          if (previous->q_ub) CHECK(*r.q_ub <= *previous->q_ub);
        }
        previous = r;
      }
      CHECK(previous->p_lb == (*previous->exact)[0]);
      REQUIRE(previous->q_ub);
      CHECK(*previous->q_ub == (*previous->exact)[1]);
    }
  }
}

TEST_CASE("convex combinations of rk_k stay inside the range") {
  std::mt19937_64 rng(37);
  const auto all = all_elements(MonoidKind::Local, 3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& a = all[rng() % all.size()];
    const StateRange r = state_range(a, v3, 12, 12);
    std::array<long, 3> w{static_cast<long>(rng() % 10), static_cast<long>(rng() % 10), static_cast<long>(rng() % 10) + 1};
    Rational value = 0;
    for (int k = 1; k <= 3; ++k) value += Rational(w[static_cast<std::size_t>(k - 1)]) * rk(k, a);
    value /= Rational(w[0] + w[1] + w[2]);
    CHECK(value >= r.p_lb);
    CHECK(value <= *r.q_ub);
  }
}

TEST_CASE("regular state ranges") {
  const MonoidElement v{MonoidKind::Regular, {1, 1}};
  const StateRange r = state_range(regular({1, 2}), v, 12, 12);
  CHECK(r.p_lb == 1);
  CHECK(*r.q_ub == 2);
  CHECK((*r.exact)[0] == 1);
  CHECK((*r.exact)[1] == 2);
}

TEST_CASE("state_extension") {
  SUBCASE("the unit alone reduces to state_range") {
    const StateSpec spec{{v3}, {1}};
    for (const auto& a : all_elements(MonoidKind::Local, 3, 2)) {
      const StateRange ext = state_extension(spec, a, v3, {12, 12, false});
      const StateRange range = state_range(a, v3, 12, 12);
      CHECK(ext.p_lb == range.p_lb);
      CHECK(*ext.q_ub == *range.q_ub);
    }
  }
  SUBCASE("two generators over Z/8") {
    const StateSpec spec{{v3, local({0, 0, 1})}, {1, 0}};
    const StateRange r = state_extension(spec, local({0, 1, 0}), v3, {12, 6, false});
    CHECK(r.p_lb == 0);
    REQUIRE(r.q_ub);
    CHECK(*r.q_ub == q(1, 2));
    // b = e0 + e2, c = 0, m = 2: 2 e1 <= e0 + e2.
    CHECK(r.q_witness == std::vector<std::int64_t>{1, 1, 0, 0, 2});
    const StateRange shifted = state_extension(spec, local({0, 1, 0}), v3, {12, 6, true});
    CHECK(shifted.p_lb == r.p_lb);
    CHECK(*shifted.q_ub == *r.q_ub);
  }
  SUBCASE("inconsistent specs are rejected") {
    CHECK_THROWS_AS(state_extension({{v3, local({0, 0, 1})}, {1, 2}}, v3, v3), PreconditionError);
    CHECK_THROWS_AS(state_extension({{v3, v3}, {1, q(1, 2)}}, v3, v3), PreconditionError);
    CHECK_THROWS_AS(state_extension({{local({0, 1, 0})}, {1}}, v3, v3), PreconditionError);
    CHECK_THROWS_AS(state_extension({{v3}, {2}}, v3, v3), PreconditionError);
  }
}

TEST_CASE("pullback rank examples") {
  const Ring z = Ring::integers();
  CHECK(PullbackRank(z, z.from_integer(2))(lit(z, {{"2"}})) == 0);
  CHECK(PullbackRank(z, z.zero())(lit(z, {{"2"}})) == 1);
  CHECK(PullbackRank(z, z.from_integer(3))(lit(z, {{"3", "0"}, {"0", "2"}})) == 1);
  CHECK(PullbackRank(z, z.zero())(lit(z, {{"2", "4"}, {"1", "2"}})) == 1);
  CHECK(PullbackRank(z, z.from_integer(-5))(lit(z, {{"10", "3"}})) == 1);
  CHECK_THROWS_AS(PullbackRank(z, z.from_integer(4)), PreconditionError);
  CHECK_THROWS_AS(PullbackRank(z, z.from_integer(1)), PreconditionError);
  const Ring f2x = Ring::parse("F2[x]");
  CHECK_THROWS_AS(PullbackRank(f2x, f2x.parse_element("x^2+1")), PreconditionError);
  CHECK_THROWS_AS(PullbackRank(Ring::parse("Z/8"), Ring::parse("Z/8").zero()), PreconditionError);
  const PullbackRank at_x2x1(f2x, f2x.parse_element("x^2+x+1"));
  CHECK(at_x2x1(lit(f2x, {{"x^2+x+1", "x^3+1"}})) == 0);
  CHECK(at_x2x1(lit(f2x, {{"x", "x^2"}, {"1", "x"}})) == 1);
}

TEST_CASE("pullback ranks are Sylvester rank functions") {
  std::mt19937_64 rng(41);
  const Ring z = Ring::integers(), f2x = Ring::parse("F2[x]"), f3x = Ring::parse("F3[x]");
  const std::vector<PullbackRank> ranks{
      PullbackRank(z, z.zero()),          PullbackRank(z, z.from_integer(2)),      PullbackRank(z, z.from_integer(3)),
      PullbackRank(f2x, f2x.zero()),      PullbackRank(f2x, f2x.parse_element("x")),
      PullbackRank(f2x, f2x.parse_element("x^2+x+1")), PullbackRank(f3x, f3x.parse_element("x+1"))};
  for (const auto& r : ranks) {
    const Ring& ring = r.ring();
    CHECK(r(identity(ring, 1)) == 1);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t p = 1 + rng() % 3, s = 1 + rng() % 3, t = 1 + rng() % 3;
      const Matrix a = random_matrix(ring, p, s, rng), b = random_matrix(ring, s, t, rng);
      const Matrix c = random_matrix(ring, p, t, rng);
      CHECK(r(mat_mul(ring, a, b)) <= std::min(r(a), r(b)));
      CHECK(r(block_diag(ring, a, b)) == r(a) + r(b));
      CHECK(r(block_upper(ring, a, c, b)) >= r(a) + r(b));
    }
  }
}

TEST_CASE("rk_for_square") {
  const Ring z = Ring::integers();
  const RkSquareResult r = rk_for_square(z, z.from_integer(2), 6);
  CHECK(r.lambda == q(1, 2));
  CHECK(r.upper.chain == std::vector<Move>{{MoveKind::PowerSwap, 0, 2}});
  CHECK(r.grid_points == 7u * 7 * 7 * 7 * 7);
  CHECK(r.refuted > 0);
  CHECK(r.prime == z.from_integer(2));
  CHECK(r.lower_rank_a == 0);
  CHECK(r.lower_rank_a2 == 0);

  const Ring f2x = Ring::parse("F2[x]");
  const RkSquareResult p = rk_for_square(f2x, f2x.parse_element("x"), 6);
  CHECK(p.lambda == q(1, 2));
  CHECK(p.refuted == r.refuted);
  CHECK(p.lower_rank_a == 0);

  CHECK(rk_for_square(z, z.from_integer(6), 3).prime == z.from_integer(2));
  const Ring f3x = Ring::parse("F3[x]");
  CHECK(rk_for_square(f3x, f3x.parse_element("x^2+1"), 3).lambda == q(1, 2));
  CHECK_THROWS_AS(rk_for_square(z, z.from_integer(1), 6), PreconditionError);
  CHECK_THROWS_AS(rk_for_square(z, z.zero(), 6), PreconditionError);
  CHECK_THROWS_AS(rk_for_square(Ring::parse("Z/8"), Ring::parse("Z/8").from_integer(2), 6), PreconditionError);
}
