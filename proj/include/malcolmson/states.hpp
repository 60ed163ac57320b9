#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "malcolmson/matrix.hpp"
#include "malcolmson/rational.hpp"
#include "malcolmson/ring.hpp"
#include "malcolmson/semigroup.hpp"

namespace malcolmson {

/// [a] - [b] in the Grothendieck group of a free (or rank-tuple) monoid,
/// stored as the integer difference vector.
struct GroupElement {
  MonoidKind kind = MonoidKind::Local;
  std::vector<std::int64_t> diff;

  static GroupElement of(const MonoidElement& a, const MonoidElement& b);
  MonoidElement positive_part() const;
  MonoidElement negative_part() const;
  bool is_zero() const;
  bool operator==(const GroupElement&) const = default;
};

GroupElement operator+(const GroupElement& g, const GroupElement& h);
GroupElement operator-(const GroupElement& g);
GroupElement operator*(std::int64_t m, const GroupElement& g);

/// g = [a] - [b] lies in the positive cone: b + c <= a + c for some c. For the
/// rank orders the order is cancellative, so c = 0 and this is b <= a.
bool cone_member(const GroupElement& g);

/// b + c <= a + c with c = 0, certified by witness_chain (local) or the ranks.
struct ConeWitness {
  MonoidElement c;
  Certificate certificate;
};
std::optional<ConeWitness> cone_witness(const GroupElement& g);

using OrderOracle = std::function<bool(const MonoidElement&, const MonoidElement&)>;

/// Searches c with ||c||_1 <= bound such that b + c <= a + c under an
/// arbitrary order; returns the first c found in increasing norm.
std::optional<MonoidElement> bounded_cone_member(const GroupElement& g, const OrderOracle& order, std::int64_t bound);

struct GroupReport {
  std::size_t samples = 0;
  std::size_t cone_size = 0;
  bool closed_under_addition = true;
  bool pointed = true;  // G+ and -G+ meet only in 0
  bool order_unit = true;
  std::vector<std::string> failures;
  bool ok() const { return closed_under_addition && pointed && order_unit; }
};

/// Checks the partially ordered group axioms on the given samples, with
/// order-unit multiples searched up to unit_bound.
GroupReport group_props_check(const std::vector<GroupElement>& samples, const MonoidElement& unit,
                              std::int64_t unit_bound);

struct StateRange {
  Rational p_lb;
  std::vector<std::int64_t> p_witness;
  std::optional<Rational> q_ub;  // nullopt when no bounding relation was found
  std::vector<std::int64_t> q_witness;
  std::optional<std::array<Rational, 2>> exact;
};

/// (n + 1) v <= n v for some n <= limit means no state exists.
bool states_exist(const MonoidElement& unit, std::int64_t limit);

/// p = max (n - k) / m with n v <= m a + k v, q = min with n v >= m a + k v,
/// over 1 <= n <= N, 0 <= k <= N, 1 <= m <= M. Witnesses are (n, k, m), the
/// first in (m, n, k) order. Throws PreconditionError when no state exists.
StateRange state_range(const MonoidElement& a, const MonoidElement& unit, std::int64_t N = 12, std::int64_t M = 12);

/// A state on the subsemigroup generated by `generators`.
struct StateSpec {
  std::vector<MonoidElement> generators;
  std::vector<Rational> values;
};

struct ExtensionOptions {
  std::int64_t bound = 12;  // ||coefficients||_1 for b and c
  std::int64_t M = 12;
  bool shifted = false;     // also b + s a <= c + (m + s) a for 0 <= s <= M
};

/// Bounded consistency check of a StateSpec: equal elements get equal values,
/// provable relations are respected, and the unit maps to 1. Throws
/// PreconditionError naming the violating relation.
void check_state_spec(const StateSpec& spec, const MonoidElement& unit, std::int64_t bound);

/// Witnesses are the coefficient vectors of b and c followed by m (and s when shifted).
StateRange state_extension(const StateSpec& spec, const MonoidElement& a, const MonoidElement& unit,
                           const ExtensionOptions& options = {});

/// Rank over the residue field R/(pi) for a prime element pi, or over the
/// fraction field when pi = 0. Rings Z and F_p[x] only.
class PullbackRank {
 public:
  PullbackRank(Ring ring, Element pi);
  std::int64_t operator()(const Matrix& a) const;
  const Ring& ring() const { return ring_; }

 private:
  Ring ring_;
  Element pi_;
  std::optional<GaloisField> residue_;
};

struct RkSquareResult {
  Rational lambda;
  Certificate upper;  // 2<a> <= <1> + <a^2>, as exponents {1,1} vs {0,2}
  std::int64_t bound = 0;
  std::size_t grid_points = 0;
  std::size_t refuted = 0;  // points with k > 2(n - m), each refuted by minors
  Element prime;            // prime factor of a used for the lower endpoint
  std::int64_t lower_rank_a = 0;
  std::int64_t lower_rank_a2 = 0;
};

/// The range {rk(a) : rk(a^2) = 0} has upper end 1/2 for a prime element a of
/// Z or F_p[x]; lower end 0 via the residue field at a prime factor of a.
/// Requires a^t not in R a^(t+1) for t <= 3 * bound.
RkSquareResult rk_for_square(const Ring& ring, const Element& a, std::int64_t bound = 6, int depth = 8);

}  // namespace malcolmson
