#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malcolmson/matrix.hpp"
#include "malcolmson/rational.hpp"
#include "malcolmson/ring.hpp"

namespace malcolmson {

enum class MonoidKind { Local, Regular };

/// Local: counts[i] = multiplicity of <c^i>, i < n. Regular: per-component ranks.
struct MonoidElement {
  MonoidKind kind = MonoidKind::Local;
  std::vector<std::int64_t> counts;

  static MonoidElement zero(MonoidKind kind, std::size_t size) { return {kind, std::vector<std::int64_t>(size, 0)}; }
  /// e_i in the free monoid on size generators.
  static MonoidElement basis(std::size_t size, std::size_t i);

  std::int64_t norm() const;  // sum of counts
  bool operator==(const MonoidElement&) const = default;
};

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b);
MonoidElement operator*(std::int64_t m, const MonoidElement& a);

/// The semigroup W_M(R) of the ring: which kind, how many generators.
MonoidKind monoid_kind(const Ring& ring);
std::size_t monoid_size(const Ring& ring);
/// Class of the 1x1 identity.
MonoidElement order_unit(const Ring& ring);

MonoidElement class_of(const Ring& ring, const Matrix& a);

/// rk_k(a) for k in [1, n]; local elements only.
Rational rk(int k, const MonoidElement& a);
/// k * rk_k(a), an integer.
std::int64_t rk_scaled(int k, const MonoidElement& a);

bool leq(const MonoidElement& a, const MonoidElement& b);

enum class MoveKind { PowerSwap, ExponentIncrease, Drop, Cancel };

struct Move {
  MoveKind kind;
  std::int64_t i;      // j1 for PowerSwap
  std::int64_t j = 0;  // j2 for PowerSwap
  bool operator==(const Move&) const = default;
};

enum class CertificateKind { Positive, NegativeRank, NegativeMinor, Factorization, NegativeComponent };

/// Positive: chain of moves applied to b, after which a is a sub-sum.
/// NegativeRank: rk_k(a) = lhs > rhs = rk_k(b).
/// NegativeMinor: mu_k(A) = lhs < rhs = mu_k(B) (rhs infinite when flagged).
/// Factorization: A = left * B * right over a product of fields.
/// NegativeComponent: rank of A at component k is lhs > rhs.
struct Certificate {
  CertificateKind kind = CertificateKind::Positive;
  std::vector<Move> chain;
  std::int64_t k = 0;
  Rational lhs, rhs;
  bool rhs_infinite = false;
  std::optional<Matrix> left, right;

  bool positive() const { return kind == CertificateKind::Positive || kind == CertificateKind::Factorization; }
};

/// Local case: Positive chain when a <= b, NegativeRank with the least
/// violating k otherwise. Throws BoundOverflow past ||b||_1 * n * (n + 1) moves.
Certificate witness_chain(const MonoidElement& a, const MonoidElement& b);

/// Replays or recomputes a local (Positive, NegativeRank) or regular
/// (NegativeComponent) certificate on classes.
bool verify_certificate(const MonoidElement& a, const MonoidElement& b, const Certificate& cert);

/// Over a product of fields: A = C * B * D when class A <= class B,
/// otherwise the least component where rank A exceeds rank B.
Certificate regular_factor(const Ring& ring, const Matrix& a, const Matrix& b);
/// Checks a Factorization by multiplication, a NegativeComponent by ranks.
bool verify_regular_certificate(const Ring& ring, const Matrix& a, const Matrix& b, const Certificate& cert);

/// G with A * G * A = A, over a product of fields.
Matrix von_neumann_inverse(const Ring& ring, const Matrix& a);

/// I_{m+1} is not below I_m for every m <= limit.
bool has_rank_function(const Ring& ring, int limit);

// Formal diagonal elements diag(a^e_1, ..., a^e_r) over Z or F_p[x] with a prime.

using Exponents = std::vector<std::int64_t>;

/// Sums of the k smallest exponents, k = 1..|e|.
std::vector<std::int64_t> minor_profile(Exponents e);
/// The least k where mu_k(A) < mu_k(B), if any (a necessary condition for A <= B fails there).
std::optional<Certificate> minor_refutation(const Exponents& ea, const Exponents& eb);
bool leq_necessary(const Exponents& ea, const Exponents& eb);

/// Bounded breadth-first search over PowerSwap / ExponentIncrease chains from
/// B. Positive or NegativeMinor when decided, nullopt when unknown.
std::optional<Certificate> leq_provable(const Exponents& ea, const Exponents& eb, int depth = 8);
bool verify_formal_certificate(const Exponents& ea, const Exponents& eb, const Certificate& cert);

std::string to_string(MoveKind kind);
std::string to_string(CertificateKind kind);

}  // namespace malcolmson
