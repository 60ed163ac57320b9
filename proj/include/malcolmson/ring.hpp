#pragma once

// Exact arithmetic for the supported ring families:
//
//   Z/p^n          ModPrimePower   Artinian local, c = p
//   F_p[x]/(x^n)   TruncatedPoly   Artinian local, c = x
//   Z              Integers
//   F_p[x]         PolyOverFp
//   F_q1 x ... x F_qd  ProductOfFields (von Neumann regular)
//
// Every Element is stored in a canonical form, so equality of Elements is
// equality in the ring.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "malcolmson/galois_field.hpp"
#include "malcolmson/poly_fp.hpp"

namespace malcolmson {

enum class Family { ModPrimePower, TruncatedPoly, Integers, PolyOverFp, ProductOfFields };

/// A ring value. Integer families (Z, Z/p^n) use `integer` (for Z/p^n the
/// least nonnegative residue); coefficient families use `coeffs` (a trimmed
/// polynomial for F_p[x], a trimmed polynomial of degree < n for F_p[x]/x^n,
/// and for products one fixed-width block of `degree` coefficients per
/// factor, concatenated).
struct Element {
  mpz_class integer;
  poly::Coeffs coeffs;

  bool operator==(const Element& other) const {
    return integer == other.integer && coeffs == other.coeffs;
  }
};

/// Nonzero local-ring value written as unit * c^valuation.
struct LocalForm {
  Element unit;
  int valuation;
};

class Ring {
 public:
  static Ring mod_prime_power(std::int64_t p, int n);
  static Ring truncated_poly(std::int64_t p, int n);
  static Ring integers();
  static Ring poly_over_fp(std::int64_t p);
  static Ring product_of_fields(const std::vector<std::int64_t>& orders);

  /// Grammar: "Z/8", "F2[x]/x^3" (or "F2[x]/(x^3)"), "Z", "F3[x]", "F2*F3*F4".
  static Ring parse(std::string_view spec);
  std::string to_string() const;

  Family family() const { return family_; }
  bool is_local() const { return family_ == Family::ModPrimePower || family_ == Family::TruncatedPoly; }
  bool is_regular() const { return family_ == Family::ProductOfFields; }
  bool is_domain() const { return family_ == Family::Integers || family_ == Family::PolyOverFp; }
  bool is_finite() const { return is_local() || is_regular(); }

  /// Residue characteristic p (local and F_p[x] families).
  std::int64_t prime() const { return p_; }
  /// Smallest n with c^n = 0 (local families).
  int nilpotency() const;
  /// The central generator c of the maximal ideal (local families).
  Element uniformizer() const;

  std::size_t component_count() const { return fields_.size(); }
  const GaloisField& component_field(std::size_t i) const { return fields_.at(i); }
  GaloisField::Value component(const Element& x, std::size_t i) const;
  Element from_components(const std::vector<GaloisField::Value>& parts) const;

  Element zero() const;
  Element one() const;
  Element from_integer(const mpz_class& z) const;
  /// Parses and normalizes a literal: integers for Z and Z/p^n, polynomials in
  /// x for the polynomial families, "(a,b,...)" tuples or a single integer for
  /// products (field components of degree > 1 are polynomials in t).
  Element parse_element(std::string_view literal) const;
  std::string format(const Element& x) const;

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element pow(const Element& a, unsigned e) const;

  bool is_zero(const Element& a) const;
  bool is_one(const Element& a) const { return a == one(); }
  bool is_unit(const Element& a) const;
  /// Throws PreconditionError when a is not a unit.
  Element unit_inverse(const Element& a) const;

  /// Some r with r * gen == x, if one exists.
  std::optional<Element> divide(const Element& x, const Element& gen) const;
  /// x in R * gen.
  bool ideal_member(const Element& x, const Element& gen) const;

  /// Canonical unit * c^v decomposition; nullopt for zero. Local families only.
  std::optional<LocalForm> local_form(const Element& x) const;
  /// Valuation of x; nilpotency() for zero. Local families only.
  int valuation(const Element& x) const;

  /// All elements of a finite ring with at most 2^16 elements.
  std::vector<Element> elements() const;
  std::uint64_t size() const;
  /// Uniform for finite rings; small coefficients/degrees for Z and F_p[x].
  Element random_element(std::mt19937_64& rng) const;

  bool operator==(const Ring& other) const;

 private:
  Ring() = default;
  void require_local(const char* op) const;

  Family family_ = Family::Integers;
  std::int64_t p_ = 0;
  int n_ = 0;
  mpz_class modulus_;  // p^n for ModPrimePower
  std::vector<GaloisField> fields_;
};

}  // namespace malcolmson
