#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "malcolmson/poly_fp.hpp"

namespace malcolmson {

/// The finite field F_p[t]/(f) for a monic irreducible f over F_p.
/// Elements are reduced coefficient vectors (degree < deg f, trimmed).
class GaloisField {
 public:
  using Value = poly::Coeffs;

  GaloisField(std::int64_t p, poly::Coeffs modulus);

  /// F_q for a prime power q, using poly::smallest_irreducible for the modulus.
  static GaloisField of_order(std::int64_t q);

  std::int64_t characteristic() const { return p_; }
  int degree() const { return poly::degree(modulus_); }
  std::int64_t order() const;
  const poly::Coeffs& modulus() const { return modulus_; }

  Value reduce(const poly::Coeffs& f) const;
  Value from_int(std::int64_t a) const { return reduce({poly::mod(a, p_)}); }
  Value zero() const { return {}; }
  Value one() const { return {1}; }

  Value add(const Value& a, const Value& b) const { return poly::add(a, b, p_); }
  Value sub(const Value& a, const Value& b) const { return poly::sub(a, b, p_); }
  Value neg(const Value& a) const { return poly::neg(a, p_); }
  Value mul(const Value& a, const Value& b) const;
  /// Throws PreconditionError on zero.
  Value inv(const Value& a) const;

  /// All q elements in counting order; only for q <= 2^16.
  std::vector<Value> elements() const;
  Value random(std::mt19937_64& rng) const;

  std::string format(const Value& a) const { return poly::format(a, 't'); }
  Value parse(std::string_view text) const;

  /// "F4", "F5".
  std::string name() const;

  bool operator==(const GaloisField& other) const = default;

 private:
  std::int64_t p_;
  poly::Coeffs modulus_;
};

}  // namespace malcolmson
