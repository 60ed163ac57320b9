#include "malcolmson/galois_field.hpp"

#include "malcolmson/errors.hpp"

namespace malcolmson {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(std::int64_t p, poly::Coeffs modulus) : p_(p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31)) {
    throw PreconditionError("field characteristic must be a prime below 2^31");
  }
  modulus_ = poly::monic(poly::normalized(std::move(modulus), p), p);
  if (!poly::is_irreducible(modulus_, p)) {
    throw PreconditionError("field modulus " + poly::format(modulus_, 't') + " is not irreducible over F" +
                            std::to_string(p));
  }
}

GaloisField GaloisField::of_order(std::int64_t q) {
  if (q < 2) throw PreconditionError("field order must be a prime power");
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw PreconditionError(std::to_string(q) + " is not a prime power");
  if (k == 1) return GaloisField(p, {0, 1});
  return GaloisField(p, poly::smallest_irreducible(k, p));
}

std::int64_t GaloisField::order() const {
  std::int64_t q = 1;
  for (int i = 0; i < degree(); ++i) q *= p_;
  return q;
}

GaloisField::Value GaloisField::reduce(const poly::Coeffs& f) const {
  return poly::rem(poly::normalized(f, p_), modulus_, p_);
}

GaloisField::Value GaloisField::mul(const Value& a, const Value& b) const {
  return poly::rem(poly::mul(a, b, p_), modulus_, p_);
}

GaloisField::Value GaloisField::inv(const Value& a) const {
  if (a.empty()) throw PreconditionError("inverse of zero in " + name());
  if (degree() == 1) return {poly::inv_mod(a[0], p_)};
  // a^(q-2)
  return poly::powmod(a, static_cast<std::uint64_t>(order() - 2), modulus_, p_);
}

std::vector<GaloisField::Value> GaloisField::elements() const {
  const std::int64_t q = order();
  if (q > (1 << 16)) throw PreconditionError("field too large to enumerate");
  std::vector<Value> out;
  out.reserve(static_cast<std::size_t>(q));
  for (std::int64_t idx = 0; idx < q; ++idx) {
    Value v(static_cast<std::size_t>(degree()), 0);
    std::int64_t rest = idx;
    for (auto& c : v) {
      c = rest % p_;
      rest /= p_;
    }
    poly::trim(v);
    out.push_back(std::move(v));
  }
  return out;
}

GaloisField::Value GaloisField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::int64_t> coeff(0, p_ - 1);
  Value v(static_cast<std::size_t>(degree()));
  for (auto& c : v) c = coeff(rng);
  poly::trim(v);
  return v;
}

GaloisField::Value GaloisField::parse(std::string_view text) const {
  return reduce(poly::parse(text, 't', p_));
}

std::string GaloisField::name() const { return "F" + std::to_string(order()); }

}  // namespace malcolmson
