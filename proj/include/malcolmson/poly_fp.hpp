#pragma once

// Dense univariate polynomials over a prime field F_p.
//
// Coefficients are stored low degree first, each in [0, p), with no trailing
// zeros; the zero polynomial is the empty vector. p must be below 2^31 so that
// products fit into 64 bits before reduction.

#include <cstdint>
#include <utility>
#include <vector>

namespace malcolmson::poly {

using Coeffs = std::vector<std::int64_t>;

std::int64_t mod(std::int64_t a, std::int64_t p);
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t inv_mod(std::int64_t a, std::int64_t p);

void trim(Coeffs& f);
/// Reduces every coefficient into [0, p) and trims.
Coeffs normalized(Coeffs f, std::int64_t p);

inline bool is_zero(const Coeffs& f) { return f.empty(); }
/// Degree of f, -1 for the zero polynomial.
inline int degree(const Coeffs& f) { return static_cast<int>(f.size()) - 1; }

Coeffs add(const Coeffs& f, const Coeffs& g, std::int64_t p);
Coeffs sub(const Coeffs& f, const Coeffs& g, std::int64_t p);
Coeffs neg(const Coeffs& f, std::int64_t p);
Coeffs scale(const Coeffs& f, std::int64_t s, std::int64_t p);
Coeffs mul(const Coeffs& f, const Coeffs& g, std::int64_t p);
/// Product truncated to degree < n.
Coeffs mul_trunc(const Coeffs& f, const Coeffs& g, std::size_t n, std::int64_t p);

/// Quotient and remainder of f by a nonzero g.
std::pair<Coeffs, Coeffs> divmod(const Coeffs& f, const Coeffs& g, std::int64_t p);
Coeffs rem(const Coeffs& f, const Coeffs& g, std::int64_t p);
Coeffs monic(const Coeffs& f, std::int64_t p);
Coeffs gcd(Coeffs f, Coeffs g, std::int64_t p);
Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& modulus, std::int64_t p);

/// Rabin's irreducibility test for a polynomial of degree >= 1.
bool is_irreducible(const Coeffs& f, std::int64_t p);

/// The first irreducible monic polynomial of the given degree when the lower
/// coefficients are counted as a base-p number with the constant term as the
/// least significant digit.
Coeffs smallest_irreducible(int degree, std::int64_t p);

}  // namespace malcolmson::poly

#include <string>
#include <string_view>

namespace malcolmson::poly {

/// Human-readable form, highest degree first: "x^2+2x+1", "0".
std::string format(const Coeffs& f, char var);

/// Parses sums of terms such as "x^2+x", "2*x-1", "-3x^4+x+7" with
/// coefficients reduced modulo p. Exponents must lie in [0, max_exponent].
Coeffs parse(std::string_view text, char var, std::int64_t p, int max_exponent = 4096);

}  // namespace malcolmson::poly
