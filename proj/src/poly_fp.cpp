#include "malcolmson/poly_fp.hpp"

#include <algorithm>
#include <stdexcept>

#include "malcolmson/errors.hpp"

namespace malcolmson::poly {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (r != 1) throw PreconditionError("element is not invertible modulo p");
  return mod(t, p);
}

void trim(Coeffs& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Coeffs normalized(Coeffs f, std::int64_t p) {
  for (auto& c : f) c = mod(c, p);
  trim(f);
  return f;
}

Coeffs add(const Coeffs& f, const Coeffs& g, std::int64_t p) {
  Coeffs r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i];
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = (r[i] + g[i]) % p;
  trim(r);
  return r;
}

Coeffs neg(const Coeffs& f, std::int64_t p) {
  Coeffs r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] == 0 ? 0 : p - f[i];
  return r;
}

Coeffs sub(const Coeffs& f, const Coeffs& g, std::int64_t p) { return add(f, neg(g, p), p); }

Coeffs scale(const Coeffs& f, std::int64_t s, std::int64_t p) {
  s = mod(s, p);
  Coeffs r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mul_mod(f[i], s, p);
  trim(r);
  return r;
}

Coeffs mul(const Coeffs& f, const Coeffs& g, std::int64_t p) {
  if (f.empty() || g.empty()) return {};
  return mul_trunc(f, g, f.size() + g.size() - 1, p);
}

Coeffs mul_trunc(const Coeffs& f, const Coeffs& g, std::size_t n, std::int64_t p) {
  if (f.empty() || g.empty() || n == 0) return {};
  Coeffs r(std::min(n, f.size() + g.size() - 1), 0);
  for (std::size_t i = 0; i < f.size() && i < r.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size() && i + j < r.size(); ++j) {
      r[i + j] = (r[i + j] + mul_mod(f[i], g[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

std::pair<Coeffs, Coeffs> divmod(const Coeffs& f, const Coeffs& g, std::int64_t p) {
  if (g.empty()) throw PreconditionError("polynomial division by zero");
  Coeffs r = f;
  if (r.size() < g.size()) return {Coeffs{}, r};
  Coeffs q(r.size() - g.size() + 1, 0);
  const std::int64_t lead_inv = inv_mod(g.back(), p);
  const auto gdeg = static_cast<std::ptrdiff_t>(g.size()) - 1;
  for (auto i = static_cast<std::ptrdiff_t>(r.size()) - 1; i >= gdeg; --i) {
    std::int64_t c = mul_mod(r[static_cast<std::size_t>(i)], lead_inv, p);
    if (c == 0) continue;
    auto shift = static_cast<std::size_t>(i - gdeg);
    q[shift] = c;
    for (std::size_t j = 0; j < g.size(); ++j) {
      r[shift + j] = mod(r[shift + j] - mul_mod(c, g[j], p), p);
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

Coeffs rem(const Coeffs& f, const Coeffs& g, std::int64_t p) { return divmod(f, g, p).second; }

Coeffs monic(const Coeffs& f, std::int64_t p) {
  if (f.empty()) return f;
  return scale(f, inv_mod(f.back(), p), p);
}

Coeffs gcd(Coeffs f, Coeffs g, std::int64_t p) {
  while (!g.empty()) {
    Coeffs r = rem(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  return monic(f, p);
}

Coeffs powmod(Coeffs base, std::uint64_t e, const Coeffs& modulus, std::int64_t p) {
  Coeffs result = rem(Coeffs{1}, modulus, p);
  base = rem(base, modulus, p);
  while (e > 0) {
    if (e & 1U) result = rem(mul(result, base, p), modulus, p);
    base = rem(mul(base, base, p), modulus, p);
    e >>= 1U;
  }
  return result;
}

namespace {

// x^(p^k) mod f by repeated p-th powering.
Coeffs frobenius_power(const Coeffs& f, int k, std::int64_t p) {
  Coeffs x = rem(Coeffs{0, 1}, f, p);
  for (int i = 0; i < k; ++i) x = powmod(x, static_cast<std::uint64_t>(p), f, p);
  return x;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible(const Coeffs& f_in, std::int64_t p) {
  Coeffs f = monic(normalized(f_in, p), p);
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Coeffs x = Coeffs{0, 1};
  if (frobenius_power(f, n, p) != rem(x, f, p)) return false;
  for (int r : prime_divisors(n)) {
    Coeffs h = sub(frobenius_power(f, n / r, p), x, p);
    if (degree(gcd(f, h, p)) != 0) return false;
  }
  return true;
}

Coeffs smallest_irreducible(int deg, std::int64_t p) {
  if (deg < 1) throw PreconditionError("irreducible polynomial degree must be >= 1");
  // Enumerate the low coefficients as a base-p counter, constant term fastest.
  Coeffs f(static_cast<std::size_t>(deg) + 1, 0);
  f.back() = 1;
  while (true) {
    if (is_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(deg) && ++f[i] == p) f[i++] = 0;
    if (i == static_cast<std::size_t>(deg)) break;
  }
  throw PreconditionError("no irreducible polynomial found");
}

}  // namespace malcolmson::poly

#include <cctype>
#include <gmpxx.h>

namespace malcolmson::poly {

std::string format(const Coeffs& f, char var) {
  if (f.empty()) return "0";
  std::string out;
  for (auto i = static_cast<std::ptrdiff_t>(f.size()) - 1; i >= 0; --i) {
    const std::int64_t c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

Coeffs parse(std::string_view text, char var, std::int64_t p, int max_exponent) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("malformed polynomial '" + std::string(text) + "': " + why);
  };
  if (s.empty()) throw fail("empty literal");

  Coeffs out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw fail("expected '+' or '-'");
    }
    first = false;

    std::string digits;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    bool has_var = false;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty()) throw fail("'*' without a coefficient");
      ++pos;
      if (pos >= s.size() || s[pos] != var) throw fail("expected variable after '*'");
    }
    long exponent = 0;
    if (pos < s.size() && s[pos] == var) {
      has_var = true;
      exponent = 1;
      ++pos;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string exp_digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) exp_digits += s[pos++];
        if (exp_digits.empty()) throw fail("missing exponent");
        if (exp_digits.size() > 9) throw fail("exponent out of range");
        exponent = std::stol(exp_digits);
      }
    }
    if (digits.empty() && !has_var) throw fail("empty term");
    if (exponent > max_exponent) throw fail("exponent out of range");

    mpz_class coeff = digits.empty() ? mpz_class(1) : mpz_class(digits, 10);
    mpz_class reduced = coeff % p;
    std::int64_t c = reduced.get_si();
    if (negative) c = mod(-c, p);
    auto e = static_cast<std::size_t>(exponent);
    if (out.size() <= e) out.resize(e + 1, 0);
    out[e] = (out[e] + c) % p;
  }
  trim(out);
  return out;
}

}  // namespace malcolmson::poly
