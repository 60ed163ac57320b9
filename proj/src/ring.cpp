#include "malcolmson/ring.hpp"

#include <algorithm>
#include <cctype>

#include "malcolmson/errors.hpp"
#include "malcolmson/rational.hpp"

namespace malcolmson {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Returns (p, k) with q = p^k, or nullopt when q is not a prime power.
std::optional<std::pair<std::int64_t, int>> split_prime_power(std::int64_t q) {
  if (q < 2) return std::nullopt;
  std::int64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return std::nullopt;
  return std::pair{p, k};
}

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::int64_t parse_small(std::string_view digits, std::string_view context) {
  if (digits.empty() || digits.size() > 12 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw ParseError("malformed ring spec '" + std::string(context) + "'");
  }
  return std::stoll(std::string(digits));
}

poly::Coeffs pad(poly::Coeffs v, std::size_t width) {
  v.resize(width, 0);
  return v;
}

}  // namespace

// ---------------------------------------------------------------- construction

Ring Ring::mod_prime_power(std::int64_t p, int n) {
  if (!is_prime(p)) throw PreconditionError("Z/p^n needs a prime p, got " + std::to_string(p));
  if (n < 1) throw PreconditionError("Z/p^n needs n >= 1");
  Ring r;
  r.family_ = Family::ModPrimePower;
  r.p_ = p;
  r.n_ = n;
  mpz_ui_pow_ui(r.modulus_.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  return r;
}

Ring Ring::truncated_poly(std::int64_t p, int n) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31)) throw PreconditionError("F_p[x]/x^n needs a prime p below 2^31");
  if (n < 1) throw PreconditionError("F_p[x]/x^n needs n >= 1");
  Ring r;
  r.family_ = Family::TruncatedPoly;
  r.p_ = p;
  r.n_ = n;
  return r;
}

Ring Ring::integers() {
  Ring r;
  r.family_ = Family::Integers;
  return r;
}

Ring Ring::poly_over_fp(std::int64_t p) {
  if (!is_prime(p) || p >= (std::int64_t{1} << 31)) throw PreconditionError("F_p[x] needs a prime p below 2^31");
  Ring r;
  r.family_ = Family::PolyOverFp;
  r.p_ = p;
  return r;
}

Ring Ring::product_of_fields(const std::vector<std::int64_t>& orders) {
  if (orders.empty()) throw PreconditionError("a product of fields needs at least one factor");
  Ring r;
  r.family_ = Family::ProductOfFields;
  for (auto q : orders) r.fields_.push_back(GaloisField::of_order(q));
  return r;
}

Ring Ring::parse(std::string_view spec_text) {
  const std::string spec = strip_spaces(spec_text);
  auto bad = [&](const std::string& why) { return ParseError("ring spec '" + spec + "': " + why); };
  if (spec == "Z") return integers();

  if (spec.rfind("Z/", 0) == 0) {
    auto pk = split_prime_power(parse_small(spec.substr(2), spec));
    if (!pk) throw bad("Z/N needs N to be a prime power >= 2");
    return mod_prime_power(pk->first, pk->second);
  }

  if (spec.empty() || spec[0] != 'F') throw bad("unrecognised ring");

  const auto bracket = spec.find("[x]");
  if (bracket != std::string::npos) {
    const std::int64_t p = parse_small(spec.substr(1, bracket - 1), spec);
    if (!is_prime(p)) throw bad("polynomial rings need a prime field F_p");
    std::string rest = spec.substr(bracket + 3);
    if (rest.empty()) return poly_over_fp(p);
    if (rest[0] != '/') throw bad("expected '/' after F_p[x]");
    rest.erase(0, 1);
    if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
    if (rest.empty() || rest[0] != 'x') throw bad("only quotients by a power of x are supported");
    int n = 1;
    if (rest.size() > 1) {
      if (rest[1] != '^') throw bad("expected x^n");
      n = static_cast<int>(parse_small(rest.substr(2), spec));
    }
    if (n < 1) throw bad("exponent must be >= 1");
    return truncated_poly(p, n);
  }

  std::vector<std::int64_t> orders;
  std::size_t start = 0;
  while (start <= spec.size()) {
    auto star = spec.find('*', start);
    std::string part = spec.substr(start, star == std::string::npos ? std::string::npos : star - start);
    if (part.size() < 2 || part[0] != 'F') throw bad("expected a field F_q");
    const std::int64_t q = parse_small(part.substr(1), spec);
    if (!split_prime_power(q)) throw bad("field order " + std::to_string(q) + " is not a prime power");
    if (q > (std::int64_t{1} << 31)) throw bad("field order too large");
    orders.push_back(q);
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return product_of_fields(orders);
}

std::string Ring::to_string() const {
  switch (family_) {
    case Family::ModPrimePower:
      return "Z/" + modulus_.get_str();
    case Family::TruncatedPoly:
      return "F" + std::to_string(p_) + "[x]/x^" + std::to_string(n_);
    case Family::Integers:
      return "Z";
    case Family::PolyOverFp:
      return "F" + std::to_string(p_) + "[x]";
    case Family::ProductOfFields: {
      std::string out;
      for (const auto& f : fields_) {
        if (!out.empty()) out += '*';
        out += f.name();
      }
      return out;
    }
  }
  return {};
}

bool Ring::operator==(const Ring& other) const {
  return family_ == other.family_ && p_ == other.p_ && n_ == other.n_ && fields_ == other.fields_;
}

void Ring::require_local(const char* op) const {
  if (!is_local()) throw PreconditionError(std::string(op) + " needs a local ring (Z/p^n or F_p[x]/x^n), got " + to_string());
}

int Ring::nilpotency() const {
  require_local("nilpotency");
  return n_;
}

Element Ring::uniformizer() const {
  require_local("uniformizer");
  if (family_ == Family::ModPrimePower) return from_integer(p_);
  Element e;
  if (n_ > 1) e.coeffs = {0, 1};
  return e;
}

// ---------------------------------------------------------------- components

GaloisField::Value Ring::component(const Element& x, std::size_t i) const {
  if (!is_regular()) throw PreconditionError("component() needs a product of fields");
  std::size_t offset = 0;
  for (std::size_t j = 0; j < i; ++j) offset += static_cast<std::size_t>(fields_[j].degree());
  const auto width = static_cast<std::size_t>(fields_.at(i).degree());
  poly::Coeffs v(x.coeffs.begin() + static_cast<std::ptrdiff_t>(offset),
                 x.coeffs.begin() + static_cast<std::ptrdiff_t>(offset + width));
  poly::trim(v);
  return v;
}

Element Ring::from_components(const std::vector<GaloisField::Value>& parts) const {
  if (!is_regular() || parts.size() != fields_.size()) {
    throw PreconditionError("from_components: wrong number of components");
  }
  Element e;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto block = pad(fields_[i].reduce(parts[i]), static_cast<std::size_t>(fields_[i].degree()));
    e.coeffs.insert(e.coeffs.end(), block.begin(), block.end());
  }
  return e;
}

// ---------------------------------------------------------------- constants, literals

Element Ring::zero() const { return from_integer(0); }
Element Ring::one() const { return from_integer(1); }

Element Ring::from_integer(const mpz_class& z) const {
  Element e;
  switch (family_) {
    case Family::Integers:
      e.integer = z;
      break;
    case Family::ModPrimePower:
      e.integer = z % modulus_;
      if (e.integer < 0) e.integer += modulus_;
      break;
    case Family::TruncatedPoly:
    case Family::PolyOverFp: {
      mpz_class r = z % p_;
      e.coeffs = poly::normalized({r.get_si()}, p_);
      break;
    }
    case Family::ProductOfFields: {
      std::vector<GaloisField::Value> parts;
      for (const auto& f : fields_) {
        mpz_class r = z % f.characteristic();
        parts.push_back(f.from_int(r.get_si()));
      }
      return from_components(parts);
    }
  }
  return e;
}

Element Ring::parse_element(std::string_view literal) const {
  const std::string text = strip_spaces(literal);
  if (text.empty()) throw ParseError("empty element literal");
  switch (family_) {
    case Family::Integers:
    case Family::ModPrimePower:
      return from_integer(parse_integer(text));
    case Family::TruncatedPoly: {
      Element e;
      auto f = poly::parse(text, 'x', p_);
      if (f.size() > static_cast<std::size_t>(n_)) f.resize(static_cast<std::size_t>(n_));
      poly::trim(f);
      e.coeffs = std::move(f);
      return e;
    }
    case Family::PolyOverFp: {
      Element e;
      e.coeffs = poly::parse(text, 'x', p_);
      return e;
    }
    case Family::ProductOfFields: {
      if (text.front() != '(') return from_integer(parse_integer(text));
      if (text.back() != ')') throw ParseError("unterminated tuple literal '" + text + "'");
      std::vector<GaloisField::Value> parts;
      std::string inner = text.substr(1, text.size() - 2);
      std::size_t start = 0;
      while (true) {
        auto comma = inner.find(',', start);
        std::string part = inner.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (parts.size() >= fields_.size()) throw ParseError("too many components in '" + text + "'");
        parts.push_back(fields_[parts.size()].parse(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (parts.size() != fields_.size()) throw ParseError("too few components in '" + text + "'");
      return from_components(parts);
    }
  }
  throw ParseError("unsupported ring");
}

std::string Ring::format(const Element& x) const {
  switch (family_) {
    case Family::Integers:
    case Family::ModPrimePower:
      return x.integer.get_str();
    case Family::TruncatedPoly:
    case Family::PolyOverFp:
      return poly::format(x.coeffs, 'x');
    case Family::ProductOfFields: {
      std::string out = "(";
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (i) out += ',';
        out += fields_[i].format(component(x, i));
      }
      return out + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------- arithmetic

Element Ring::add(const Element& a, const Element& b) const {
  switch (family_) {
    case Family::Integers:
      return Element{a.integer + b.integer, {}};
    case Family::ModPrimePower: {
      Element e{a.integer + b.integer, {}};
      if (e.integer >= modulus_) e.integer -= modulus_;
      return e;
    }
    case Family::TruncatedPoly:
    case Family::PolyOverFp:
      return Element{0, poly::add(a.coeffs, b.coeffs, p_)};
    case Family::ProductOfFields: {
      std::vector<GaloisField::Value> parts;
      for (std::size_t i = 0; i < fields_.size(); ++i) parts.push_back(fields_[i].add(component(a, i), component(b, i)));
      return from_components(parts);
    }
  }
  return {};
}

Element Ring::neg(const Element& a) const {
  switch (family_) {
    case Family::Integers:
      return Element{-a.integer, {}};
    case Family::ModPrimePower:
      return Element{a.integer == 0 ? mpz_class(0) : mpz_class(modulus_ - a.integer), {}};
    case Family::TruncatedPoly:
    case Family::PolyOverFp:
      return Element{0, poly::neg(a.coeffs, p_)};
    case Family::ProductOfFields: {
      std::vector<GaloisField::Value> parts;
      for (std::size_t i = 0; i < fields_.size(); ++i) parts.push_back(fields_[i].neg(component(a, i)));
      return from_components(parts);
    }
  }
  return {};
}

Element Ring::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element Ring::mul(const Element& a, const Element& b) const {
  switch (family_) {
    case Family::Integers:
      return Element{a.integer * b.integer, {}};
    case Family::ModPrimePower:
      return Element{(a.integer * b.integer) % modulus_, {}};
    case Family::TruncatedPoly:
      return Element{0, poly::mul_trunc(a.coeffs, b.coeffs, static_cast<std::size_t>(n_), p_)};
    case Family::PolyOverFp:
      return Element{0, poly::mul(a.coeffs, b.coeffs, p_)};
    case Family::ProductOfFields: {
      std::vector<GaloisField::Value> parts;
      for (std::size_t i = 0; i < fields_.size(); ++i) parts.push_back(fields_[i].mul(component(a, i), component(b, i)));
      return from_components(parts);
    }
  }
  return {};
}

Element Ring::pow(const Element& a, unsigned e) const {
  Element result = one();
  Element base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

bool Ring::is_zero(const Element& a) const {
  if (family_ == Family::Integers || family_ == Family::ModPrimePower) return a.integer == 0;
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](std::int64_t c) { return c == 0; });
}

bool Ring::is_unit(const Element& a) const {
  switch (family_) {
    case Family::Integers:
      return a.integer == 1 || a.integer == -1;
    case Family::ModPrimePower:
      return a.integer % p_ != 0;
    case Family::TruncatedPoly:
      return !a.coeffs.empty() && a.coeffs[0] != 0;
    case Family::PolyOverFp:
      return a.coeffs.size() == 1;
    case Family::ProductOfFields:
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        if (component(a, i).empty()) return false;
      }
      return true;
  }
  return false;
}

Element Ring::unit_inverse(const Element& a) const {
  if (!is_unit(a)) throw PreconditionError(format(a) + " is not a unit in " + to_string());
  switch (family_) {
    case Family::Integers:
      return a;
    case Family::ModPrimePower: {
      Element e;
      mpz_invert(e.integer.get_mpz_t(), a.integer.get_mpz_t(), modulus_.get_mpz_t());
      return e;
    }
    case Family::TruncatedPoly: {
      // Power-series inversion modulo x^n.
      const auto n = static_cast<std::size_t>(n_);
      poly::Coeffs av = a.coeffs;
      av.resize(n, 0);
      poly::Coeffs b(n, 0);
      const std::int64_t inv0 = poly::inv_mod(av[0], p_);
      b[0] = inv0;
      for (std::size_t k = 1; k < n; ++k) {
        std::int64_t s = 0;
        for (std::size_t i = 1; i <= k; ++i) s = (s + poly::mul_mod(av[i], b[k - i], p_)) % p_;
        b[k] = poly::mod(-poly::mul_mod(s, inv0, p_), p_);
      }
      poly::trim(b);
      return Element{0, b};
    }
    case Family::PolyOverFp:
      return Element{0, {poly::inv_mod(a.coeffs[0], p_)}};
    case Family::ProductOfFields: {
      std::vector<GaloisField::Value> parts;
      for (std::size_t i = 0; i < fields_.size(); ++i) parts.push_back(fields_[i].inv(component(a, i)));
      return from_components(parts);
    }
  }
  return {};
}

// ---------------------------------------------------------------- local structure

std::optional<LocalForm> Ring::local_form(const Element& x) const {
  require_local("local_form");
  if (is_zero(x)) return std::nullopt;
  if (family_ == Family::ModPrimePower) {
    mpz_class u = x.integer;
    int v = 0;
    while (u % p_ == 0) {
      u /= p_;
      ++v;
    }
    // u < p^(n-v) already, which is the least representative of the unit class.
    return LocalForm{Element{u, {}}, v};
  }
  int v = 0;
  while (x.coeffs[static_cast<std::size_t>(v)] == 0) ++v;
  poly::Coeffs u(x.coeffs.begin() + v, x.coeffs.end());
  poly::trim(u);
  return LocalForm{Element{0, u}, v};
}

int Ring::valuation(const Element& x) const {
  auto lf = local_form(x);
  return lf ? lf->valuation : n_;
}

std::optional<Element> Ring::divide(const Element& x, const Element& gen) const {
  if (is_zero(x)) return zero();
  switch (family_) {
    case Family::Integers: {
      if (gen.integer == 0 || x.integer % gen.integer != 0) return std::nullopt;
      return Element{x.integer / gen.integer, {}};
    }
    case Family::PolyOverFp: {
      if (gen.coeffs.empty()) return std::nullopt;
      auto [q, r] = poly::divmod(x.coeffs, gen.coeffs, p_);
      if (!r.empty()) return std::nullopt;
      return Element{0, q};
    }
    case Family::ModPrimePower:
    case Family::TruncatedPoly: {
      auto fx = local_form(x);
      auto fg = local_form(gen);
      if (!fg || fx->valuation < fg->valuation) return std::nullopt;
      Element c_power = pow(uniformizer(), static_cast<unsigned>(fx->valuation - fg->valuation));
      return mul(mul(fx->unit, unit_inverse(fg->unit)), c_power);
    }
    case Family::ProductOfFields: {
      std::vector<GaloisField::Value> parts;
      for (std::size_t i = 0; i < fields_.size(); ++i) {
        auto xi = component(x, i);
        auto gi = component(gen, i);
        if (gi.empty()) {
          if (!xi.empty()) return std::nullopt;
          parts.emplace_back();
        } else {
          parts.push_back(fields_[i].mul(xi, fields_[i].inv(gi)));
        }
      }
      return from_components(parts);
    }
  }
  return std::nullopt;
}

bool Ring::ideal_member(const Element& x, const Element& gen) const { return divide(x, gen).has_value(); }

// ---------------------------------------------------------------- enumeration

std::uint64_t Ring::size() const {
  switch (family_) {
    case Family::ModPrimePower:
      return modulus_.fits_ulong_p() ? modulus_.get_ui() : ~std::uint64_t{0};
    case Family::TruncatedPoly: {
      std::uint64_t q = 1;
      for (int i = 0; i < n_; ++i) {
        if (q > (std::uint64_t{1} << 40)) return ~std::uint64_t{0};
        q *= static_cast<std::uint64_t>(p_);
      }
      return q;
    }
    case Family::ProductOfFields: {
      std::uint64_t q = 1;
      for (const auto& f : fields_) {
        if (q > (std::uint64_t{1} << 31)) return ~std::uint64_t{0};
        q *= static_cast<std::uint64_t>(f.order());
      }
      return q;
    }
    default:
      return ~std::uint64_t{0};
  }
}

std::vector<Element> Ring::elements() const {
  if (!is_finite() || size() > (1U << 16)) throw PreconditionError("cannot enumerate the elements of " + to_string());
  std::vector<Element> out;
  const std::uint64_t q = size();
  out.reserve(q);
  switch (family_) {
    case Family::ModPrimePower:
      for (std::uint64_t i = 0; i < q; ++i) out.push_back(from_integer(static_cast<unsigned long>(i)));
      break;
    case Family::TruncatedPoly:
      for (std::uint64_t idx = 0; idx < q; ++idx) {
        poly::Coeffs c(static_cast<std::size_t>(n_));
        auto rest = idx;
        for (auto& ci : c) {
          ci = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p_));
          rest /= static_cast<std::uint64_t>(p_);
        }
        poly::trim(c);
        out.push_back(Element{0, c});
      }
      break;
    case Family::ProductOfFields: {
      std::vector<std::vector<GaloisField::Value>> per;
      for (const auto& f : fields_) per.push_back(f.elements());
      std::vector<std::size_t> idx(fields_.size(), 0);
      for (std::uint64_t count = 0; count < q; ++count) {
        std::vector<GaloisField::Value> parts;
        for (std::size_t i = 0; i < fields_.size(); ++i) parts.push_back(per[i][idx[i]]);
        out.push_back(from_components(parts));
        for (std::size_t i = 0; i < idx.size(); ++i) {
          if (++idx[i] < per[i].size()) break;
          idx[i] = 0;
        }
      }
      break;
    }
    default:
      break;
  }
  return out;
}

Element Ring::random_element(std::mt19937_64& rng) const {
  switch (family_) {
    case Family::Integers: {
      std::uniform_int_distribution<int> d(-4, 4);
      return from_integer(d(rng));
    }
    case Family::PolyOverFp: {
      std::uniform_int_distribution<std::int64_t> c(0, p_ - 1);
      poly::Coeffs f(3);
      for (auto& ci : f) ci = c(rng);
      poly::trim(f);
      return Element{0, f};
    }
    case Family::ModPrimePower: {
      if (modulus_.fits_slong_p()) {
        std::uniform_int_distribution<long> d(0, modulus_.get_si() - 1);
        return from_integer(d(rng));
      }
      gmp_randclass gen(gmp_randinit_default);
      gen.seed(static_cast<unsigned long>(rng()));
      return from_integer(gen.get_z_range(modulus_));
    }
    case Family::TruncatedPoly: {
      std::uniform_int_distribution<std::int64_t> c(0, p_ - 1);
      poly::Coeffs f(static_cast<std::size_t>(n_));
      for (auto& ci : f) ci = c(rng);
      poly::trim(f);
      return Element{0, f};
    }
    case Family::ProductOfFields: {
      std::vector<GaloisField::Value> parts;
      for (const auto& f : fields_) parts.push_back(f.random(rng));
      return from_components(parts);
    }
  }
  return {};
}

}  // namespace malcolmson
