#include "malcolmson/states.hpp"

#include <algorithm>
#include <map>

#include "malcolmson/errors.hpp"
#include "malcolmson/field_linalg.hpp"

namespace malcolmson {

namespace {

std::string describe(const MonoidElement& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.counts.size(); ++i) out += (i ? "," : "") + std::to_string(a.counts[i]);
  return out + "]";
}

Rational ratio(std::int64_t num, std::int64_t den) {
  Rational q(static_cast<long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

// Every coefficient vector of the given length with entries summing to at
// most bound, by increasing sum, lexicographic within a sum.
std::vector<std::vector<std::int64_t>> coefficient_vectors(std::size_t length, std::int64_t bound) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> c(length, 0);
  for (std::int64_t total = 0; total <= bound; ++total) {
    std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
      if (i + 1 == length) {
        c[i] = left;
        out.push_back(c);
        return;
      }
      for (std::int64_t x = 0; x <= left; ++x) {
        c[i] = x;
        rec(i + 1, left - x);
      }
    };
    if (length == 0) {
      if (total == 0) out.emplace_back();
      continue;
    }
    rec(0, total);
  }
  return out;
}

struct SpanElement {
  std::vector<std::int64_t> coeffs;
  MonoidElement element;
  Rational value;
};

std::vector<SpanElement> enumerate_span(const StateSpec& spec, const MonoidElement& unit, std::int64_t bound) {
  if (spec.generators.size() != spec.values.size()) throw PreconditionError("state spec: generator/value count mismatch");
  std::vector<SpanElement> out;
  for (const auto& coeffs : coefficient_vectors(spec.generators.size(), bound)) {
    SpanElement s{coeffs, MonoidElement::zero(unit.kind, unit.counts.size()), 0};
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
      s.element = s.element + coeffs[g] * spec.generators[g];
      s.value += Rational(static_cast<long>(coeffs[g])) * spec.values[g];
    }
    s.value.canonicalize();
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<std::array<Rational, 2>> extreme_interval(const MonoidElement& a, const MonoidElement& unit) {
  const MonoidElement standard =
      unit.kind == MonoidKind::Local ? MonoidElement::basis(unit.counts.size(), 0)
                                     : MonoidElement{MonoidKind::Regular, std::vector<std::int64_t>(unit.counts.size(), 1)};
  if (!(unit == standard) || unit.counts.empty()) return std::nullopt;
  std::vector<Rational> values;
  if (a.kind == MonoidKind::Local) {
    for (int k = 1; k <= static_cast<int>(a.counts.size()); ++k) values.push_back(rk(k, a));
  } else {
    for (auto r : a.counts) values.emplace_back(static_cast<long>(r));
  }
  return std::array<Rational, 2>{*std::min_element(values.begin(), values.end()),
                                 *std::max_element(values.begin(), values.end())};
}

}  // namespace

GroupElement GroupElement::of(const MonoidElement& a, const MonoidElement& b) {
  if (a.kind != b.kind || a.counts.size() != b.counts.size()) throw PreconditionError("group element: mixed semigroups");
  GroupElement g{a.kind, a.counts};
  for (std::size_t i = 0; i < g.diff.size(); ++i) g.diff[i] -= b.counts[i];
  return g;
}

MonoidElement GroupElement::positive_part() const {
  MonoidElement out{kind, diff};
  for (auto& x : out.counts) x = std::max<std::int64_t>(x, 0);
  return out;
}

MonoidElement GroupElement::negative_part() const {
  MonoidElement out{kind, diff};
  for (auto& x : out.counts) x = std::max<std::int64_t>(-x, 0);
  return out;
}

bool GroupElement::is_zero() const {
  return std::all_of(diff.begin(), diff.end(), [](std::int64_t x) { return x == 0; });
}

GroupElement operator+(const GroupElement& g, const GroupElement& h) {
  if (g.kind != h.kind || g.diff.size() != h.diff.size()) throw PreconditionError("group element: mixed semigroups");
  GroupElement out = g;
  for (std::size_t i = 0; i < out.diff.size(); ++i) out.diff[i] += h.diff[i];
  return out;
}

GroupElement operator-(const GroupElement& g) { return -1 * g; }

GroupElement operator*(std::int64_t m, const GroupElement& g) {
  GroupElement out = g;
  for (auto& x : out.diff) x *= m;
  return out;
}

bool cone_member(const GroupElement& g) { return leq(g.negative_part(), g.positive_part()); }

std::optional<ConeWitness> cone_witness(const GroupElement& g) {
  const MonoidElement a = g.positive_part(), b = g.negative_part();
  if (!leq(b, a)) return std::nullopt;
  Certificate cert;
  if (g.kind == MonoidKind::Local) cert = witness_chain(b, a);
  return ConeWitness{MonoidElement::zero(g.kind, g.diff.size()), cert};
}

std::optional<MonoidElement> bounded_cone_member(const GroupElement& g, const OrderOracle& order, std::int64_t bound) {
  const MonoidElement a = g.positive_part(), b = g.negative_part();
  for (const auto& coeffs : coefficient_vectors(g.diff.size(), bound)) {
    const MonoidElement c{g.kind, coeffs};
    if (order(b + c, a + c)) return c;
  }
  return std::nullopt;
}

GroupReport group_props_check(const std::vector<GroupElement>& samples, const MonoidElement& unit,
                              std::int64_t unit_bound) {
  GroupReport report;
  report.samples = samples.size();
  std::vector<const GroupElement*> cone;
  for (const auto& g : samples) {
    if (cone_member(g)) cone.push_back(&g);
  }
  report.cone_size = cone.size();
  for (const auto* g : cone) {
    for (const auto* h : cone) {
      if (!cone_member(*g + *h)) {
        report.closed_under_addition = false;
        report.failures.push_back("sum leaves the cone: " + describe({g->kind, g->diff}) + " + " + describe({h->kind, h->diff}));
      }
    }
    if (!g->is_zero() && cone_member(-*g)) {
      report.pointed = false;
      report.failures.push_back("g and -g both positive: " + describe({g->kind, g->diff}));
    }
  }
  const GroupElement v = GroupElement::of(unit, MonoidElement::zero(unit.kind, unit.counts.size()));
  for (const auto& g : samples) {
    bool bounded = false;
    for (std::int64_t n = 0; n <= unit_bound && !bounded; ++n) {
      bounded = cone_member(n * v + -g) && cone_member(g + n * v);
    }
    if (!bounded) {
      report.order_unit = false;
      report.failures.push_back("not bounded by the unit: " + describe({g.kind, g.diff}));
    }
  }
  return report;
}

bool states_exist(const MonoidElement& unit, std::int64_t limit) {
  for (std::int64_t n = 0; n <= limit; ++n) {
    if (leq((n + 1) * unit, n * unit)) return false;
  }
  return true;
}

StateRange state_range(const MonoidElement& a, const MonoidElement& unit, std::int64_t N, std::int64_t M) {
  if (N < 1 || M < 1) throw PreconditionError("state_range: bounds must be positive");
  if (a.kind != unit.kind || a.counts.size() != unit.counts.size()) throw PreconditionError("state_range: mixed semigroups");
  if (!states_exist(unit, N)) throw PreconditionError("no states exist: (n+1)v <= nv for some n");
  StateRange out;
  bool have_p = false;
  for (std::int64_t m = 1; m <= M; ++m) {
    const MonoidElement ma = m * a;
    for (std::int64_t n = 1; n <= N; ++n) {
      const MonoidElement nv = n * unit;
      for (std::int64_t k = 0; k <= N; ++k) {
        const MonoidElement rhs = ma + k * unit;
        const Rational value = ratio(n - k, m);
        if (leq(nv, rhs) && (!have_p || value > out.p_lb)) {
          out.p_lb = value;
          out.p_witness = {n, k, m};
          have_p = true;
        }
        if (leq(rhs, nv) && (!out.q_ub || value < *out.q_ub)) {
          out.q_ub = value;
          out.q_witness = {n, k, m};
        }
      }
    }
  }
  out.exact = extreme_interval(a, unit);
  return out;
}

void check_state_spec(const StateSpec& spec, const MonoidElement& unit, std::int64_t bound) {
  for (const auto& g : spec.generators) {
    if (g.kind != unit.kind || g.counts.size() != unit.counts.size()) throw PreconditionError("state spec: mixed semigroups");
  }
  const auto span = enumerate_span(spec, unit, bound);
  std::map<std::vector<std::int64_t>, const SpanElement*> seen;
  bool unit_found = false;
  for (const auto& s : span) {
    auto [it, inserted] = seen.emplace(s.element.counts, &s);
    if (!inserted && it->second->value != s.value) {
      throw PreconditionError("state spec not well defined at " + describe(s.element) + ": values " +
                              format_rational(it->second->value) + " and " + format_rational(s.value));
    }
    if (s.element == unit) {
      unit_found = true;
      if (s.value != 1) throw PreconditionError("state spec sends the order unit to " + format_rational(s.value));
    }
  }
  if (!unit_found) throw PreconditionError("state spec: the order unit is not in the generated subsemigroup");
  for (const auto& [key_x, x] : seen) {
    for (const auto& [key_y, y] : seen) {
      if (x->value > y->value && leq(x->element, y->element)) {
        throw PreconditionError("state spec not monotone: " + describe(x->element) + " <= " + describe(y->element) +
                                " but " + format_rational(x->value) + " > " + format_rational(y->value));
      }
    }
  }
}

StateRange state_extension(const StateSpec& spec, const MonoidElement& a, const MonoidElement& unit,
                           const ExtensionOptions& options) {
  if (options.bound < 0 || options.M < 1) throw PreconditionError("state_extension: invalid bounds");
  if (a.kind != unit.kind || a.counts.size() != unit.counts.size()) throw PreconditionError("state_extension: mixed semigroups");
  if (!states_exist(unit, options.bound)) throw PreconditionError("no states exist: (n+1)v <= nv for some n");
  check_state_spec(spec, unit, options.bound);

  // One representative per element, the first in enumeration order.
  std::vector<SpanElement> span;
  {
    std::map<std::vector<std::int64_t>, bool> seen;
    for (auto& s : enumerate_span(spec, unit, options.bound)) {
      if (seen.emplace(s.element.counts, true).second) span.push_back(std::move(s));
    }
  }

  StateRange out;
  bool have_p = false;
  const std::int64_t max_shift = options.shifted ? options.M : 0;
  for (std::int64_t m = 1; m <= options.M; ++m) {
    for (std::int64_t shift = 0; shift <= max_shift; ++shift) {
      const MonoidElement lhs_a = shift * a, rhs_a = (m + shift) * a;
      for (const auto& b : span) {
        const MonoidElement left = b.element + lhs_a;
        for (const auto& c : span) {
          const MonoidElement right = c.element + rhs_a;
          Rational value = (b.value - c.value) / Rational(static_cast<long>(m));
          value.canonicalize();
          auto witness = [&] {
            std::vector<std::int64_t> w = b.coeffs;
            w.insert(w.end(), c.coeffs.begin(), c.coeffs.end());
            w.push_back(m);
            if (options.shifted) w.push_back(shift);
            return w;
          };
          if ((!have_p || value > out.p_lb) && leq(left, right)) {
            out.p_lb = value;
            out.p_witness = witness();
            have_p = true;
          }
          if ((!out.q_ub || value < *out.q_ub) && leq(right, left)) {
            out.q_ub = value;
            out.q_witness = witness();
          }
        }
      }
    }
  }
  if (!have_p) throw PreconditionError("state_extension: no lower relation found within the bounds");
  return out;
}

PullbackRank::PullbackRank(Ring ring, Element pi) : ring_(std::move(ring)), pi_(std::move(pi)) {
  if (!ring_.is_domain()) throw PreconditionError("pullback_rank: ring must be Z or F_p[x]");
  if (ring_.is_zero(pi_)) return;
  if (ring_.family() == Family::Integers) {
    mpz_class p = abs(pi_.integer);
    if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
      throw PreconditionError("pullback_rank: " + ring_.format(pi_) + " is not prime");
    }
    if (!p.fits_slong_p() || p.get_si() >= (std::int64_t{1} << 31)) {
      throw PreconditionError("pullback_rank: prime too large");
    }
    residue_.emplace(p.get_si(), poly::Coeffs{0, 1});
  } else {
    if (poly::degree(pi_.coeffs) < 1 || !poly::is_irreducible(pi_.coeffs, ring_.prime())) {
      throw PreconditionError("pullback_rank: " + ring_.format(pi_) + " is not irreducible");
    }
    residue_.emplace(ring_.prime(), poly::monic(pi_.coeffs, ring_.prime()));
  }
}

std::int64_t PullbackRank::operator()(const Matrix& a) const {
  if (residue_) {
    FieldMatrix f(a.rows(), std::vector<GaloisField::Value>(a.cols()));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (ring_.family() == Family::Integers) {
          mpz_class m = a(r, c).integer % residue_->characteristic();
          f[r][c] = residue_->from_int(m.get_si());
        } else {
          f[r][c] = residue_->reduce(a(r, c).coeffs);
        }
      }
    }
    return static_cast<std::int64_t>(field_rank(*residue_, f));
  }
  // Fraction-free elimination over the domain.
  Matrix w = a;
  std::int64_t rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < w.cols() && row < w.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < w.rows() && ring_.is_zero(w(pivot, col))) ++pivot;
    if (pivot == w.rows()) continue;
    for (std::size_t c = 0; c < w.cols(); ++c) std::swap(w(row, c), w(pivot, c));
    for (std::size_t r = row + 1; r < w.rows(); ++r) {
      if (ring_.is_zero(w(r, col))) continue;
      const Element factor = w(r, col), p = w(row, col);
      for (std::size_t c = 0; c < w.cols(); ++c) w(r, c) = ring_.sub(ring_.mul(p, w(r, c)), ring_.mul(factor, w(row, c)));
    }
    ++row;
    ++rank;
  }
  return rank;
}

namespace {

Element prime_factor(const Ring& ring, const Element& a) {
  if (ring.family() == Family::Integers) {
    mpz_class n = abs(a.integer);
    for (mpz_class d = 2; d * d <= n; ++d) {
      if (n % d == 0) return ring.from_integer(d);
    }
    return ring.from_integer(n);
  }
  const std::int64_t p = ring.prime();
  for (int deg = 1; deg <= poly::degree(a.coeffs); ++deg) {
    // Monic candidates of this degree in counting order.
    std::int64_t count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
      poly::Coeffs f(static_cast<std::size_t>(deg) + 1, 0);
      std::int64_t rest = code;
      for (int i = 0; i < deg; ++i) {
        f[static_cast<std::size_t>(i)] = rest % p;
        rest /= p;
      }
      f[static_cast<std::size_t>(deg)] = 1;
      if (poly::is_zero(poly::rem(a.coeffs, f, p)) && poly::is_irreducible(f, p)) return Element{0, f};
    }
  }
  return a;
}

}  // namespace

RkSquareResult rk_for_square(const Ring& ring, const Element& a, std::int64_t bound, int depth) {
  if (!ring.is_domain()) throw PreconditionError("rk_for_square: ring must be Z or F_p[x]");
  if (bound < 1) throw PreconditionError("rk_for_square: bound must be positive");
  Element power = ring.one();
  for (std::int64_t t = 0; t <= 3 * bound; ++t) {
    const Element next = ring.mul(power, a);
    if (ring.ideal_member(power, next)) {
      throw PreconditionError("rk_for_square: a^" + std::to_string(t) + " lies in R a^" + std::to_string(t + 1));
    }
    power = next;
  }

  RkSquareResult out;
  out.bound = bound;
  auto upper = leq_provable({1, 1}, {0, 2}, depth);
  if (!upper || upper->kind != CertificateKind::Positive || !verify_formal_certificate({1, 1}, {0, 2}, *upper)) {
    throw BoundOverflow("rk_for_square: no chain for 2<a> <= <1> + <a^2> within depth " + std::to_string(depth));
  }
  out.upper = *upper;

  // m<1> + k<a> + j<a^2> <= n<1> + l<a^2> forces k <= 2(n - m).
  for (std::int64_t m = 0; m <= bound; ++m) {
    for (std::int64_t k = 0; k <= bound; ++k) {
      for (std::int64_t j = 0; j <= bound; ++j) {
        for (std::int64_t n = 0; n <= bound; ++n) {
          for (std::int64_t l = 0; l <= bound; ++l) {
            ++out.grid_points;
            if (k <= 2 * (n - m)) continue;
            Exponents ea, eb;
            ea.insert(ea.end(), static_cast<std::size_t>(m), 0);
            ea.insert(ea.end(), static_cast<std::size_t>(k), 1);
            ea.insert(ea.end(), static_cast<std::size_t>(j), 2);
            eb.insert(eb.end(), static_cast<std::size_t>(n), 0);
            eb.insert(eb.end(), static_cast<std::size_t>(l), 2);
            auto refutation = minor_refutation(ea, eb);
            if (!refutation || !verify_formal_certificate(ea, eb, *refutation)) {
              throw BoundOverflow("rk_for_square: grid point without a minor refutation");
            }
            ++out.refuted;
          }
        }
      }
    }
  }
  out.lambda = Rational(1, 2);

  out.prime = prime_factor(ring, a);
  const PullbackRank residue(ring, out.prime);
  out.lower_rank_a = residue(Matrix(1, 1, a));
  out.lower_rank_a2 = residue(Matrix(1, 1, ring.mul(a, a)));
  return out;
}

}  // namespace malcolmson
