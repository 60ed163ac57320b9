#include "malcolmson/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "malcolmson/errors.hpp"
#include "malcolmson/field_linalg.hpp"
#include "malcolmson/normal_form.hpp"

namespace malcolmson {

namespace {

void require_same(const MonoidElement& a, const MonoidElement& b) {
  if (a.kind != b.kind || a.counts.size() != b.counts.size()) {
    throw PreconditionError("monoid elements from different semigroups");
  }
}

bool componentwise_leq(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

// Applies one move to (a', b') in the local monoid, where index n stands for
// the identity <c^n> = <0>. Returns false when the move is illegal.
bool apply_local(std::vector<std::int64_t>& ap, std::vector<std::int64_t>& bp, const Move& mv) {
  const auto n = static_cast<std::int64_t>(bp.size());
  auto in_range = [&](std::int64_t i) { return i >= 0 && i < n; };
  auto bump = [&](std::int64_t i, std::int64_t d) {
    if (i < n) bp[static_cast<std::size_t>(i)] += d;
  };
  auto has = [&](std::int64_t i) { return i >= n || bp[static_cast<std::size_t>(i)] > 0; };
  switch (mv.kind) {
    case MoveKind::Cancel:
      if (!in_range(mv.i) || ap[static_cast<std::size_t>(mv.i)] == 0 || bp[static_cast<std::size_t>(mv.i)] == 0) {
        return false;
      }
      --ap[static_cast<std::size_t>(mv.i)];
      --bp[static_cast<std::size_t>(mv.i)];
      return true;
    case MoveKind::Drop:
      if (!in_range(mv.i) || !has(mv.i)) return false;
      bump(mv.i, -1);
      return true;
    case MoveKind::ExponentIncrease:
      if (!in_range(mv.i) || !has(mv.i)) return false;
      bump(mv.i, -1);
      bump(mv.i + 1, 1);
      return true;
    case MoveKind::PowerSwap:
      if (!in_range(mv.i) || mv.j < mv.i + 2 || mv.j > n || !has(mv.i) || !has(mv.j)) return false;
      bump(mv.i, -1);
      bump(mv.j, -1);
      bump(mv.i + 1, 1);
      bump(mv.j - 1, 1);
      return true;
  }
  return false;
}

// Same moves on a formal exponent multiset; there is no identity index.
bool apply_formal(std::map<std::int64_t, std::int64_t>& bp, const Move& mv) {
  auto take = [&](std::int64_t i) {
    auto it = bp.find(i);
    if (it == bp.end()) return false;
    if (--it->second == 0) bp.erase(it);
    return true;
  };
  switch (mv.kind) {
    case MoveKind::Drop:
      return take(mv.i);
    case MoveKind::ExponentIncrease:
      if (!take(mv.i)) return false;
      ++bp[mv.i + 1];
      return true;
    case MoveKind::PowerSwap:
      if (mv.i < 0 || mv.j < mv.i + 2 || !bp.contains(mv.i) || !bp.contains(mv.j)) return false;
      take(mv.i);
      take(mv.j);
      ++bp[mv.i + 1];
      ++bp[mv.j - 1];
      return true;
    case MoveKind::Cancel:
      return false;  // handled by the caller, which owns both sides
  }
  return false;
}

}  // namespace

MonoidElement MonoidElement::basis(std::size_t size, std::size_t i) {
  MonoidElement out = zero(MonoidKind::Local, size);
  out.counts.at(i) = 1;
  return out;
}

std::int64_t MonoidElement::norm() const { return std::accumulate(counts.begin(), counts.end(), std::int64_t{0}); }

MonoidElement operator+(const MonoidElement& a, const MonoidElement& b) {
  require_same(a, b);
  MonoidElement out = a;
  for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
  return out;
}

MonoidElement operator*(std::int64_t m, const MonoidElement& a) {
  MonoidElement out = a;
  for (auto& c : out.counts) c *= m;
  return out;
}

MonoidKind monoid_kind(const Ring& ring) {
  if (ring.is_local()) return MonoidKind::Local;
  if (ring.is_regular()) return MonoidKind::Regular;
  throw PreconditionError("no finite Malcolmson semigroup model for " + ring.to_string());
}

std::size_t monoid_size(const Ring& ring) {
  return monoid_kind(ring) == MonoidKind::Local ? static_cast<std::size_t>(ring.nilpotency())
                                                : ring.component_count();
}

MonoidElement order_unit(const Ring& ring) { return class_of(ring, identity(ring, 1)); }

MonoidElement class_of(const Ring& ring, const Matrix& a) {
  const MonoidKind kind = monoid_kind(ring);
  MonoidElement out = MonoidElement::zero(kind, monoid_size(ring));
  if (kind == MonoidKind::Local) {
    for (int e : diagonalize(ring, a).exponents) ++out.counts[static_cast<std::size_t>(e)];
  } else {
    for (std::size_t i = 0; i < ring.component_count(); ++i) {
      out.counts[i] = static_cast<std::int64_t>(field_rank(ring.component_field(i), component_matrix(ring, a, i)));
    }
  }
  return out;
}

std::int64_t rk_scaled(int k, const MonoidElement& a) {
  if (a.kind != MonoidKind::Local) throw PreconditionError("rk_k is defined on the local semigroup");
  if (k < 1 || k > static_cast<int>(a.counts.size())) {
    throw PreconditionError("rk_k: k = " + std::to_string(k) + " outside [1, " + std::to_string(a.counts.size()) + "]");
  }
  std::int64_t total = 0;
  for (int i = 0; i < k; ++i) total += (k - i) * a.counts[static_cast<std::size_t>(i)];
  return total;
}

Rational rk(int k, const MonoidElement& a) {
  Rational out(static_cast<long>(rk_scaled(k, a)), static_cast<unsigned long>(k));
  out.canonicalize();
  return out;
}

bool leq(const MonoidElement& a, const MonoidElement& b) {
  require_same(a, b);
  if (a.kind == MonoidKind::Regular) return componentwise_leq(a.counts, b.counts);
  for (int k = 1; k <= static_cast<int>(a.counts.size()); ++k) {
    if (rk_scaled(k, a) > rk_scaled(k, b)) return false;
  }
  return true;
}

Certificate witness_chain(const MonoidElement& a, const MonoidElement& b) {
  require_same(a, b);
  if (a.kind != MonoidKind::Local) throw PreconditionError("witness_chain: local semigroup only");
  const auto n = static_cast<std::int64_t>(a.counts.size());
  Certificate cert;
  if (!leq(a, b)) {
    for (int k = 1; k <= n; ++k) {
      if (rk_scaled(k, a) > rk_scaled(k, b)) {
        cert.kind = CertificateKind::NegativeRank;
        cert.k = k;
        cert.lhs = rk(k, a);
        cert.rhs = rk(k, b);
        return cert;
      }
    }
  }

  const std::int64_t bound = b.norm() * n * (n + 1);
  std::vector<std::int64_t> ap = a.counts, bp = b.counts;
  while (!componentwise_leq(ap, bp)) {
    if (static_cast<std::int64_t>(cert.chain.size()) >= bound) {
      throw BoundOverflow("witness_chain exceeded " + std::to_string(bound) + " moves");
    }
    Move mv{MoveKind::Cancel, -1};
    for (std::int64_t i = 0; i < n; ++i) {
      if (ap[static_cast<std::size_t>(i)] > 0 && bp[static_cast<std::size_t>(i)] > 0) {
        mv.i = i;
        break;
      }
    }
    if (mv.i < 0) {
      std::int64_t ia = 0;
      while (ap[static_cast<std::size_t>(ia)] == 0) ++ia;
      std::int64_t j1 = ia - 1;
      while (j1 >= 0 && bp[static_cast<std::size_t>(j1)] == 0) --j1;
      if (j1 < 0) throw BoundOverflow("witness_chain: no support of b below min supp a");
      std::int64_t j2 = j1 + 1;
      while (j2 < n && bp[static_cast<std::size_t>(j2)] == 0) ++j2;
      mv = Move{MoveKind::PowerSwap, j1, j2};
    }
    apply_local(ap, bp, mv);
    cert.chain.push_back(mv);
  }
  return cert;
}

bool verify_certificate(const MonoidElement& a, const MonoidElement& b, const Certificate& cert) {
  if (a.kind != b.kind || a.counts.size() != b.counts.size()) return false;
  const auto n = static_cast<std::int64_t>(a.counts.size());
  switch (cert.kind) {
    case CertificateKind::Positive: {
      if (a.kind != MonoidKind::Local) return false;
      std::vector<std::int64_t> ap = a.counts, bp = b.counts;
      for (const Move& mv : cert.chain) {
        if (!apply_local(ap, bp, mv)) return false;
      }
      return componentwise_leq(ap, bp);
    }
    case CertificateKind::NegativeRank:
      if (a.kind != MonoidKind::Local || cert.k < 1 || cert.k > n || cert.rhs_infinite) return false;
      return cert.lhs == rk(static_cast<int>(cert.k), a) && cert.rhs == rk(static_cast<int>(cert.k), b) &&
             cert.lhs > cert.rhs;
    case CertificateKind::NegativeComponent:
      if (a.kind != MonoidKind::Regular || cert.k < 0 || cert.k >= n || cert.rhs_infinite) return false;
      return cert.lhs == Rational(static_cast<long>(a.counts[static_cast<std::size_t>(cert.k)])) &&
             cert.rhs == Rational(static_cast<long>(b.counts[static_cast<std::size_t>(cert.k)])) && cert.lhs > cert.rhs;
    case CertificateKind::NegativeMinor:
    case CertificateKind::Factorization:
      return false;
  }
  return false;
}

Certificate regular_factor(const Ring& ring, const Matrix& a, const Matrix& b) {
  if (!ring.is_regular()) throw PreconditionError("regular_factor: ring is not a product of fields");
  const MonoidElement ca = class_of(ring, a), cb = class_of(ring, b);
  Certificate cert;
  for (std::size_t i = 0; i < ca.counts.size(); ++i) {
    if (ca.counts[i] > cb.counts[i]) {
      cert.kind = CertificateKind::NegativeComponent;
      cert.k = static_cast<std::int64_t>(i);
      cert.lhs = Rational(static_cast<long>(ca.counts[i]));
      cert.rhs = Rational(static_cast<long>(cb.counts[i]));
      return cert;
    }
  }
  cert.kind = CertificateKind::Factorization;
  if (a == b) {
    cert.left = identity(ring, a.rows());
    cert.right = identity(ring, a.cols());
    return cert;
  }
  std::vector<FieldMatrix> cs, ds;
  for (std::size_t i = 0; i < ring.component_count(); ++i) {
    const GaloisField& f = ring.component_field(i);
    const auto fa = rank_factorize(f, component_matrix(ring, a, i));
    const auto fb = rank_factorize(f, component_matrix(ring, b, i));
    const FieldMatrix j1 = partial_identity(f, a.rows(), b.rows(), fa.rank);
    const FieldMatrix j2 = partial_identity(f, b.cols(), a.cols(), fa.rank);
    cs.push_back(field_mul(f, field_mul(f, fa.left, j1), fb.left_inv));
    ds.push_back(field_mul(f, field_mul(f, fb.right_inv, j2), fa.right));
  }
  cert.left = assemble_components(ring, cs);
  cert.right = assemble_components(ring, ds);
  return cert;
}

bool verify_regular_certificate(const Ring& ring, const Matrix& a, const Matrix& b, const Certificate& cert) {
  if (!ring.is_regular()) return false;
  if (cert.kind == CertificateKind::NegativeComponent) {
    return verify_certificate(class_of(ring, a), class_of(ring, b), cert);
  }
  if (cert.kind != CertificateKind::Factorization || !cert.left || !cert.right) return false;
  if (cert.left->rows() != a.rows() || cert.left->cols() != b.rows()) return false;
  if (cert.right->rows() != b.cols() || cert.right->cols() != a.cols()) return false;
  return mat_mul(ring, mat_mul(ring, *cert.left, b), *cert.right) == a;
}

Matrix von_neumann_inverse(const Ring& ring, const Matrix& a) {
  if (!ring.is_regular()) throw PreconditionError("von_neumann_inverse: ring is not a product of fields");
  std::vector<FieldMatrix> parts;
  for (std::size_t i = 0; i < ring.component_count(); ++i) {
    const GaloisField& f = ring.component_field(i);
    const auto fa = rank_factorize(f, component_matrix(ring, a, i));
    const FieldMatrix jt = partial_identity(f, a.cols(), a.rows(), fa.rank);
    parts.push_back(field_mul(f, field_mul(f, fa.right_inv, jt), fa.left_inv));
  }
  return assemble_components(ring, parts);
}

bool has_rank_function(const Ring& ring, int limit) {
  MonoidElement previous = MonoidElement::zero(monoid_kind(ring), monoid_size(ring));
  for (int m = 0; m <= limit; ++m) {
    const MonoidElement next = class_of(ring, identity(ring, static_cast<std::size_t>(m + 1)));
    if (leq(next, previous)) return false;
    previous = next;
  }
  return true;
}

std::vector<std::int64_t> minor_profile(Exponents e) {
  for (auto x : e) {
    if (x < 0) throw PreconditionError("minor_profile: negative exponent");
  }
  std::sort(e.begin(), e.end());
  std::vector<std::int64_t> out;
  std::int64_t sum = 0;
  for (auto x : e) out.push_back(sum += x);
  return out;
}

std::optional<Certificate> minor_refutation(const Exponents& ea, const Exponents& eb) {
  const auto pa = minor_profile(ea), pb = minor_profile(eb);
  for (std::size_t k = 0; k < pa.size(); ++k) {
    const bool infinite = k >= pb.size();
    if (infinite || pa[k] < pb[k]) {
      Certificate cert;
      cert.kind = CertificateKind::NegativeMinor;
      cert.k = static_cast<std::int64_t>(k + 1);
      cert.lhs = Rational(static_cast<long>(pa[k]));
      cert.rhs_infinite = infinite;
      cert.rhs = infinite ? Rational(0) : Rational(static_cast<long>(pb[k]));
      return cert;
    }
  }
  return std::nullopt;
}

bool leq_necessary(const Exponents& ea, const Exponents& eb) { return !minor_refutation(ea, eb); }

std::optional<Certificate> leq_provable(const Exponents& ea, const Exponents& eb, int depth) {
  if (auto refutation = minor_refutation(ea, eb)) return refutation;
  Exponents target = ea;
  std::sort(target.begin(), target.end());
  const std::int64_t top = target.empty() ? 0 : target.back();

  Exponents start = eb;
  std::sort(start.begin(), start.end());
  std::map<Exponents, std::pair<Exponents, Move>> parent;
  std::map<Exponents, int> dist{{start, 0}};
  std::deque<Exponents> queue{start};
  while (!queue.empty()) {
    Exponents state = queue.front();
    queue.pop_front();
    if (std::includes(state.begin(), state.end(), target.begin(), target.end())) {
      Certificate cert;
      for (Exponents s = state; s != start; s = parent.at(s).first) cert.chain.push_back(parent.at(s).second);
      std::reverse(cert.chain.begin(), cert.chain.end());
      return cert;
    }
    const int d = dist.at(state);
    if (d >= depth) continue;

    std::vector<Move> moves;
    Exponents values = state;
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t x = 0; x < values.size(); ++x) {
      if (values[x] >= top) break;
      moves.push_back({MoveKind::ExponentIncrease, values[x]});
      for (std::size_t y = x + 1; y < values.size(); ++y) {
        if (values[y] >= values[x] + 2) moves.push_back({MoveKind::PowerSwap, values[x], values[y]});
      }
    }
    for (const Move& mv : moves) {
      std::map<std::int64_t, std::int64_t> counts;
      for (auto v : state) ++counts[v];
      apply_formal(counts, mv);
      Exponents next;
      for (const auto& [v, c] : counts) next.insert(next.end(), static_cast<std::size_t>(c), v);
      if (dist.contains(next)) continue;
      dist[next] = d + 1;
      parent.emplace(next, std::make_pair(state, mv));
      queue.push_back(std::move(next));
    }
  }
  return std::nullopt;
}

bool verify_formal_certificate(const Exponents& ea, const Exponents& eb, const Certificate& cert) {
  if (cert.kind == CertificateKind::NegativeMinor) {
    auto expected = minor_refutation(ea, eb);
    if (!expected || cert.k < 1) return false;
    const auto pa = minor_profile(ea), pb = minor_profile(eb);
    const auto k = static_cast<std::size_t>(cert.k);
    if (k > pa.size()) return false;
    const bool infinite = k > pb.size();
    if (cert.rhs_infinite != infinite || cert.lhs != Rational(static_cast<long>(pa[k - 1]))) return false;
    return infinite || (cert.rhs == Rational(static_cast<long>(pb[k - 1])) && cert.lhs < cert.rhs);
  }
  if (cert.kind != CertificateKind::Positive) return false;
  std::map<std::int64_t, std::int64_t> a_counts, b_counts;
  for (auto v : ea) {
    if (v < 0) return false;
    ++a_counts[v];
  }
  for (auto v : eb) {
    if (v < 0) return false;
    ++b_counts[v];
  }
  for (const Move& mv : cert.chain) {
    if (mv.kind == MoveKind::Cancel) {
      auto ia = a_counts.find(mv.i), ib = b_counts.find(mv.i);
      if (ia == a_counts.end() || ib == b_counts.end()) return false;
      if (--ia->second == 0) a_counts.erase(ia);
      if (--ib->second == 0) b_counts.erase(ib);
    } else if (!apply_formal(b_counts, mv)) {
      return false;
    }
  }
  for (const auto& [v, c] : a_counts) {
    auto it = b_counts.find(v);
    if (it == b_counts.end() || it->second < c) return false;
  }
  return true;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::PowerSwap: return "PowerSwap";
    case MoveKind::ExponentIncrease: return "ExponentIncrease";
    case MoveKind::Drop: return "Drop";
    case MoveKind::Cancel: return "Cancel";
  }
  return "?";
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Positive: return "Positive";
    case CertificateKind::NegativeRank: return "NegativeRank";
    case CertificateKind::NegativeMinor: return "NegativeMinor";
    case CertificateKind::Factorization: return "Factorization";
    case CertificateKind::NegativeComponent: return "NegativeComponent";
  }
  return "?";
}

}  // namespace malcolmson
