#include "malcolmson/modules.hpp"

#include <algorithm>

#include "malcolmson/errors.hpp"
#include "malcolmson/field_linalg.hpp"
#include "malcolmson/normal_form.hpp"

namespace malcolmson {

namespace {

std::size_t group_size(const Ring& ring) { return monoid_size(ring); }

void require_group(const Ring& ring, const GroupElement& g) {
  if (g.kind != monoid_kind(ring) || g.diff.size() != group_size(ring)) {
    throw PreconditionError("group element does not belong to " + ring.to_string());
  }
}

}  // namespace

Presentation make_presentation(std::size_t generators, const Matrix& relations) {
  if (generators == 0) throw PreconditionError("presentation needs at least one generator");
  if (relations.cols() != generators) {
    throw PreconditionError("presentation: relation matrix has " + std::to_string(relations.cols()) +
                            " columns for " + std::to_string(generators) + " generators");
  }
  return {generators, relations};
}

Presentation free_presentation(const Ring& ring, std::size_t m) { return make_presentation(m, zeros(ring, 1, m)); }

ModuleSignature signature(const Ring& ring, const Presentation& p) {
  const MonoidKind kind = monoid_kind(ring);
  ModuleSignature out;
  out.kind = kind;
  if (kind == MonoidKind::Local) {
    const DiagonalForm form = diagonalize(ring, p.relations);
    for (int e : form.exponents) {
      if (e > 0) out.torsion.push_back(e);
    }
    out.free_rank = static_cast<std::int64_t>(p.generators - form.exponents.size());
  } else {
    const MonoidElement ranks = class_of(ring, p.relations);
    for (auto r : ranks.counts) out.multiplicities.push_back(static_cast<std::int64_t>(p.generators) - r);
  }
  return out;
}

bool presentations_equivalent(const Ring& ring, const Presentation& p, const Presentation& q) {
  return signature(ring, p) == signature(ring, q);
}

Rational dim(const Ring& ring, int k, const Presentation& p) {
  if (!ring.is_local()) throw PreconditionError("dim_k is defined for local families");
  Rational out = Rational(static_cast<long>(p.generators)) - rk(k, class_of(ring, p.relations));
  out.canonicalize();
  return out;
}

GroupElement module_class(const Ring& ring, const Presentation& p) {
  const ModuleSignature sig = signature(ring, p);
  GroupElement g{sig.kind, std::vector<std::int64_t>(group_size(ring), 0)};
  if (sig.kind == MonoidKind::Local) {
    g.diff[0] = sig.free_rank;
    for (auto e : sig.torsion) ++g.diff[static_cast<std::size_t>(e)];
  } else {
    g.diff = sig.multiplicities;
  }
  return g;
}

GroupElement phi(const Ring& ring, const Presentation& p) {
  const MonoidElement unit = order_unit(ring);
  return GroupElement::of(static_cast<std::int64_t>(p.generators) * unit, class_of(ring, p.relations));
}

GroupElement psi(const Ring& ring, const Matrix& a) {
  const Presentation p = make_presentation(a.cols(), a);
  GroupElement free{monoid_kind(ring), std::vector<std::int64_t>(group_size(ring), 0)};
  if (free.kind == MonoidKind::Local) {
    free.diff[0] = static_cast<std::int64_t>(a.cols());
  } else {
    std::fill(free.diff.begin(), free.diff.end(), static_cast<std::int64_t>(a.cols()));
  }
  return free + -module_class(ring, p);
}

GroupElement phi_group(const Ring& ring, const GroupElement& module_side) {
  require_group(ring, module_side);
  if (module_side.kind == MonoidKind::Regular) return module_side;
  // [R] -> e_0, [R/(c^i)] -> e_0 - e_i
  GroupElement out{MonoidKind::Local, std::vector<std::int64_t>(module_side.diff.size(), 0)};
  for (std::size_t i = 0; i < module_side.diff.size(); ++i) {
    out.diff[0] += module_side.diff[i];
    if (i > 0) out.diff[i] -= module_side.diff[i];
  }
  return out;
}

GroupElement psi_group(const Ring& ring, const GroupElement& matrix_side) {
  require_group(ring, matrix_side);
  if (matrix_side.kind == MonoidKind::Regular) return matrix_side;
  // e_0 -> [R], e_i -> [R] - [R/(c^i)]
  GroupElement out{MonoidKind::Local, std::vector<std::int64_t>(matrix_side.diff.size(), 0)};
  for (std::size_t i = 0; i < matrix_side.diff.size(); ++i) {
    out.diff[0] += matrix_side.diff[i];
    if (i > 0) out.diff[i] -= matrix_side.diff[i];
  }
  return out;
}

bool module_cone_member(const GroupElement& g) {
  if (g.kind == MonoidKind::Regular) {
    return std::all_of(g.diff.begin(), g.diff.end(), [](std::int64_t x) { return x >= 0; });
  }
  const auto n = static_cast<std::int64_t>(g.diff.size());
  for (std::int64_t k = 1; k <= n; ++k) {
    // k * dim_k(g)
    std::int64_t scaled = k * g.diff[0];
    for (std::int64_t i = 1; i < n; ++i) scaled += std::min(i, k) * g.diff[static_cast<std::size_t>(i)];
    if (scaled < 0) return false;
  }
  return true;
}

bool module_leq(const Ring& ring, const Presentation& p, const Presentation& q) {
  if (!ring.is_regular()) throw PreconditionError("module_leq is exposed for products of fields only");
  const auto a = signature(ring, p).multiplicities, b = signature(ring, q).multiplicities;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Presentation row_space_presentation(const Ring& ring, const Matrix& a) {
  const Matrix projection = mat_mul(ring, von_neumann_inverse(ring, a), a);
  Matrix relations = identity(ring, a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) relations(r, c) = ring.sub(relations(r, c), projection(r, c));
  }
  return make_presentation(a.cols(), relations);
}

}  // namespace malcolmson
