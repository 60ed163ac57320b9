#pragma once

#include <cstdint>
#include <vector>

#include "malcolmson/matrix.hpp"
#include "malcolmson/rational.hpp"
#include "malcolmson/ring.hpp"
#include "malcolmson/semigroup.hpp"
#include "malcolmson/states.hpp"

namespace malcolmson {

/// The module R^m / R^n A, with A of shape n x m. A free module uses a 1 x m
/// zero relation row.
struct Presentation {
  std::size_t generators;
  Matrix relations;
};

/// Throws PreconditionError unless relations.cols() == generators.
Presentation make_presentation(std::size_t generators, const Matrix& relations);
Presentation free_presentation(const Ring& ring, std::size_t m);

/// Local: sum of R/(c^i) over `torsion` (ascending, i >= 1) plus R^free_rank.
/// Regular: multiplicity of each field factor.
struct ModuleSignature {
  MonoidKind kind = MonoidKind::Local;
  std::vector<std::int64_t> torsion;
  std::int64_t free_rank = 0;
  std::vector<std::int64_t> multiplicities;
  bool operator==(const ModuleSignature&) const = default;
};

ModuleSignature signature(const Ring& ring, const Presentation& p);
bool presentations_equivalent(const Ring& ring, const Presentation& p, const Presentation& q);

/// m - rk_k(class of A); local families, k in [1, n].
Rational dim(const Ring& ring, int k, const Presentation& p);

// Module-side Grothendieck group coordinates. Local: slot 0 counts [R], slot
// i >= 1 counts [R/(c^i)]. Regular: slot i counts the i-th field factor.

GroupElement module_class(const Ring& ring, const Presentation& p);
/// m [1] - [A] in the matrix-side group.
GroupElement phi(const Ring& ring, const Presentation& p);
/// m [R] - [R^m / R^n A] in the module-side group.
GroupElement psi(const Ring& ring, const Matrix& a);
/// Phi and Psi on whole groups, through their values on generators.
GroupElement phi_group(const Ring& ring, const GroupElement& module_side);
GroupElement psi_group(const Ring& ring, const GroupElement& matrix_side);

/// Positive cone of the module-side group, decided by the additive module
/// dimensions dim_k(R) = 1, dim_k(R/(c^i)) = min(i, k)/k (local) or by
/// multiplicities (regular).
bool module_cone_member(const GroupElement& module_side);

/// Over a product of fields: p is a quotient (equivalently a summand) of q.
bool module_leq(const Ring& ring, const Presentation& p, const Presentation& q);
/// Presentation (m, I - G A) of the row space R^n A, G a von Neumann inverse.
Presentation row_space_presentation(const Ring& ring, const Matrix& a);

}  // namespace malcolmson
