#pragma once

#include <string>
#include <vector>

#include "tkk/algebra.hpp"

namespace tkk {

/// Trilinear product {e_u, e_v, e_w} = Σ_t γ^t_uvw e_t on a based space.
struct TripleSystem {
  std::string name;
  BasedSpace space;
  std::vector<SparseVec> gamma;  // index (u*n + v)*n + w

  Index dim() const { return space.dim(); }
  const SparseVec& at(Index u, Index v, Index w) const { return gamma[(u * dim() + v) * dim() + w]; }
  SparseVec& at(Index u, Index v, Index w) { return gamma[(u * dim() + v) * dim() + w]; }
  SparseVec eval(const SparseVec& x, const SparseVec& y, const SparseVec& z) const;
};

/// Validates outer symmetry γ^t_uvw = γ^t_wvu; throws ValidationError.
TripleSystem make_triple(std::string name, BasedSpace space, std::vector<SparseVec> gamma);

/// {a,b,c} = (ab)c + a(bc) − b(ac) on a Jordan algebra.
TripleSystem triple_from_jordan(const Algebra& j);
/// {a,b,c} = ½(abc + cba) on an associative algebra.
TripleSystem triple_from_associative(const Algebra& a);

IdentityReport check_outer_symmetry(const TripleSystem& t);

/// Full linearizations of
///   (1) {a,b,{a,c,a}} = {a,{b,a,c},a}
///   (2) {{a,b,a},b,c} = {a,{b,a,b},c}
///   (3) {a,{b,{a,c,a},b},a} = {{a,b,a},c,{a,b,a}}
/// on basis multisets. Assumes outer symmetry (checked first).
IdentityReport check_jts_defining(const TripleSystem& t);

/// {a,b,{c,d,e}} = {{a,b,c},d,e} − {c,{b,a,d},e} + {c,d,{a,b,e}} on all
/// basis 5-tuples.
///
/// The single merged identity is sometimes printed with a last summand
/// {a,b,{c,d,e}}, which merely repeats the left side; the form above is the
/// standard one.
IdentityReport check_jts_five_linear(const TripleSystem& t);

/// Outer symmetry, then the defining identities, then the 5-linear identity.
IdentityReport check_jts(const TripleSystem& t);

/// φ{e_u,e_v,e_w} = {φe_u,φe_v,φe_w} on all basis triples.
IdentityReport check_triple_homomorphism(const LinearMap& phi, const TripleSystem& from, const TripleSystem& to);

}  // namespace tkk
