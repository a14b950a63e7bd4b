#pragma once

// Tits–Kantor–Koecher Lie algebras of Jordan triple systems.
//
// The universal algebra K(T) is the Lie algebra presented by generators
// x_u^± and the relations
//   [x_u^σ, x_v^σ] = 0,
//   [[x_u^σ, x_v^-σ], x_w^σ] = Σ_t γ^t_uvw x_t^σ.
// It is 3-graded, K(T) = T⁻ ⊕ K₀ ⊕ T⁺, with K₀ = (T⊗T)/W spanned by
// t(a⊗b) = [x_a⁺, x_b⁻]. Expanding brackets in the presentation gives
//   [t(a⊗b), x_c⁺] =  x⁺_{a,b,c}
//   [t(a⊗b), x_c⁻] = −x⁻_{b,a,c}
//   [t(u), t(v)]   =  t(β(u,v)),  β(a⊗b, c⊗d) = {a,b,c}⊗d − c⊗{b,a,d},
// so W is the smallest subspace containing the antisymmetry and Jacobi
// defects of β that is closed under β from both sides. universal_tkk
// computes it by a fixpoint over an incremental RREF.

#include <array>
#include <optional>
#include <string>

#include "tkk/triple.hpp"

namespace tkk {

/// 3-graded Lie algebra K₋₁ ⊕ K₀ ⊕ K₁; the total basis lists K₋₁, then K₀,
/// then K₁.
struct GradedLie {
  BasedSpace minus;
  BasedSpace zero;
  BasedSpace plus;
  Algebra lie;
  LinearMap embed_minus;  // T → total
  LinearMap embed_plus;   // T → total
  LinearMap t_map;        // T⊗T → total, a⊗b ↦ [x_a⁺, x_b⁻]
  /// Pure tensor (index in T⊗T) whose image is each K₀ basis vector.
  std::vector<Index> zero_representatives;

  Index zero_offset() const { return minus.dim(); }
  Index plus_offset() const { return minus.dim() + zero.dim(); }
  /// −1, 0 or +1 for a total basis index.
  int degree(Index basis_index) const;
  std::array<Index, 3> dims() const { return {minus.dim(), zero.dim(), plus.dim()}; }
};

struct TkkOptions {
  /// Seed W with a pseudo-random sample of Jacobi defects before the full
  /// enumeration. The full enumeration always runs; results are identical.
  bool fast = false;
  /// Guard on dim T⊗T.
  Index max_dim = 20000;
};

/// Diagnostics of the W-closure computation.
struct ClosureStats {
  Index tensor_dim = 0;
  Index antisymmetry_defects = 0;
  Index jacobi_triples = 0;
  Index seed_rank = 0;   // dim of span of the defects
  Index w_dim = 0;       // after closure
  Index closure_steps = 0;  // W basis vectors pushed through β
};

struct UniversalTkk {
  GradedLie k;
  Subspace w;  // inside T⊗T
  ClosureStats stats;
};

/// Universal TKK algebra of T from the presentation. Throws ValidationError
/// if T fails check_jts, ConsistencyError if the closure yields an algebra
/// violating Jacobi or the relations.
UniversalTkk universal_tkk(const TripleSystem& t, const TkkOptions& options = {});

/// Faithful realization: K₀ is the span of the operator pairs
/// (L(a,b), −L(b,a)) on T, L(a,b)c = {a,b,c}.
GradedLie standard_tkk(const TripleSystem& t);

/// Basis vectors of T⊗T are indexed a*dim(T) + b and labelled "a(x)b".
BasedSpace tensor_square(const BasedSpace& space);

/// Both relation families of the presentation, exhaustively on basis
/// vectors.
IdentityReport check_tkk_relations(const GradedLie& k, const TripleSystem& t);

/// [K_i, K_j] ⊆ K_{i+j} (zero when |i+j| ≥ 2) on all basis pairs.
IdentityReport check_grading(const GradedLie& k);

/// The map universal → standard fixing x_u^± and sending t(a⊗b) to the
/// operator pair of a⊗b.
LinearMap canonical_surjection(const GradedLie& universal, const GradedLie& standard);

/// K(φ): K(T₁) → K(T₂), x_u^± ↦ x^±_{φ(u)}. Both algebras must come from
/// universal_tkk. Throws ValidationError when φ is not a triple homomorphism
/// and ConsistencyError if the result is not a Lie homomorphism.
LinearMap tkk_functor_map(const LinearMap& phi, const TripleSystem& from, const TripleSystem& to,
                          const GradedLie& k_from, const GradedLie& k_to);

/// f[x,y] = [f x, f y] on all basis pairs of `from`.
IdentityReport check_lie_homomorphism(const LinearMap& f, const Algebra& from, const Algebra& to);

/// [z, e_i] = 0 for every basis vector z of `sub` and every basis e_i.
IdentityReport check_central(const Subspace& sub, const Algebra& lie);

}  // namespace tkk
