#pragma once

// First cyclic homology of a unital associative algebra from the Connes
// complex C^λ_n = A^{⊗(n+1)} / (1 − λ_n), degrees 0 to 2.

#include <array>

#include "tkk/algebra.hpp"

namespace tkk {

/// One slice C^λ_n: the tensor power, its λ-coinvariant quotient and the
/// boundary into the previous slice (empty for n = 0).
struct ConnesSlice {
  int level = 0;
  BasedSpace tensor;  // A^{⊗(n+1)}, index a_0*d^n + ... + a_n
  Subspace relations;  // im(1 − λ_n)
  BasedSpace quotient;
  LinearMap boundary;  // C^λ_n → C^λ_{n-1} on quotient coordinates
};

struct ConnesComplex {
  std::array<ConnesSlice, 3> slices;
  /// b̄₁ ∘ b̄₂ = 0, exactly.
  bool is_complex() const;
};

/// Requires an associative unital algebra (KindError otherwise).
ConnesComplex connes_complex(const Algebra& a);

/// dim ker b̄₁ − rank b̄₂.
Index hc1_dim(const Algebra& a);
Index hc1_dim(const ConnesComplex& c);

}  // namespace tkk
