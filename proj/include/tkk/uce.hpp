#pragma once

// Universal central extensions by the exterior-square model
//   uce(g) = Λ²g / B,  B = span{x∧[y,z] + y∧[z,x] + z∧[x,y]},
//   [⟨x∧y⟩, ⟨z∧w⟩] = ⟨[x,y]∧[z,w]⟩,  π⟨x∧y⟩ = [x,y],
// and the comparison of uce(sl_n(A)) with universal TKK algebras.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tkk/tkk.hpp"

namespace tkk {

struct CentralExtension {
  Algebra total;
  Algebra target;
  LinearMap pi;      // total → target
  Subspace kernel;   // inside total
  std::shared_ptr<const WedgeSquare> wedge;
  std::shared_ptr<const QuotientSpace> quotient;  // Λ²g → total

  Index h2_dim() const { return kernel.dim(); }
  /// ⟨x∧y⟩ for x, y in the target.
  SparseVec cls(const SparseVec& x, const SparseVec& y) const;
};

/// Builds uce(g) and verifies: π surjective and a Lie homomorphism, kernel
/// central, total perfect (all exhaustive). Throws KindError when g is not
/// a perfect Lie algebra.
CentralExtension build_uce(const Algebra& g);

/// Rank of span{[e_i, e_j]}.
Index derived_rank(const Algebra& lie);

struct GeneratorLift {
  std::string family;  // "X"
  int i = 0;           // 0-based
  int j = 0;
  std::string argument;
  SparseVec value;
};

/// ⟨½h_ij ∧ e_ij(a)⟩ with h_ij = e_ii(1) − e_jj(1); 0-based i ≠ j.
GeneratorLift canonical_lift(const CentralExtension& e, const SlAlgebra& sl, int i, int j, const SparseVec& a);
GeneratorLift canonical_lift(const CentralExtension& e, const SlAlgebra& sl, int i, int j, const std::string& label);

struct HomReport {
  IdentityReport hom;
  Index rank = 0;
  bool bijective = false;
};

/// Exhaustive bracket comparison on basis pairs plus rank.
HomReport verify_lie_hom(const LinearMap& f, const Algebra& from, const Algebra& to);

struct CandidateResult {
  std::string name;
  bool well_defined = false;
  HomReport hom;
  std::string witness;
};

struct IsoReport {
  std::string theorem;
  std::string base;
  Index dim_uce = 0;
  Index dim_tkk = 0;
  Index h2_dim = 0;
  Index tkk_w_dim = 0;
  bool dims_equal = false;
  bool well_defined = false;
  bool homomorphism = false;
  bool bijective = false;
  bool grading_consistent = false;
  bool iso = false;
  std::optional<std::string> witness;
  std::vector<CandidateResult> candidates;  // Peirce assignments tried
  std::string chosen;
  // Relations of the sl_2 presentation checked on the lifts.
  bool relation_abelian = false;        // [X_ij(A), X_ij(A)] = 0
  bool relation_plus = false;           // [T(a,b), X12(c)] = X12(abc+cba)
  bool relation_minus = false;          // [T(a,b), X21(c)] = -X21(bac+cab)
  bool relation_minus_literal = false;  // same with X12 on the right
};

IsoReport verify_thm32(const Algebra& a, const TkkOptions& options = {});
IsoReport verify_thm41(const Algebra& a, const TkkOptions& options = {});

/// [X_ij(α), X_jk(β)] = X_ik(αβ) for distinct i, j, k, and [X_ij(α), X_kl(β)] = 0
/// for j ≠ k, i ≠ l, over basis arguments; then checks that the lifts
/// generate the total space. Requires n ≥ 3.
IdentityReport steinberg_check(const CentralExtension& e, const SlAlgebra& sl);

struct GrowthRow {
  int d = 0;
  Index dim_a = 0;
  Index dim_sl2 = 0;
  Index h2 = 0;
};

/// dim H₂(sl₂(k⟨x,y⟩ truncated at degree d)) for d = 1..d_max. Throws
/// ResourceError when dim Λ²sl₂ would exceed `guard`.
std::vector<GrowthRow> growth_report(int d_max, Index guard = 20000);

}  // namespace tkk
