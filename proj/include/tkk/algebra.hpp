#pragma once

// Finite-dimensional algebras given by structure constants, identity
// checkers, and the standard constructions (matrix algebras, sl_n(A),
// plus-algebras, truncated free algebras, Grassmann algebras, direct sums,
// Peirce decomposition).

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tkk/errors.hpp"
#include "tkk/linalg.hpp"

namespace tkk {

enum class AlgebraKind { untagged, associative, lie, jordan };

std::string to_string(AlgebraKind kind);
/// Throws ParseError on an unknown name.
AlgebraKind parse_kind(const std::string& name);

/// Products of basis vectors: e_i · e_j = Σ c e_k. Zero products are empty.
class StructureTable {
 public:
  StructureTable() = default;
  explicit StructureTable(Index dim) : dim_(dim), products_(dim * dim) {}

  Index dim() const { return dim_; }
  const SparseVec& at(Index i, Index j) const { return products_[i * dim_ + j]; }
  void set(Index i, Index j, SparseVec v);
  void add(Index i, Index j, Index k, const Scalar& c);

  friend bool operator==(const StructureTable& a, const StructureTable& b) {
    return a.dim_ == b.dim_ && a.products_ == b.products_;
  }

 private:
  Index dim_ = 0;
  std::vector<SparseVec> products_;
};

struct Algebra;

/// Marks an algebra built as M_n(base); basis index of e_ij(a_p) is
/// (i*n + j)*dim(base) + p with 0-based i, j.
struct MatrixTag {
  int n = 0;
  std::shared_ptr<const Algebra> base;
};

struct Algebra {
  std::string name;
  BasedSpace space;
  StructureTable table;
  AlgebraKind kind = AlgebraKind::untagged;
  std::optional<SparseVec> unit;
  std::optional<MatrixTag> matrix;

  Index dim() const { return space.dim(); }
  /// Bilinear extension of the table.
  SparseVec product(const SparseVec& x, const SparseVec& y) const;
  SparseVec product_basis_left(Index i, const SparseVec& y) const;
  SparseVec product_basis_right(const SparseVec& x, Index j) const;
};

/// Counterexample to an identity: the arguments and the two sides.
struct Witness {
  std::vector<SparseVec> inputs;
  SparseVec lhs;
  SparseVec rhs;
};

struct IdentityReport {
  std::string identity;
  bool holds = true;
  std::optional<Witness> witness;
  Index cases_checked = 0;

  static IdentityReport failure(std::string identity, Witness w, Index checked);
  /// One-line human-readable summary, labelling vectors with `space`.
  std::string describe(const BasedSpace& space) const;
};

/// Raised when an object fails the checker for its declared kind.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, IdentityReport report)
      : Error(what), report_(std::move(report)) {}
  const IdentityReport& report() const { return report_; }

 private:
  IdentityReport report_;
};

enum class Identity { associativity, commutativity, anticommutativity, jacobi, jordan, power_linearized };

std::string to_string(Identity identity);
Identity parse_identity(const std::string& name);

/// Validates the table against the kind (running the matching checker) and
/// the unit if one is given; otherwise tries to detect a unit for non-Lie
/// kinds. Throws ValidationError with the failing report.
Algebra make_algebra(std::string name, BasedSpace space, StructureTable table,
                     AlgebraKind kind = AlgebraKind::untagged,
                     std::optional<SparseVec> unit = std::nullopt);

/// Throws DimensionError if the vectors do not live in A.
SparseVec product_eval(const Algebra& a, const SparseVec& x, const SparseVec& y);

/// Exhaustive check over basis tuples. The first failing tuple in
/// lexicographic order is reported.
///
/// `jordan` checks commutativity, the full linearization of (x²y)x = x²(yx)
/// over basis 4-tuples, the raw identity on basis pairs and on a fixed set of
/// pseudo-random rational vectors. `power_linearized` is the linearization
/// alone.
IdentityReport check_identity(const Algebra& a, Identity identity);

/// Solves u·e_i = e_i = e_i·u.
std::optional<SparseVec> detect_unit(const Algebra& a);

/// span{xy − yx}. Requires an associative algebra.
Subspace commutator_subspace(const Algebra& a);

// -- constructions ---------------------------------------------------------

/// The ground field k = Q as a one-dimensional algebra with basis "1".
Algebra scalar_algebra();

/// M_n(A) with basis e_ij(a_p) labelled "e<i><j>(<a_p>)" (1-based).
Algebra matrix_algebra(const Algebra& a, int n);

/// sl_n(A) inside M_n(A), together with the data needed to move between
/// matrix coordinates and Lie-algebra coordinates.
struct SlAlgebra {
  Algebra lie;
  std::shared_ptr<const Algebra> base;
  std::shared_ptr<const Algebra> matrices;
  int n = 0;
  LinearMap embedding;  // sl_n(A) → M_n(A)

  /// Coordinates of a matrix in sl_n(A); throws DimensionError if the trace
  /// condition fails.
  SparseVec coordinates(const SparseVec& matrix) const;
  /// e_ij(a) in M_n(A) coordinates, 0-based i, j.
  SparseVec matrix_unit(int i, int j, const SparseVec& a) const;
  /// e_ij(a) in sl_n(A) coordinates, i ≠ j.
  SparseVec elementary(int i, int j, const SparseVec& a) const;
  /// e_ii(1) − e_jj(1) in sl_n(A) coordinates.
  SparseVec diagonal_h(int i, int j) const;

  std::shared_ptr<const RowSpace> solver;
};

/// Basis: off-diagonal e_ij(a_p), then e_ii(a_p) − e_{i+1,i+1}(a_p) for
/// i < n, then e_nn(c_q) for a basis c_q of [A,A].
SlAlgebra sl_n(const Algebra& a, int n);

/// Checks that the Lie subalgebra of M_n(A) generated by off-diagonal matrix
/// units equals the trace-condition subspace sl_n(A).
bool sl_generated_equals_trace_subspace(const SlAlgebra& sl);

/// A^(+) with x∘y = ½(xy + yx).
Algebra plus_algebra(const Algebra& a);

/// Term list of a noncommutative polynomial: coefficient and word (generator
/// indices).
struct NcPolynomial {
  std::vector<std::pair<Scalar, std::vector<int>>> terms;
};

/// Parses e.g. "xy - yx", "x^2", "2xy + 1/2 y^3 - 1" over single-letter
/// generators.
NcPolynomial parse_nc_polynomial(const std::string& text, const std::vector<std::string>& generators);

/// k⟨generators⟩ modulo the two-sided ideal of `relations` and all words of
/// degree > max_degree. Basis: normal words in degree-lexicographic order.
Algebra truncated_free(const std::vector<std::string>& generators, int max_degree,
                       const std::vector<NcPolynomial>& relations = {});

/// Exterior algebra on m generators e1..em (basis: all subsets).
Algebra grassmann(int generators);

/// A ⊕ B with componentwise product. Labels become "(a,0)" and "(0,b)".
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// The four entry subspaces e11(A), e12(A), e21(A), e22(A) of M_2(A).
struct PeirceDecomposition {
  std::array<Subspace, 4> parts;
};

PeirceDecomposition peirce_decompose(const Algebra& m);

}  // namespace tkk
