#pragma once

// Exact rational linear algebra on based spaces: sparse vectors, an
// incremental reduced-row-echelon accumulator, kernels, images, quotients and
// exterior squares.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tkk/scalar.hpp"

namespace tkk {

using Index = std::size_t;

/// Coordinate vector stored as (index, coefficient) pairs sorted by index,
/// never holding a zero coefficient.
class SparseVec {
 public:
  using Entry = std::pair<Index, Scalar>;

  SparseVec() = default;
  static SparseVec unit(Index i, Scalar c = 1);
  /// Sorts, merges duplicates and drops zeros.
  static SparseVec from_entries(std::vector<Entry> entries);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const Entry& front() const { return entries_.front(); }
  const Entry& back() const { return entries_.back(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Scalar coeff(Index i) const;
  const Scalar* find(Index i) const;

  void add(Index i, const Scalar& c);
  /// this += c * other
  void axpy(const Scalar& c, const SparseVec& other);

  SparseVec& operator*=(const Scalar& c);
  SparseVec& operator+=(const SparseVec& other);
  SparseVec& operator-=(const SparseVec& other);
  SparseVec operator-() const;

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const Scalar& c, SparseVec v) { return v *= c; }
  friend bool operator==(const SparseVec& a, const SparseVec& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const SparseVec& a, const SparseVec& b) { return !(a == b); }

 private:
  std::vector<Entry> entries_;
};

/// Dense scratch for summing many sparse terms into one vector.
class Accumulator {
 public:
  explicit Accumulator(Index dim);
  Index dim() const { return values_.size(); }
  void add(Index i, const Scalar& c);
  void add(const SparseVec& v, const Scalar& c = 1);
  /// Returns the accumulated vector and resets the scratch to zero.
  SparseVec take();

 private:
  std::vector<Scalar> values_;
  std::vector<char> used_;
  std::vector<Index> touched_;
};

/// Finite-dimensional vector space with a labelled basis.
class BasedSpace {
 public:
  BasedSpace() = default;
  /// Throws DimensionError on duplicate labels.
  explicit BasedSpace(std::vector<std::string> labels);
  /// Labels prefix0, prefix1, ...
  static BasedSpace numbered(const std::string& prefix, Index dim);

  Index dim() const { return labels_.size(); }
  const std::string& label(Index i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(const std::string& label) const;

  friend bool operator==(const BasedSpace& a, const BasedSpace& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, Index> index_;
};

/// Renders a vector as "c*label + ..." using the labels of `space`.
std::string format_vector(const SparseVec& v, const BasedSpace& space);

/// Incremental reduced-row-echelon accumulator.
///
/// Rows are kept fully reduced at all times: every stored row has a leading 1
/// in its pivot column and zeros in every other pivot column. Pivoting picks
/// the first nonzero column of the residual, so the stored basis depends only
/// on the span, not on insertion order. Single writer.
///
/// With `track_combinations` each row also records how it was obtained from
/// the inserted vectors (indexed by insertion call), which lets `express`
/// write a vector in terms of the inserted generators.
class RowSpace {
 public:
  explicit RowSpace(Index ambient_dim, bool track_combinations = false);

  Index ambient_dim() const { return ambient_dim_; }
  Index rank() const { return rows_.size(); }
  bool is_pivot(Index col) const { return row_of_pivot_[col] >= 0; }

  /// Adds v to the span. Returns true when the span grew.
  bool insert(const SparseVec& v);
  /// Normal form of v modulo the span (supported on non-pivot columns).
  SparseVec reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  /// Coefficients over inserted generators, or nullopt when v is not in the
  /// span. Requires tracking.
  std::optional<SparseVec> express(const SparseVec& v) const;

  /// Rows sorted by pivot column (the canonical RREF basis).
  std::vector<SparseVec> rows() const;
  std::vector<Index> pivots() const;
  Index generators_seen() const { return inserted_; }

 private:
  Index ambient_dim_;
  bool track_;
  Index inserted_ = 0;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  std::vector<Index> pivot_of_row_;
  std::vector<long> row_of_pivot_;
};

struct RrefResult {
  std::vector<SparseVec> rows;  // nonzero rows, ordered by pivot
  Index rank = 0;
  std::vector<Index> pivots;
};

/// Exact reduced row-echelon form of the matrix whose rows are `rows`.
RrefResult rref(const std::vector<SparseVec>& rows, Index num_cols);

/// Span of row-reduced coordinate vectors inside an ambient based space.
struct Subspace {
  BasedSpace ambient;
  std::vector<SparseVec> basis_rows;

  Index dim() const { return basis_rows.size(); }
  bool contains(const SparseVec& v) const;
  static Subspace span(const BasedSpace& ambient, const std::vector<SparseVec>& vectors);
  static Subspace zero(const BasedSpace& ambient) { return {ambient, {}}; }
  static Subspace whole(const BasedSpace& ambient);
};

/// Linear map stored by columns: column j is the image of source basis
/// vector j in target coordinates.
struct LinearMap {
  BasedSpace source;
  BasedSpace target;
  std::vector<SparseVec> columns;

  static LinearMap identity(const BasedSpace& space);
  static LinearMap zero(const BasedSpace& source, const BasedSpace& target);

  SparseVec apply(const SparseVec& v) const;
  Scalar entry(Index row, Index col) const { return columns.at(col).coeff(row); }
  /// Rows of the matrix (transpose of the column storage).
  std::vector<SparseVec> rows() const;
  Index rank() const;

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.columns == b.columns; }
};

/// after ∘ before. Throws DimensionError if the spaces do not chain.
LinearMap compose(const LinearMap& after, const LinearMap& before);

Subspace kernel_basis(const LinearMap& map);
Subspace image(const LinearMap& map);

/// ambient / sub, with the quotient basis given by the non-pivot columns of
/// sub's RREF.
class QuotientSpace {
 public:
  QuotientSpace(const BasedSpace& ambient, const Subspace& sub);

  const BasedSpace& space() const { return quotient_; }
  const LinearMap& proj() const { return proj_; }
  const LinearMap& section() const { return section_; }
  /// Ambient column representing quotient basis vector q.
  Index representative(Index q) const { return representatives_[q]; }

  /// Fast projection of an ambient vector into quotient coordinates.
  SparseVec project(const SparseVec& v) const;

 private:
  BasedSpace quotient_;
  RowSpace sub_;
  std::vector<long> quotient_index_;
  std::vector<Index> representatives_;
  LinearMap proj_;
  LinearMap section_;
};

/// Same as constructing a QuotientSpace; kept as a free function.
QuotientSpace quotient_space(const BasedSpace& ambient, const Subspace& sub);

/// Λ²V with basis e_i∧e_j, i < j.
class WedgeSquare {
 public:
  explicit WedgeSquare(const BasedSpace& base);

  const BasedSpace& space() const { return space_; }
  Index base_dim() const { return n_; }
  /// Basis index of e_i∧e_j for i < j.
  Index index(Index i, Index j) const;
  std::pair<Index, Index> pair(Index k) const { return pairs_.at(k); }
  /// Bilinear, alternating embedding V × V → Λ²V.
  SparseVec embed(const SparseVec& x, const SparseVec& y) const;
  /// embed on basis vectors: +e_i∧e_j, -e_j∧e_i, or zero when i == j.
  SparseVec embed_basis(Index i, Index j) const;

 private:
  Index n_;
  BasedSpace space_;
  std::vector<std::pair<Index, Index>> pairs_;
  std::vector<Index> row_offset_;
};

inline WedgeSquare wedge_square(const BasedSpace& space) { return WedgeSquare(space); }

}  // namespace tkk
