#include "tkk/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "tkk/errors.hpp"

namespace tkk {

// ---------------------------------------------------------------------------
// SparseVec

SparseVec SparseVec::unit(Index i, Scalar c) {
  SparseVec v;
  if (!c.is_zero()) v.entries_.emplace_back(i, std::move(c));
  return v;
}

SparseVec SparseVec::from_entries(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  SparseVec v;
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first) {
      v.entries_.back().second += e.second;
      if (v.entries_.back().second.is_zero()) v.entries_.pop_back();
    } else if (!e.second.is_zero()) {
      v.entries_.push_back(std::move(e));
    }
  }
  return v;
}

const Scalar* SparseVec::find(Index i) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it == entries_.end() || it->first != i) return nullptr;
  return &it->second;
}

Scalar SparseVec::coeff(Index i) const {
  const Scalar* c = find(i);
  return c ? *c : Scalar(0);
}

void SparseVec::add(Index i, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  } else {
    entries_.insert(it, Entry(i, c));
  }
}

void SparseVec::axpy(const Scalar& c, const SparseVec& other) {
  if (c.is_zero() || other.empty()) return;
  if (entries_.empty()) {
    entries_ = other.entries_;
    if (!c.is_one())
      for (auto& e : entries_) e.second *= c;
    return;
  }
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c.is_one() ? b->second : b->second * c);
      ++b;
    } else {
      a->second.add_product(c, b->second);
      if (!a->second.is_zero()) out.push_back(std::move(*a));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

SparseVec& SparseVec::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    entries_.clear();
  } else if (!c.is_one()) {
    for (auto& e : entries_) e.second *= c;
  }
  return *this;
}

SparseVec& SparseVec::operator+=(const SparseVec& other) {
  axpy(Scalar(1), other);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& other) {
  axpy(Scalar(-1), other);
  return *this;
}

SparseVec SparseVec::operator-() const {
  SparseVec r = *this;
  for (auto& e : r.entries_) e.second = -e.second;
  return r;
}

// ---------------------------------------------------------------------------
// Accumulator

Accumulator::Accumulator(Index dim) : values_(dim), used_(dim, 0) {}

void Accumulator::add(Index i, const Scalar& c) {
  if (c.is_zero()) return;
  if (!used_[i]) {
    used_[i] = 1;
    touched_.push_back(i);
  }
  values_[i] += c;
}

void Accumulator::add(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [i, x] : v) {
    if (!used_[i]) {
      used_[i] = 1;
      touched_.push_back(i);
    }
    values_[i].add_product(c, x);
  }
}

SparseVec Accumulator::take() {
  std::sort(touched_.begin(), touched_.end());
  std::vector<SparseVec::Entry> entries;
  entries.reserve(touched_.size());
  for (Index i : touched_) {
    if (!values_[i].is_zero()) entries.emplace_back(i, std::move(values_[i]));
    values_[i] = Scalar();
    used_[i] = 0;
  }
  touched_.clear();
  return SparseVec::from_entries(std::move(entries));
}

// ---------------------------------------------------------------------------
// BasedSpace

BasedSpace::BasedSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  index_.reserve(labels_.size());
  for (Index i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second)
      throw DimensionError("duplicate basis label '" + labels_[i] + "'");
  }
}

BasedSpace BasedSpace::numbered(const std::string& prefix, Index dim) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (Index i = 0; i < dim; ++i) labels.push_back(prefix + std::to_string(i));
  return BasedSpace(std::move(labels));
}

std::optional<Index> BasedSpace::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string format_vector(const SparseVec& v, const BasedSpace& space) {
  if (v.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [i, c] : v) {
    std::string name = i < space.dim() ? space.label(i) : "#" + std::to_string(i);
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first)
      out += c.sign() < 0 ? "-" : "";
    else
      out += c.sign() < 0 ? " - " : " + ";
    if (!mag.is_one()) out += mag.str() + "*";
    out += name;
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// RowSpace

RowSpace::RowSpace(Index ambient_dim, bool track_combinations)
    : ambient_dim_(ambient_dim), track_(track_combinations), row_of_pivot_(ambient_dim, -1) {}

SparseVec RowSpace::reduce(const SparseVec& v) const {
  SparseVec res = v;
  // Rows are fully reduced, so eliminating each pivot entry of the original
  // vector never reintroduces another pivot column.
  for (const auto& [i, c] : v) {
    if (i >= ambient_dim_) throw DimensionError("vector index outside ambient space");
    long r = row_of_pivot_[i];
    if (r >= 0) res.axpy(-c, rows_[static_cast<Index>(r)]);
  }
  return res;
}

std::optional<SparseVec> RowSpace::express(const SparseVec& v) const {
  if (!track_) throw Error("RowSpace::express requires combination tracking");
  SparseVec combo;
  for (const auto& [i, c] : v) {
    long r = row_of_pivot_.at(i);
    if (r < 0) continue;
    combo.axpy(c, combos_[static_cast<Index>(r)]);
  }
  if (!reduce(v).empty()) return std::nullopt;
  return combo;
}

bool RowSpace::insert(const SparseVec& v) {
  const Index gen = inserted_++;
  SparseVec res = v;
  SparseVec combo;
  if (track_) combo = SparseVec::unit(gen);
  for (const auto& [i, c] : v) {
    if (i >= ambient_dim_) throw DimensionError("vector index outside ambient space");
    long r = row_of_pivot_[i];
    if (r < 0) continue;
    res.axpy(-c, rows_[static_cast<Index>(r)]);
    if (track_) combo.axpy(-c, combos_[static_cast<Index>(r)]);
  }
  if (res.empty()) return false;

  const Index pivot = res.front().first;
  Scalar inv = Scalar(1) / res.front().second;
  res *= inv;
  if (track_) combo *= inv;

  for (Index r = 0; r < rows_.size(); ++r) {
    const Scalar* x = rows_[r].find(pivot);
    if (!x) continue;
    Scalar factor = -*x;
    rows_[r].axpy(factor, res);
    if (track_) combos_[r].axpy(factor, combo);
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  pivot_of_row_.push_back(pivot);
  rows_.push_back(std::move(res));
  if (track_) combos_.push_back(std::move(combo));
  return true;
}

std::vector<Index> RowSpace::pivots() const {
  std::vector<Index> p = pivot_of_row_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<SparseVec> RowSpace::rows() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (Index p : pivots()) out.push_back(rows_[static_cast<Index>(row_of_pivot_[p])]);
  return out;
}

RrefResult rref(const std::vector<SparseVec>& rows, Index num_cols) {
  RowSpace space(num_cols);
  for (const auto& r : rows) space.insert(r);
  RrefResult out;
  out.rows = space.rows();
  out.rank = space.rank();
  out.pivots = space.pivots();
  return out;
}

// ---------------------------------------------------------------------------
// Subspace / LinearMap

bool Subspace::contains(const SparseVec& v) const {
  RowSpace space(ambient.dim());
  for (const auto& r : basis_rows) space.insert(r);
  return space.contains(v);
}

Subspace Subspace::span(const BasedSpace& ambient, const std::vector<SparseVec>& vectors) {
  RowSpace space(ambient.dim());
  for (const auto& v : vectors) space.insert(v);
  return {ambient, space.rows()};
}

Subspace Subspace::whole(const BasedSpace& ambient) {
  Subspace s{ambient, {}};
  for (Index i = 0; i < ambient.dim(); ++i) s.basis_rows.push_back(SparseVec::unit(i));
  return s;
}

LinearMap LinearMap::identity(const BasedSpace& space) {
  LinearMap m{space, space, {}};
  m.columns.reserve(space.dim());
  for (Index i = 0; i < space.dim(); ++i) m.columns.push_back(SparseVec::unit(i));
  return m;
}

LinearMap LinearMap::zero(const BasedSpace& source, const BasedSpace& target) {
  return {source, target, std::vector<SparseVec>(source.dim())};
}

SparseVec LinearMap::apply(const SparseVec& v) const {
  if (!v.empty() && v.back().first >= source.dim())
    throw DimensionError("linear map applied to a vector outside its source");
  if (v.nnz() <= 4) {
    SparseVec out;
    for (const auto& [i, c] : v) out.axpy(c, columns[i]);
    return out;
  }
  Accumulator acc(target.dim());
  for (const auto& [i, c] : v) acc.add(columns[i], c);
  return acc.take();
}

std::vector<SparseVec> LinearMap::rows() const {
  std::vector<std::vector<SparseVec::Entry>> buckets(target.dim());
  for (Index j = 0; j < columns.size(); ++j)
    for (const auto& [i, c] : columns[j]) buckets[i].emplace_back(j, c);
  std::vector<SparseVec> out;
  out.reserve(target.dim());
  for (auto& b : buckets) out.push_back(SparseVec::from_entries(std::move(b)));
  return out;
}

Index LinearMap::rank() const {
  RowSpace space(target.dim());
  for (const auto& c : columns) space.insert(c);
  return space.rank();
}

LinearMap compose(const LinearMap& after, const LinearMap& before) {
  if (after.source.dim() != before.target.dim())
    throw DimensionError("cannot compose maps: inner dimensions differ");
  LinearMap out{before.source, after.target, {}};
  out.columns.reserve(before.columns.size());
  for (const auto& c : before.columns) out.columns.push_back(after.apply(c));
  return out;
}

Subspace kernel_basis(const LinearMap& map) {
  const Index n = map.source.dim();
  RrefResult r = rref(map.rows(), n);
  std::vector<char> is_pivot(n, 0);
  for (Index p : r.pivots) is_pivot[p] = 1;
  std::vector<SparseVec> vectors;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v = SparseVec::unit(f);
    for (Index k = 0; k < r.rows.size(); ++k) {
      const Scalar* x = r.rows[k].find(f);
      if (x) v.add(r.pivots[k], -*x);
    }
    vectors.push_back(std::move(v));
  }
  return Subspace::span(map.source, vectors);
}

Subspace image(const LinearMap& map) { return Subspace::span(map.target, map.columns); }

// ---------------------------------------------------------------------------
// QuotientSpace

QuotientSpace::QuotientSpace(const BasedSpace& ambient, const Subspace& sub) : sub_(ambient.dim()) {
  if (sub.ambient.dim() != ambient.dim())
    throw DimensionError("subspace does not live in the given ambient space");
  for (const auto& r : sub.basis_rows) {
    if (!r.empty() && r.back().first >= ambient.dim())
      throw DimensionError("subspace row exceeds ambient dimension");
    sub_.insert(r);
  }
  quotient_index_.assign(ambient.dim(), -1);
  std::vector<std::string> labels;
  for (Index c = 0; c < ambient.dim(); ++c) {
    if (sub_.is_pivot(c)) continue;
    quotient_index_[c] = static_cast<long>(representatives_.size());
    representatives_.push_back(c);
    labels.push_back(ambient.label(c));
  }
  quotient_ = BasedSpace(std::move(labels));

  proj_ = LinearMap{ambient, quotient_, {}};
  proj_.columns.reserve(ambient.dim());
  for (Index c = 0; c < ambient.dim(); ++c) proj_.columns.push_back(project(SparseVec::unit(c)));
  section_ = LinearMap{quotient_, ambient, {}};
  for (Index q = 0; q < representatives_.size(); ++q)
    section_.columns.push_back(SparseVec::unit(representatives_[q]));
}

SparseVec QuotientSpace::project(const SparseVec& v) const {
  SparseVec r = sub_.reduce(v);
  std::vector<SparseVec::Entry> out;
  out.reserve(r.nnz());
  for (const auto& [i, c] : r) out.emplace_back(static_cast<Index>(quotient_index_[i]), c);
  return SparseVec::from_entries(std::move(out));
}

QuotientSpace quotient_space(const BasedSpace& ambient, const Subspace& sub) {
  return QuotientSpace(ambient, sub);
}

// ---------------------------------------------------------------------------
// WedgeSquare

WedgeSquare::WedgeSquare(const BasedSpace& base) : n_(base.dim()) {
  std::vector<std::string> labels;
  row_offset_.resize(n_ + 1, 0);
  for (Index i = 0; i < n_; ++i) {
    row_offset_[i] = pairs_.size();
    for (Index j = i + 1; j < n_; ++j) {
      pairs_.emplace_back(i, j);
      labels.push_back(base.label(i) + "^" + base.label(j));
    }
  }
  row_offset_[n_] = pairs_.size();
  space_ = BasedSpace(std::move(labels));
}

Index WedgeSquare::index(Index i, Index j) const {
  if (i >= j || j >= n_) throw DimensionError("wedge index requires i < j < dim");
  return row_offset_[i] + (j - i - 1);
}

SparseVec WedgeSquare::embed_basis(Index i, Index j) const {
  if (i == j) return {};
  if (i < j) return SparseVec::unit(index(i, j));
  return SparseVec::unit(index(j, i), Scalar(-1));
}

SparseVec WedgeSquare::embed(const SparseVec& x, const SparseVec& y) const {
  std::vector<SparseVec::Entry> out;
  out.reserve(x.nnz() * y.nnz());
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) {
      if (i == j) continue;
      if (i < j)
        out.emplace_back(index(i, j), a * b);
      else
        out.emplace_back(index(j, i), -(a * b));
    }
  return SparseVec::from_entries(std::move(out));
}

}  // namespace tkk
