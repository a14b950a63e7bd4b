#include "tkk/homology.hpp"

#include <memory>

namespace tkk {

namespace {

std::vector<Index> digits(Index idx, Index d, int count) {
  std::vector<Index> out(count);
  for (int i = count - 1; i >= 0; --i) {
    out[i] = idx % d;
    idx /= d;
  }
  return out;
}

Index encode(const std::vector<Index>& ds, Index d) {
  Index idx = 0;
  for (Index x : ds) idx = idx * d + x;
  return idx;
}

BasedSpace tensor_power(const BasedSpace& space, int count) {
  std::vector<std::string> labels{""};
  for (int k = 0; k < count; ++k) {
    std::vector<std::string> next;
    for (const auto& l : labels)
      for (const auto& s : space.labels()) next.push_back(l.empty() ? s : l + "(x)" + s);
    labels = std::move(next);
  }
  return BasedSpace(std::move(labels));
}

// Tensor of vectors v_0 ⊗ ... ⊗ v_m in A^{⊗(m+1)}.
SparseVec tensor(const std::vector<SparseVec>& factors, Index d) {
  std::vector<SparseVec::Entry> acc{{0, Scalar(1)}};
  for (const auto& f : factors) {
    std::vector<SparseVec::Entry> next;
    for (const auto& [i, c] : acc)
      for (const auto& [j, x] : f) next.emplace_back(i * d + j, c * x);
    acc = std::move(next);
  }
  return SparseVec::from_entries(std::move(acc));
}

}  // namespace

ConnesComplex connes_complex(const Algebra& a) {
  if (a.kind != AlgebraKind::associative)
    throw KindError("cyclic homology requires an associative algebra, got " + to_string(a.kind));
  if (!a.unit) throw KindError("cyclic homology requires a unital algebra; '" + a.name + "' has no unit");
  const Index d = a.dim();
  ConnesComplex cx;
  std::array<std::shared_ptr<QuotientSpace>, 3> quotients;
  for (int n = 0; n <= 2; ++n) {
    ConnesSlice& s = cx.slices[n];
    s.level = n;
    s.tensor = tensor_power(a.space, n + 1);
    // λ(a_0 ⊗ ... ⊗ a_n) = (−1)^n a_n ⊗ a_0 ⊗ ... ⊗ a_{n−1}
    const Scalar sign = n % 2 ? Scalar(-1) : Scalar(1);
    std::vector<SparseVec> rel;
    for (Index idx = 0; idx < s.tensor.dim(); ++idx) {
      std::vector<Index> ds = digits(idx, d, n + 1);
      std::vector<Index> rot(ds.size());
      rot[0] = ds[n];
      for (int k = 0; k < n; ++k) rot[k + 1] = ds[k];
      SparseVec v = SparseVec::unit(idx);
      v.add(encode(rot, d), -sign);
      rel.push_back(std::move(v));
    }
    s.relations = Subspace::span(s.tensor, rel);
    quotients[n] = std::make_shared<QuotientSpace>(s.tensor, s.relations);
    s.quotient = quotients[n]->space();
  }
  auto e = [](Index i) { return SparseVec::unit(i); };
  for (int n = 1; n <= 2; ++n) {
    ConnesSlice& s = cx.slices[n];
    const QuotientSpace& src = *quotients[n];
    const QuotientSpace& dst = *quotients[n - 1];
    s.boundary = LinearMap{s.quotient, cx.slices[n - 1].quotient, {}};
    for (Index q = 0; q < s.quotient.dim(); ++q) {
      std::vector<Index> ds = digits(src.representative(q), d, n + 1);
      SparseVec img;
      if (n == 1) {
        img = a.table.at(ds[0], ds[1]) - a.table.at(ds[1], ds[0]);
      } else {
        img = tensor({a.table.at(ds[0], ds[1]), e(ds[2])}, d) - tensor({e(ds[0]), a.table.at(ds[1], ds[2])}, d) +
              tensor({a.table.at(ds[2], ds[0]), e(ds[1])}, d);
      }
      s.boundary.columns.push_back(dst.project(img));
    }
  }
  cx.slices[0].boundary = LinearMap::zero(cx.slices[0].quotient, BasedSpace());
  return cx;
}

bool ConnesComplex::is_complex() const {
  LinearMap bb = compose(slices[1].boundary, slices[2].boundary);
  for (const auto& c : bb.columns)
    if (!c.empty()) return false;
  return true;
}

Index hc1_dim(const ConnesComplex& c) {
  if (!c.is_complex()) throw ConsistencyError("Connes boundary does not square to zero");
  const Index c1 = c.slices[1].quotient.dim();
  return c1 - c.slices[1].boundary.rank() - c.slices[2].boundary.rank();
}

Index hc1_dim(const Algebra& a) { return hc1_dim(connes_complex(a)); }

}  // namespace tkk
