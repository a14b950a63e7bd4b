#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "tkk/spec_io.hpp"
#include "tkk/tkk.hpp"

using namespace tkk;

namespace {

SparseVec e(Index i) { return SparseVec::unit(i); }

TripleSystem special(const std::string& name) { return triple_from_associative(fixture(name)); }

void check_graded(const GradedLie& k, const TripleSystem& t) {
  CHECK(check_identity(k.lie, Identity::jacobi).holds);
  CHECK(check_identity(k.lie, Identity::anticommutativity).holds);
  CHECK(check_grading(k).holds);
  CHECK(check_tkk_relations(k, t).holds);
  CHECK(image(k.t_map).dim() == k.zero.dim());
  CHECK(k.embed_plus.rank() == t.dim());
  CHECK(k.embed_minus.rank() == t.dim());
}

}  // namespace

TEST_CASE("TKK of the one-dimensional triple is sl2") {
  TripleSystem t = special("scalar");
  UniversalTkk u = universal_tkk(t);
  GradedLie s = standard_tkk(t);
  CHECK(u.k.lie.dim() == 3);
  CHECK(s.lie.dim() == 3);
  check_graded(u.k, t);
  check_graded(s, t);

  // explicit base change to sl2(k) = span{e12, e21, h}: x+ ↦ e12, x- ↦ e21/2, t ↦ h/2
  Algebra sl2 = sl_n(scalar_algebra(), 2).lie;
  LinearMap f{u.k.lie.space, sl2.space, {Scalar(1, 2) * e(1), Scalar(1, 2) * e(2), e(0)}};
  CHECK(check_lie_homomorphism(f, u.k.lie, sl2).holds);
  CHECK(f.rank() == 3);
}

TEST_CASE("standard TKK of M2(k)+ has dimension 15") {
  Algebra m = fixture("mat2");
  TripleSystem t = triple_from_jordan(plus_algebra(m));
  GradedLie s = standard_tkk(t);
  CHECK(s.lie.dim() == 15);
  CHECK(s.zero.dim() == 7);
  check_graded(s, t);
  CHECK(oracle::h2_dim(s.lie) == 0);
  // [K1, K1] = 0
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) CHECK(s.lie.table.at(s.plus_offset() + a, s.plus_offset() + b).empty());
}

TEST_CASE("universal over standard: central kernel, frozen dimensions") {
  struct Expected {
    const char* base;
    Index zero_universal;
    Index zero_standard;
  };
  // frozen from the closure computation, cross-checked against dim uce(sl2(A)) in test_uce
  for (const Expected& x : {Expected{"scalar", 1, 1}, Expected{"dual", 2, 2}, Expected{"double", 2, 2},
                            Expected{"grassmann2", 7, 4}, Expected{"mat2", 7, 7}, Expected{"free2d2", 12, 7}}) {
    TripleSystem t = special(x.base);
    UniversalTkk u = universal_tkk(t);
    GradedLie s = standard_tkk(t);
    check_graded(u.k, t);
    check_graded(s, t);
    CHECK(u.k.zero.dim() == x.zero_universal);
    CHECK(s.zero.dim() == x.zero_standard);
    CHECK(u.k.zero.dim() >= s.zero.dim());
    CHECK(u.stats.w_dim + u.k.zero.dim() == t.dim() * t.dim());

    LinearMap f = canonical_surjection(u.k, s);
    CHECK(check_lie_homomorphism(f, u.k.lie, s.lie).holds);
    CHECK(f.rank() == s.lie.dim());
    Subspace ker = kernel_basis(f);
    CHECK(ker.dim() == u.k.zero.dim() - s.zero.dim());
    CHECK(check_central(ker, u.k.lie).holds);
    // restricted to K±1 the surjection is bijective
    for (Index a = 0; a < t.dim(); ++a) {
      CHECK(f.columns[a] == e(a));
      CHECK(f.columns[u.k.plus_offset() + a] == e(s.plus_offset() + a));
    }
  }
}

TEST_CASE("W lies in the kernel of the operator-pair map") {
  TripleSystem t = special("free2d2");
  UniversalTkk u = universal_tkk(t);
  GradedLie s = standard_tkk(t);
  for (const auto& w : u.w.basis_rows) CHECK(s.t_map.apply(w).empty());
}

TEST_CASE("fast mode gives the same algebra") {
  TripleSystem t = special("grassmann2");
  UniversalTkk a = universal_tkk(t);
  UniversalTkk b = universal_tkk(t, TkkOptions{true, 20000});
  CHECK(a.w.basis_rows == b.w.basis_rows);
  CHECK(a.k.lie.table == b.k.lie.table);
}

TEST_CASE("resource guard and precondition") {
  CHECK_THROWS_AS(universal_tkk(special("mat2"), TkkOptions{false, 10}), ResourceError);
  TripleSystem bad = special("double");
  bad.at(0, 0, 1) += e(0);
  bad.at(1, 0, 0) += e(0);
  CHECK_THROWS_AS(universal_tkk(bad), ValidationError);
  CHECK_THROWS_AS(standard_tkk(bad), ValidationError);
}

TEST_CASE("functoriality") {
  Algebra k = scalar_algebra(), kk = fixture("double"), m = fixture("mat2");
  TripleSystem t1 = triple_from_associative(k), t2 = triple_from_associative(kk), t3 = triple_from_associative(m);
  UniversalTkk k1 = universal_tkk(t1), k2 = universal_tkk(t2), k3 = universal_tkk(t3);

  LinearMap id2 = LinearMap::identity(t2.space);
  CHECK(tkk_functor_map(id2, t2, t2, k2.k, k2.k) == LinearMap::identity(k2.k.lie.space));

  LinearMap zero = LinearMap::zero(t2.space, t3.space);
  LinearMap kz = tkk_functor_map(zero, t2, t3, k2.k, k3.k);
  for (const auto& c : kz.columns) CHECK(c.empty());

  // φ: k → k⊕k diagonal; ψ: k⊕k → M2(k), (a,b) ↦ diag(a,b)
  const Index e11 = *m.space.find("e11(1)"), e22 = *m.space.find("e22(1)");
  LinearMap phi{t1.space, t2.space, {e(0) + e(1)}};
  LinearMap psi{t2.space, t3.space, {e(e11), e(e22)}};
  LinearMap kphi = tkk_functor_map(phi, t1, t2, k1.k, k2.k);
  LinearMap kpsi = tkk_functor_map(psi, t2, t3, k2.k, k3.k);
  LinearMap kcomp = tkk_functor_map(compose(psi, phi), t1, t3, k1.k, k3.k);
  CHECK(kcomp == compose(kpsi, kphi));

  LinearMap not_hom{t1.space, t2.space, {Scalar(2) * e(0)}};
  CHECK_THROWS_AS(tkk_functor_map(not_hom, t1, t2, k1.k, k2.k), ValidationError);
}
