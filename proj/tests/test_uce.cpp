#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "tkk/homology.hpp"
#include "tkk/spec_io.hpp"
#include "tkk/uce.hpp"

using namespace tkk;

namespace {

SparseVec e(Index i) { return SparseVec::unit(i); }

void check_extension(const CentralExtension& ce) {
  CHECK(ce.pi.rank() == ce.target.dim());
  CHECK(check_lie_homomorphism(ce.pi, ce.total, ce.target).holds);
  CHECK(check_central(ce.kernel, ce.total).holds);
  CHECK(derived_rank(ce.total) == ce.total.dim());
  CHECK(check_identity(ce.total, Identity::jacobi).holds);
  CHECK(ce.total.dim() == ce.target.dim() + ce.h2_dim());
}

}  // namespace

TEST_CASE("build_uce examples") {
  Algebra sl2 = sl_n(scalar_algebra(), 2).lie;
  CentralExtension a = build_uce(sl2);
  CHECK(a.h2_dim() == 0);
  CHECK(a.total.dim() == 3);
  check_extension(a);

  CentralExtension b = build_uce(sl_n(scalar_algebra(), 4).lie);
  CHECK(b.h2_dim() == 0);
  CHECK(b.total.dim() == 15);
  check_extension(b);

  StructureTable t(1);
  Algebra abelian = make_algebra("ab", BasedSpace({"z"}), t, AlgebraKind::lie);
  try {
    build_uce(abelian);
    FAIL("abelian algebra accepted");
  } catch (const KindError& err) {
    CHECK(std::string(err.what()).find("rank [g,g] = 0") != std::string::npos);
  }
  CHECK_THROWS_AS(build_uce(scalar_algebra()), KindError);
}

TEST_CASE("H2 agrees with the dense Chevalley-Eilenberg oracle") {
  for (const char* name : {"scalar", "dual", "double", "grassmann2", "mat2", "free2d2"}) {
    Algebra g = sl_n(fixture(name), 2).lie;
    CentralExtension ce = build_uce(g);
    check_extension(ce);
    CHECK(ce.h2_dim() == oracle::h2_dim(g));
  }
  for (const char* name : {"scalar", "dual"}) {
    Algebra g = sl_n(fixture(name), 3).lie;
    CHECK(build_uce(g).h2_dim() == oracle::h2_dim(g));
  }
}

TEST_CASE("canonical lifts") {
  SlAlgebra sl2 = sl_n(scalar_algebra(), 2);
  CentralExtension u2 = build_uce(sl2.lie);
  GeneratorLift x = canonical_lift(u2, sl2, 0, 1, "1");
  CHECK(u2.pi.apply(x.value) == sl2.elementary(0, 1, e(0)));

  SlAlgebra sl4 = sl_n(scalar_algebra(), 4);
  CentralExtension u4 = build_uce(sl4.lie);
  CHECK(u4.pi.apply(canonical_lift(u4, sl4, 0, 2, "1").value) == sl4.elementary(0, 2, e(0)));
  CHECK_THROWS_AS(canonical_lift(u4, sl4, 1, 1, "1"), DimensionError);
  CHECK_THROWS_AS(canonical_lift(u4, sl4, 0, 4, "1"), DimensionError);

  SlAlgebra sg = sl_n(fixture("grassmann2"), 4);
  CentralExtension ug = build_uce(sg.lie);
  const Index d = sg.base->dim();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      for (Index p = 0; p < d; ++p)
        CHECK(ug.pi.apply(canonical_lift(ug, sg, i, j, e(p)).value) == sg.elementary(i, j, e(p)));
      SparseVec a = e(1) + Scalar(3) * e(2), b = e(3) - e(0);
      CHECK(canonical_lift(ug, sg, i, j, a + b).value ==
            canonical_lift(ug, sg, i, j, a).value + canonical_lift(ug, sg, i, j, b).value);
    }
}

TEST_CASE("verify_lie_hom examples") {
  Algebra sl2 = sl_n(scalar_algebra(), 2).lie;
  HomReport id = verify_lie_hom(LinearMap::identity(sl2.space), sl2, sl2);
  CHECK(id.hom.holds);
  CHECK(id.bijective);
  HomReport zero = verify_lie_hom(LinearMap::zero(sl2.space, sl2.space), sl2, sl2);
  CHECK(zero.hom.holds);
  CHECK_FALSE(zero.bijective);
  // h ↔ e12
  LinearMap swap{sl2.space, sl2.space, {e(2), e(1), e(0)}};
  HomReport s = verify_lie_hom(swap, sl2, sl2);
  CHECK_FALSE(s.hom.holds);
  REQUIRE(s.hom.witness);
  CHECK(s.hom.witness->lhs != s.hom.witness->rhs);
  CHECK(s.bijective);
}

TEST_CASE("sl2 presentation against K(A+)") {
  struct Expected {
    const char* base;
    Index dim;
    Index h2;
  };
  for (const Expected& x : {Expected{"scalar", 3, 0}, Expected{"dual", 6, 0}, Expected{"grassmann2", 15, 2}}) {
    IsoReport r = verify_thm32(fixture(x.base));
    CHECK(r.iso);
    CHECK(r.dim_uce == x.dim);
    CHECK(r.dim_tkk == x.dim);
    CHECK(r.h2_dim == x.h2);
    CHECK(r.well_defined);
    CHECK(r.homomorphism);
    CHECK(r.bijective);
    CHECK(r.grading_consistent);
    CHECK(r.relation_abelian);
    CHECK(r.relation_plus);
    CHECK(r.relation_minus);
    CHECK_FALSE(r.relation_minus_literal);
  }
}

TEST_CASE("sl4 against K(M2(A)+)") {
  for (const char* base : {"scalar", "double", "dual"}) {
    IsoReport r = verify_thm41(fixture(base));
    CHECK(r.iso);
    CHECK(r.dim_uce == r.dim_tkk);
    CHECK(r.chosen == "x-(e_pq(a)) -> X_{p+2,q}(a/2)");
    REQUIRE(r.candidates.size() == 2);
    CHECK_FALSE(r.candidates[1].hom.hom.holds);
  }
  CHECK(verify_thm41(scalar_algebra()).dim_uce == 15);
}

TEST_CASE("Steinberg relations") {
  SlAlgebra sl4 = sl_n(scalar_algebra(), 4);
  CentralExtension u = build_uce(sl4.lie);
  auto X = [&](int i, int j, const SparseVec& a) { return canonical_lift(u, sl4, i, j, a).value; };
  CHECK(u.total.product(X(0, 1, e(0)), X(1, 2, e(0))) == X(0, 2, e(0)));
  CHECK(u.total.product(X(0, 1, e(0)), X(2, 3, e(0))).empty());
  CHECK(steinberg_check(u, sl4).holds);

  Algebra dual = fixture("dual");
  SlAlgebra sd = sl_n(dual, 4);
  CentralExtension ud = build_uce(sd.lie);
  const Index x = *dual.space.find("x");
  CHECK(ud.total.product(canonical_lift(ud, sd, 0, 1, e(x)).value, canonical_lift(ud, sd, 1, 2, e(x)).value).empty());
  CHECK(steinberg_check(ud, sd).holds);

  CHECK_THROWS_AS(steinberg_check(build_uce(sl_n(scalar_algebra(), 2).lie), sl_n(scalar_algebra(), 2)), DimensionError);
}

TEST_CASE("sl4 kernel matches HC1") {
  for (const char* name : {"scalar", "double", "dual", "grassmann2"}) {
    Algebra a = fixture(name);
    CHECK(build_uce(sl_n(a, 4).lie).h2_dim() == hc1_dim(a));
  }
}

TEST_CASE("growth report") {
  std::vector<GrowthRow> rows = growth_report(2);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].d == 1);
  CHECK(rows[0].dim_a == 3);
  CHECK(rows[1].dim_a == 7);
  CHECK(rows[0].dim_sl2 <= rows[1].dim_sl2);
  for (const auto& r : rows) CHECK(r.h2 == oracle::h2_dim(sl_n(truncated_free({"x", "y"}, r.d), 2).lie));
  CHECK_THROWS_AS(growth_report(3, 100), ResourceError);
}
