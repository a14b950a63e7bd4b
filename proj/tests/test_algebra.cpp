#include <catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "tkk/algebra.hpp"
#include "tkk/spec_io.hpp"

using namespace tkk;

namespace {

SparseVec e(Index i) { return SparseVec::unit(i); }

Index idx(const Algebra& a, const std::string& label) { return *a.space.find(label); }

Algebra perturbed(const Algebra& a, Index i, Index j, Index k) {
  Algebra b = a;
  b.table.add(i, j, k, 1);
  b.kind = AlgebraKind::untagged;
  return b;
}

std::vector<Algebra> corpus() {
  std::vector<Algebra> out;
  for (const auto& n : fixture_names()) out.push_back(fixture(n));
  out.push_back(grassmann(3));
  return out;
}

// Jacobi sums over all basis triples, dense.
bool jacobi_oracle(const Algebra& a) {
  auto c = oracle::cube(a);
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t t = 0; t < n; ++t) {
          mpq_class s = 0;
          for (std::size_t m = 0; m < n; ++m)
            s += c[y][z][m] * c[x][m][t] + c[z][x][m] * c[y][m][t] + c[x][y][m] * c[z][m][t];
          if (s != 0) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("make_algebra examples") {
  StructureTable t(1);
  t.add(0, 0, 0, 1);
  Algebra a = make_algebra("one", BasedSpace({"e0"}), t, AlgebraKind::associative);
  REQUIRE(a.unit);
  CHECK(*a.unit == e(0));

  Algebra m = matrix_algebra(scalar_algebra(), 2);
  try {
    make_algebra("M2", m.space, m.table, AlgebraKind::jordan);
    FAIL("accepted a noncommutative table as jordan");
  } catch (const ValidationError& err) {
    const auto& w = err.report().witness;
    REQUIRE(w);
    CHECK(w->lhs != w->rhs);
    // first failing pair in lexicographic order
    CHECK(w->inputs[0] == e(idx(m, "e11(1)")));
    CHECK(w->inputs[1] == e(idx(m, "e12(1)")));
  }

  StructureTable bad(2);
  bad.add(0, 0, 1, 1);
  CHECK_THROWS_AS(make_algebra("bad", BasedSpace({"e0", "e1"}), bad, AlgebraKind::lie), ValidationError);
}

TEST_CASE("product_eval examples") {
  Algebra m = matrix_algebra(scalar_algebra(), 2);
  CHECK(product_eval(m, e(idx(m, "e12(1)")), e(idx(m, "e21(1)"))) == e(idx(m, "e11(1)")));
  CHECK(product_eval(m, SparseVec{}, e(1)).empty());
  CHECK_THROWS_AS(product_eval(m, e(7), e(0)), DimensionError);
  Algebra g = grassmann(2);
  const Index e1 = idx(g, "e1"), e2 = idx(g, "e2"), e12 = idx(g, "e1e2");
  CHECK(product_eval(g, e(e1), e(e2)) == e(e12));
  CHECK(product_eval(g, e(e2), e(e1)) == -e(e12));
}

TEST_CASE("check_identity examples") {
  Algebra m = matrix_algebra(scalar_algebra(), 2);
  CHECK(check_identity(plus_algebra(m), Identity::jordan).holds);
  CHECK(check_identity(m, Identity::associativity).holds);

  Algebra sl2 = sl_n(scalar_algebra(), 2).lie;
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index k = 0; k < 3; ++k) {
        Algebra p = perturbed(sl2, i, j, k);
        IdentityReport r = check_identity(p, Identity::jacobi);
        CHECK(r.holds == jacobi_oracle(p));
        if (!r.holds) {
          REQUIRE(r.witness);
          CHECK(r.witness->lhs != r.witness->rhs);
        }
      }
  // the perturbation +1 on [e12, h] is caught
  CHECK_FALSE(check_identity(perturbed(sl2, 0, 2, 0), Identity::jacobi).holds);
}

TEST_CASE("plus algebras of the corpus are Jordan; associative corpus passes") {
  for (const Algebra& a : corpus()) {
    CHECK(check_identity(a, Identity::associativity).holds);
    Algebra p = plus_algebra(a);
    CHECK(p.kind == AlgebraKind::jordan);
    CHECK(check_identity(p, Identity::jordan).holds);
    CHECK(check_identity(p, Identity::power_linearized).holds);
  }
}

TEST_CASE("Jordan checker rejects sampled single-entry perturbations") {
  Algebra p = plus_algebra(matrix_algebra(scalar_algebra(), 2));
  std::mt19937 rng(3);
  std::uniform_int_distribution<Index> pick(0, p.dim() - 1);
  int tried = 0;
  while (tried < 25) {
    Index i = pick(rng), j = pick(rng), k = pick(rng);
    if (i == j) continue;
    ++tried;
    IdentityReport r = check_identity(perturbed(p, i, j, k), Identity::jordan);
    CHECK_FALSE(r.holds);
    REQUIRE(r.witness);
    CHECK(r.witness->lhs != r.witness->rhs);
  }
}

TEST_CASE("commutator subspace") {
  CHECK(commutator_subspace(scalar_algebra()).dim() == 0);
  CHECK(commutator_subspace(fixture("double")).dim() == 0);
  CHECK(commutator_subspace(matrix_algebra(scalar_algebra(), 2)).dim() == 3);
  for (const Algebra& a : corpus()) {
    auto c = oracle::cube(a);
    oracle::Mat rows;
    for (Index i = 0; i < a.dim(); ++i)
      for (Index j = 0; j < a.dim(); ++j) {
        std::vector<mpq_class> r(a.dim());
        for (Index k = 0; k < a.dim(); ++k) r[k] = c[i][j][k] - c[j][i][k];
        rows.push_back(r);
      }
    CHECK(commutator_subspace(a).dim() == oracle::rank(rows));
  }
  CHECK(commutator_subspace(grassmann(2)).dim() == 1);
  CHECK_THROWS_AS(commutator_subspace(sl_n(scalar_algebra(), 2).lie), KindError);
}

TEST_CASE("matrix algebras") {
  Algebra k = scalar_algebra();
  CHECK(matrix_algebra(k, 2).dim() == 4);
  CHECK(matrix_algebra(k, 4).dim() == 16);
  Algebra m22 = matrix_algebra(matrix_algebra(k, 2), 2);
  Algebra m4 = matrix_algebra(k, 4);
  REQUIRE(m22.dim() == 16);
  // e_ij(e_pq) ↦ E_{2i+p, 2j+q}
  std::vector<Index> relabel(16);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index p = 0; p < 2; ++p)
        for (Index q = 0; q < 2; ++q) relabel[(i * 2 + j) * 4 + p * 2 + q] = (2 * i + p) * 4 + (2 * j + q);
  auto map = [&](const SparseVec& v) {
    std::vector<SparseVec::Entry> out;
    for (const auto& [x, c] : v) out.emplace_back(relabel[x], c);
    return SparseVec::from_entries(out);
  };
  for (Index a = 0; a < 16; ++a)
    for (Index b = 0; b < 16; ++b) CHECK(map(m22.table.at(a, b)) == m4.table.at(relabel[a], relabel[b]));
  CHECK(map(*m22.unit) == *m4.unit);
  CHECK_THROWS_AS(matrix_algebra(sl_n(k, 2).lie, 2), KindError);
}

TEST_CASE("sl_n") {
  Algebra k = scalar_algebra();
  CHECK(sl_n(k, 2).lie.dim() == 3);
  CHECK(sl_n(k, 4).lie.dim() == 15);
  CHECK(sl_n(matrix_algebra(k, 2), 2).lie.dim() == 15);
  for (const Algebra& a : corpus()) {
    if (a.dim() > 8) continue;
    for (int n : {2, 3}) {
      SlAlgebra sl = sl_n(a, n);
      CHECK(sl.lie.dim() == static_cast<Index>(n * n - 1) * a.dim() + commutator_subspace(a).dim());
      CHECK(check_identity(sl.lie, Identity::jacobi).holds);
      CHECK(sl_generated_equals_trace_subspace(sl));
    }
  }
  StructureTable t(1);
  Algebra zero = make_algebra("zero", BasedSpace({"z"}), t, AlgebraKind::associative);
  CHECK_THROWS_AS(sl_n(zero, 2), KindError);
  CHECK_THROWS_AS(sl_n(k, 1), DimensionError);
}

TEST_CASE("plus algebra examples") {
  Algebra d = fixture("double");
  CHECK(plus_algebra(d).table == d.table);
  Algebra m = matrix_algebra(scalar_algebra(), 2);
  Algebra p = plus_algebra(m);
  SparseVec half_id = Scalar(1, 2) * (e(idx(m, "e11(1)")) + e(idx(m, "e22(1)")));
  CHECK(p.product(e(idx(m, "e12(1)")), e(idx(m, "e21(1)"))) == half_id);
  Algebra g = plus_algebra(grassmann(2));
  CHECK(g.product(e(idx(g, "e1")), e(idx(g, "e2"))).empty());
}

TEST_CASE("truncated free algebras") {
  CHECK(truncated_free({"x", "y"}, 2).dim() == 7);
  std::vector<std::string> gens{"x", "y"};
  CHECK(truncated_free(gens, 2, {parse_nc_polynomial("xy - yx", gens)}).dim() == 6);
  Algebra dual = truncated_free({"x"}, 1, {parse_nc_polynomial("x^2", {"x"})});
  CHECK(dual.dim() == 2);
  CHECK(dual.product(e(1), e(1)).empty());
  CHECK(truncated_free(gens, 3).dim() == 15);
  CHECK(truncated_free(gens, 3, {parse_nc_polynomial("xy - yx", gens)}).dim() == 10);
  CHECK(truncated_free({"x"}, 3, {parse_nc_polynomial("x^2 - x^3", {"x"})}).dim() == 2);
  CHECK_THROWS_AS(truncated_free({"x"}, 2, {parse_nc_polynomial("x - 1", {"x"})}), ValidationError);
  CHECK_THROWS_AS(parse_nc_polynomial("xz", gens), ParseError);
  for (int d = 1; d <= 3; ++d) CHECK(check_identity(truncated_free(gens, d), Identity::associativity).holds);
}

TEST_CASE("grassmann") {
  Algebra g = grassmann(2);
  CHECK(g.dim() == 4);
  CHECK(g.unit);
  CHECK(grassmann(3).dim() == 8);
}

TEST_CASE("direct sums") {
  Algebra kk = fixture("double");
  CHECK(kk.dim() == 2);
  CHECK(*kk.unit == e(0) + e(1));
  Algebra s = sl_n(scalar_algebra(), 2).lie;
  Algebra ss = direct_sum(s, s);
  CHECK(ss.dim() == 6);
  CHECK(ss.kind == AlgebraKind::lie);
  Algebra m = matrix_algebra(scalar_algebra(), 2);
  Algebra km = direct_sum(scalar_algebra(), m);
  std::vector<SparseVec::Entry> u{{0, 1}};
  for (const auto& [i, c] : *m.unit) u.emplace_back(i + 1, c);
  CHECK(*km.unit == SparseVec::from_entries(u));
  CHECK_THROWS_AS(direct_sum(s, m), KindError);
}

TEST_CASE("Peirce decomposition") {
  Algebra k = scalar_algebra();
  for (const Algebra& a : {k, matrix_algebra(k, 2), fixture("dual")}) {
    Algebra m = matrix_algebra(a, 2);
    PeirceDecomposition pd = peirce_decompose(m);
    Index total = 0;
    std::vector<SparseVec> all;
    for (const auto& part : pd.parts) {
      CHECK(part.dim() == a.dim());
      total += part.dim();
      all.insert(all.end(), part.basis_rows.begin(), part.basis_rows.end());
    }
    CHECK(total == m.dim());
    CHECK(rref(all, m.dim()).rank == m.dim());
    // parts[0..3] = e11, e12, e21, e22
    for (const auto& x : pd.parts[1].basis_rows)
      for (const auto& y : pd.parts[2].basis_rows) {
        CHECK(pd.parts[0].contains(m.product(x, y)));
        CHECK(pd.parts[3].contains(m.product(y, x)));
      }
    for (const auto& x : pd.parts[1].basis_rows)
      for (const auto& y : pd.parts[1].basis_rows) CHECK(m.product(x, y).empty());
  }
  CHECK_THROWS_AS(peirce_decompose(k), KindError);
  CHECK_THROWS_AS(peirce_decompose(matrix_algebra(k, 3)), KindError);
}

TEST_CASE("unit detection") {
  CHECK(detect_unit(grassmann(2)) == SparseVec::unit(0));
  StructureTable t(1);
  Algebra zero = make_algebra("zero", BasedSpace({"z"}), t, AlgebraKind::associative);
  CHECK_FALSE(zero.unit);
}
