#include <catch_amalgamated.hpp>

#include "oracle.hpp"
#include "tkk/homology.hpp"
#include "tkk/spec_io.hpp"

using namespace tkk;

namespace {

// HC1(A) = ker([,]: A⊗A → A) on the quotient of A⊗A by a⊗b + b⊗a and
// ab⊗c − a⊗bc + ca⊗b, built densely on its own.
std::size_t hc1_oracle(const Algebra& a) {
  const std::size_t d = a.dim();
  auto c = oracle::cube(a);
  oracle::Mat rel;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      std::vector<mpq_class> r(d * d);
      r[x * d + y] += 1;
      r[y * d + x] += 1;
      rel.push_back(r);
    }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        std::vector<mpq_class> r(d * d);
        for (std::size_t t = 0; t < d; ++t) {
          r[t * d + z] += c[x][y][t];
          r[x * d + t] -= c[y][z][t];
          r[t * d + y] += c[z][x][t];
        }
        rel.push_back(r);
      }
  const std::size_t rel_rank = oracle::rank(rel);
  // dim ker = dim quotient − rank of the induced commutator map; the
  // commutator kills every relation, so rank over A⊗A equals rank on the quotient.
  oracle::Mat comm;
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      std::vector<mpq_class> r(d);
      for (std::size_t t = 0; t < d; ++t) r[t] = c[x][y][t] - c[y][x][t];
      comm.push_back(r);
    }
  return d * d - rel_rank - oracle::rank(comm);
}

}  // namespace

TEST_CASE("known values") {
  CHECK(hc1_dim(scalar_algebra()) == 0);
  CHECK(hc1_dim(fixture("double")) == 0);
  CHECK(hc1_dim(fixture("mat2")) == 0);
  CHECK(hc1_dim(fixture("dual")) == 0);
  CHECK(hc1_dim(fixture("grassmann2")) == 2);
}

TEST_CASE("Connes complex against the invariant model") {
  for (const auto& name : fixture_names()) {
    Algebra a = fixture(name);
    ConnesComplex cx = connes_complex(a);
    CHECK(cx.is_complex());
    CHECK(hc1_dim(cx) == hc1_oracle(a));
    CHECK(cx.slices[0].quotient.dim() == a.dim());
  }
  CHECK(hc1_dim(grassmann(3)) == hc1_oracle(grassmann(3)));
}

TEST_CASE("additivity") {
  std::vector<Algebra> as{scalar_algebra(), fixture("dual"), fixture("grassmann2"), fixture("mat2")};
  for (std::size_t i = 0; i < as.size(); ++i)
    for (std::size_t j = i; j < as.size() && j < i + 2; ++j)
      CHECK(hc1_dim(direct_sum(as[i], as[j])) == hc1_dim(as[i]) + hc1_dim(as[j]));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(hc1_dim(sl_n(scalar_algebra(), 2).lie), KindError);
  StructureTable t(1);
  Algebra zero = make_algebra("zero", BasedSpace({"z"}), t, AlgebraKind::associative);
  CHECK_THROWS_AS(hc1_dim(zero), KindError);
}
