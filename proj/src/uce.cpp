#include "tkk/uce.hpp"

#include "tkk/log.hpp"

namespace tkk {

namespace {

SparseVec half(const SparseVec& v) { return Scalar(1, 2) * v; }

std::string witness_text(const IdentityReport& r, const BasedSpace& space) { return r.describe(space); }

}  // namespace

SparseVec CentralExtension::cls(const SparseVec& x, const SparseVec& y) const {
  return quotient->project(wedge->embed(x, y));
}

Index derived_rank(const Algebra& lie) {
  RowSpace rows(lie.dim());
  for (Index i = 0; i < lie.dim(); ++i)
    for (Index j = i + 1; j < lie.dim(); ++j) rows.insert(lie.table.at(i, j));
  return rows.rank();
}

CentralExtension build_uce(const Algebra& g) {
  if (g.kind != AlgebraKind::lie) throw KindError("build_uce requires a Lie algebra, got " + to_string(g.kind));
  const Index n = g.dim();
  const Index r = derived_rank(g);
  if (r < n)
    throw KindError("'" + g.name + "' is not perfect: rank [g,g] = " + std::to_string(r) + " < dim g = " +
                    std::to_string(n));

  auto wedge = std::make_shared<const WedgeSquare>(g.space);
  const Index wd = wedge->space().dim();
  log::info("build_uce: " + g.name + ", dim g = " + std::to_string(n) + ", dim wedge = " + std::to_string(wd));

  // B = span of x∧[y,z] + y∧[z,x] + z∧[x,y]; alternating, so i < j < k suffices.
  RowSpace b(wd);
  std::vector<SparseVec::Entry> terms;
  auto add_wedge = [&](Index i, const SparseVec& v) {
    for (const auto& [t, c] : v) {
      if (t == i) continue;
      if (i < t)
        terms.emplace_back(wedge->index(i, t), c);
      else
        terms.emplace_back(wedge->index(t, i), -c);
    }
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        terms.clear();
        add_wedge(i, g.table.at(j, k));
        add_wedge(j, g.table.at(k, i));
        add_wedge(k, g.table.at(i, j));
        if (terms.empty()) continue;
        b.insert(SparseVec::from_entries(terms));
      }
  log::info("build_uce: dim B = " + std::to_string(b.rank()));

  auto quotient = std::make_shared<const QuotientSpace>(wedge->space(), Subspace{wedge->space(), b.rows()});
  const Index m = quotient->space().dim();
  std::vector<std::pair<Index, Index>> reps;
  std::vector<std::string> labels;
  for (Index q = 0; q < m; ++q) {
    auto [i, j] = wedge->pair(quotient->representative(q));
    reps.emplace_back(i, j);
    labels.push_back("<" + g.space.label(i) + "^" + g.space.label(j) + ">");
  }
  StructureTable table(m);
  for (Index s = 0; s < m; ++s)
    for (Index t = s + 1; t < m; ++t) {
      SparseVec br = quotient->project(
          wedge->embed(g.table.at(reps[s].first, reps[s].second), g.table.at(reps[t].first, reps[t].second)));
      if (br.empty()) continue;
      table.set(t, s, -br);
      table.set(s, t, std::move(br));
    }

  CentralExtension e;
  BasedSpace space(std::move(labels));
  try {
    e.total = make_algebra("uce(" + g.name + ")", space, std::move(table), AlgebraKind::lie);
  } catch (const ValidationError& err) {
    throw ConsistencyError(std::string("uce bracket is not a Lie bracket: ") + err.what());
  }
  e.target = g;
  e.pi = LinearMap{space, g.space, {}};
  for (const auto& [i, j] : reps) e.pi.columns.push_back(g.table.at(i, j));
  e.kernel = kernel_basis(e.pi);
  e.wedge = wedge;
  e.quotient = quotient;

  if (e.pi.rank() != n) throw ConsistencyError("uce projection is not surjective");
  IdentityReport hom = check_lie_homomorphism(e.pi, e.total, g);
  if (!hom.holds) throw ConsistencyError("uce projection is not a homomorphism: " + hom.describe(space));
  IdentityReport central = check_central(e.kernel, e.total);
  if (!central.holds) throw ConsistencyError("uce kernel is not central: " + central.describe(space));
  if (derived_rank(e.total) != m) throw ConsistencyError("uce total space is not perfect");
  log::info("build_uce: dim uce = " + std::to_string(m) + ", H2 = " + std::to_string(e.h2_dim()));
  return e;
}

GeneratorLift canonical_lift(const CentralExtension& e, const SlAlgebra& sl, int i, int j, const SparseVec& a) {
  if (i == j || i < 0 || j < 0 || i >= sl.n || j >= sl.n) throw DimensionError("lift index out of range");
  GeneratorLift lift;
  lift.family = "X";
  lift.i = i;
  lift.j = j;
  lift.argument = format_vector(a, sl.base->space);
  lift.value = e.cls(half(sl.diagonal_h(i, j)), sl.elementary(i, j, a));
  return lift;
}

GeneratorLift canonical_lift(const CentralExtension& e, const SlAlgebra& sl, int i, int j, const std::string& label) {
  auto p = sl.base->space.find(label);
  if (!p) throw DimensionError("'" + label + "' is not a basis label of " + sl.base->name);
  return canonical_lift(e, sl, i, j, SparseVec::unit(*p));
}

HomReport verify_lie_hom(const LinearMap& f, const Algebra& from, const Algebra& to) {
  HomReport r;
  r.hom = check_lie_homomorphism(f, from, to);
  r.rank = f.rank();
  r.bijective = from.dim() == to.dim() && r.rank == from.dim();
  return r;
}

namespace {

// Lifts X_ij(e_p) for all i ≠ j and basis p, indexed [(i*n + j)*d + p].
std::vector<SparseVec> basis_lifts(const CentralExtension& e, const SlAlgebra& sl) {
  const int n = sl.n;
  const Index d = sl.base->dim();
  std::vector<SparseVec> out(static_cast<Index>(n * n) * d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Index p = 0; p < d; ++p)
        out[(static_cast<Index>(i * n + j)) * d + p] = canonical_lift(e, sl, i, j, SparseVec::unit(p)).value;
    }
  return out;
}

SparseVec lift_of(const std::vector<SparseVec>& lifts, const SlAlgebra& sl, int i, int j, const SparseVec& a) {
  const Index d = sl.base->dim();
  SparseVec out;
  for (const auto& [p, c] : a) out.axpy(c, lifts[static_cast<Index>(i * sl.n + j) * d + p]);
  return out;
}

struct Candidate {
  CandidateResult result;
  LinearMap phi;
};

// Φ on K(T) from images of x_u^+ and x_u^-; t(a⊗b) ↦ [Φx_a^+, Φx_b^-].
Candidate evaluate_candidate(const std::string& name, const CentralExtension& e, const UniversalTkk& k,
                             const std::vector<SparseVec>& plus, const std::vector<SparseVec>& minus) {
  const Index n = plus.size();
  const Algebra& L = e.total;
  Candidate c;
  c.result.name = name;
  c.phi = LinearMap{k.k.lie.space, L.space, {}};
  for (Index u = 0; u < n; ++u) c.phi.columns.push_back(minus[u]);
  for (Index r : k.k.zero_representatives) c.phi.columns.push_back(L.product(plus[r / n], minus[r % n]));
  for (Index u = 0; u < n; ++u) c.phi.columns.push_back(plus[u]);

  c.result.well_defined = true;
  for (const auto& w : k.w.basis_rows) {
    Accumulator acc(L.dim());
    for (const auto& [i, s] : w) acc.add(L.product(plus[i / n], minus[i % n]), s);
    SparseVec img = acc.take();
    if (!img.empty()) {
      c.result.well_defined = false;
      c.result.witness = "W element " + format_vector(w, k.w.ambient) + " maps to " + format_vector(img, L.space);
      break;
    }
  }
  c.result.hom = verify_lie_hom(c.phi, k.k.lie, L);
  if (c.result.witness.empty() && !c.result.hom.hom.holds)
    c.result.witness = witness_text(c.result.hom.hom, k.k.lie.space);
  return c;
}

// π∘Φ sends K₊ into the upper-right block and K₋ into the lower-left block.
bool blocks_consistent(const CentralExtension& e, const SlAlgebra& sl, const std::vector<SparseVec>& plus,
                       const std::vector<SparseVec>& minus) {
  const Index n = static_cast<Index>(sl.n), h = n / 2, d = sl.base->dim();
  auto in_block = [&](const SparseVec& v, bool upper) {
    SparseVec matrix = sl.embedding.apply(e.pi.apply(v));
    if (matrix.empty()) return false;
    for (const auto& [idx, c] : matrix) {
      (void)c;
      const Index i = idx / d / n, j = idx / d % n;
      if (upper ? !(i < h && j >= h) : !(i >= h && j < h)) return false;
    }
    return true;
  };
  for (const auto& v : plus)
    if (!in_block(v, true)) return false;
  for (const auto& v : minus)
    if (!in_block(v, false)) return false;
  return true;
}

void fill_from(IsoReport& report, const Candidate& c) {
  report.well_defined = c.result.well_defined;
  report.homomorphism = c.result.hom.hom.holds;
  report.bijective = report.dims_equal && c.result.hom.bijective;
  report.iso = report.dims_equal && report.well_defined && report.homomorphism && report.bijective &&
               report.grading_consistent;
  if (!c.result.witness.empty()) report.witness = c.result.witness;
}

}  // namespace

IsoReport verify_thm32(const Algebra& a, const TkkOptions& options) {
  IsoReport report;
  report.theorem = "thm32";
  report.base = a.name;
  SlAlgebra sl = sl_n(a, 2);
  CentralExtension e = build_uce(sl.lie);
  UniversalTkk k = universal_tkk(triple_from_associative(a), options);
  report.dim_uce = e.total.dim();
  report.dim_tkk = k.k.lie.dim();
  report.h2_dim = e.h2_dim();
  report.tkk_w_dim = k.stats.w_dim;
  report.dims_equal = report.dim_uce == report.dim_tkk;

  const Index d = a.dim();
  const std::vector<SparseVec> lifts = basis_lifts(e, sl);
  auto X = [&](int i, int j, const SparseVec& v) { return lift_of(lifts, sl, i, j, v); };
  std::vector<SparseVec> plus, minus;
  for (Index p = 0; p < d; ++p) {
    plus.push_back(X(0, 1, SparseVec::unit(p)));
    minus.push_back(X(1, 0, half(SparseVec::unit(p))));
  }
  report.grading_consistent = blocks_consistent(e, sl, plus, minus);
  Candidate c = evaluate_candidate("x-(a) -> X21(a/2)", e, k, plus, minus);
  report.candidates.push_back(c.result);
  report.chosen = c.result.name;
  fill_from(report, c);

  const Algebra& L = e.total;
  report.relation_abelian = report.relation_plus = report.relation_minus = report.relation_minus_literal = true;
  for (Index p = 0; p < d; ++p)
    for (Index q = 0; q < d; ++q) {
      const SparseVec ep = SparseVec::unit(p), eq = SparseVec::unit(q);
      if (!L.product(X(0, 1, ep), X(0, 1, eq)).empty() || !L.product(X(1, 0, ep), X(1, 0, eq)).empty())
        report.relation_abelian = false;
      const SparseVec t = L.product(X(0, 1, ep), X(1, 0, eq));
      const SparseVec ab = a.product(ep, eq), ba = a.product(eq, ep);
      for (Index r = 0; r < d; ++r) {
        const SparseVec ec = SparseVec::unit(r);
        const SparseVec abc_cba = a.product(ab, ec) + a.product(ec, ba);
        const SparseVec bac_cab = a.product(ba, ec) + a.product(ec, ab);
        if (L.product(t, X(0, 1, ec)) != X(0, 1, abc_cba)) report.relation_plus = false;
        const SparseVec lhs = L.product(t, X(1, 0, ec));
        if (lhs != -X(1, 0, bac_cab)) report.relation_minus = false;
        if (lhs != -X(0, 1, bac_cab)) report.relation_minus_literal = false;
      }
    }
  return report;
}

IsoReport verify_thm41(const Algebra& a, const TkkOptions& options) {
  IsoReport report;
  report.theorem = "thm41";
  report.base = a.name;
  SlAlgebra sl = sl_n(a, 4);
  CentralExtension e = build_uce(sl.lie);
  Algebra m2 = matrix_algebra(a, 2);
  UniversalTkk k = universal_tkk(triple_from_associative(m2), options);
  report.dim_uce = e.total.dim();
  report.dim_tkk = k.k.lie.dim();
  report.h2_dim = e.h2_dim();
  report.tkk_w_dim = k.stats.w_dim;
  report.dims_equal = report.dim_uce == report.dim_tkk;

  const Index d = a.dim();
  const std::vector<SparseVec> lifts = basis_lifts(e, sl);
  auto X = [&](int i, int j, const SparseVec& v) { return lift_of(lifts, sl, i, j, v); };
  // Basis of M₂(A): e_pq(a_r) at (p*2 + q)*d + r.
  std::vector<SparseVec> plus, natural, transposed;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (Index r = 0; r < d; ++r) {
        const SparseVec er = SparseVec::unit(r);
        plus.push_back(X(p, q + 2, er));
        natural.push_back(X(p + 2, q, half(er)));
        transposed.push_back(X(q + 2, p, half(er)));
      }
  Candidate first = evaluate_candidate("x-(e_pq(a)) -> X_{p+2,q}(a/2)", e, k, plus, natural);
  Candidate second = evaluate_candidate("x-(e_pq(a)) -> X_{q+2,p}(a/2)", e, k, plus, transposed);
  report.candidates = {first.result, second.result};
  auto passes = [](const Candidate& c) { return c.result.well_defined && c.result.hom.hom.holds; };
  const Candidate* chosen = passes(first) ? &first : passes(second) ? &second : nullptr;
  if (!chosen)
    throw ConsistencyError("no Peirce assignment gives a homomorphism: [" + first.result.name + "] " +
                           first.result.witness + "; [" + second.result.name + "] " + second.result.witness);
  report.chosen = chosen->result.name;
  report.grading_consistent = blocks_consistent(e, sl, plus, chosen == &first ? natural : transposed);
  fill_from(report, *chosen);
  return report;
}

IdentityReport steinberg_check(const CentralExtension& e, const SlAlgebra& sl) {
  const int n = sl.n;
  if (n < 3) throw DimensionError("steinberg_check requires n >= 3");
  const Algebra& A = *sl.base;
  const Algebra& L = e.total;
  const Index d = A.dim();
  const std::vector<SparseVec> lifts = basis_lifts(e, sl);
  auto X = [&](int i, int j, Index p) -> const SparseVec& { return lifts[static_cast<Index>(i * n + j) * d + p]; };
  Index count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        for (Index p = 0; p < d; ++p)
          for (Index q = 0; q < d; ++q) {
            ++count;
            SparseVec lhs = L.product(X(i, j, p), X(j, k, q));
            SparseVec rhs = lift_of(lifts, sl, i, k, A.table.at(p, q));
            if (lhs != rhs) return IdentityReport::failure("steinberg-chain", {{X(i, j, p), X(j, k, q)}, lhs, rhs}, count);
          }
      }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (i == j || k == l || j == k || i == l) continue;
          for (Index p = 0; p < d; ++p)
            for (Index q = 0; q < d; ++q) {
              ++count;
              SparseVec lhs = L.product(X(i, j, p), X(k, l, q));
              if (!lhs.empty())
                return IdentityReport::failure("steinberg-commuting", {{X(i, j, p), X(k, l, q)}, lhs, {}}, count);
            }
        }

  // The lifts generate: close their span under bracketing with the lifts.
  std::vector<SparseVec> gens;
  for (const auto& v : lifts)
    if (!v.empty()) gens.push_back(v);
  RowSpace span(L.dim());
  std::vector<SparseVec> frontier;
  for (const auto& g : gens)
    if (span.insert(g)) frontier.push_back(g);
  while (!frontier.empty()) {
    std::vector<SparseVec> next;
    for (const auto& g : gens)
      for (const auto& f : frontier) {
        ++count;
        SparseVec br = L.product(g, f);
        if (span.insert(br)) next.push_back(std::move(br));
      }
    frontier = std::move(next);
  }
  if (span.rank() != L.dim()) {
    SparseVec missing;
    for (Index i = 0; i < L.dim(); ++i)
      if (!span.contains(SparseVec::unit(i))) {
        missing = SparseVec::unit(i);
        break;
      }
    return IdentityReport::failure("steinberg-generation", {{missing}, {}, missing}, count);
  }
  return {"steinberg", true, std::nullopt, count};
}

std::vector<GrowthRow> growth_report(int d_max, Index guard) {
  if (d_max < 1) throw DimensionError("growth_report requires d_max >= 1");
  std::vector<GrowthRow> rows;
  for (int d = 1; d <= d_max; ++d) {
    Algebra a = truncated_free({"x", "y"}, d);
    SlAlgebra sl = sl_n(a, 2);
    const Index n = sl.lie.dim();
    const Index wedge = n * (n - 1) / 2;
    if (wedge > guard)
      throw ResourceError("growth_report: dim wedge^2 sl2 = " + std::to_string(wedge) + " at d = " + std::to_string(d) +
                          " exceeds the guard " + std::to_string(guard));
    CentralExtension e = build_uce(sl.lie);
    rows.push_back({d, a.dim(), n, e.h2_dim()});
  }
  return rows;
}

}  // namespace tkk
