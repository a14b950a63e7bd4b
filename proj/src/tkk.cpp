#include "tkk/tkk.hpp"

#include <deque>
#include <random>

#include "tkk/log.hpp"

namespace tkk {

int GradedLie::degree(Index i) const {
  if (i < zero_offset()) return -1;
  if (i < plus_offset()) return 0;
  return 1;
}

BasedSpace tensor_square(const BasedSpace& space) {
  std::vector<std::string> labels;
  labels.reserve(space.dim() * space.dim());
  for (const auto& a : space.labels())
    for (const auto& b : space.labels()) labels.push_back(a + "(x)" + b);
  return BasedSpace(std::move(labels));
}

namespace {

SparseVec shifted(const SparseVec& v, Index offset, const Scalar& scale = 1) {
  std::vector<SparseVec::Entry> out;
  out.reserve(v.nnz());
  for (const auto& [i, c] : v) out.emplace_back(i + offset, scale.is_one() ? c : c * scale);
  return SparseVec::from_entries(std::move(out));
}

// x ⊗ e_d and e_c ⊗ x inside T⊗T.
void add_tensor_right(std::vector<SparseVec::Entry>& out, const SparseVec& x, Index d, Index n, const Scalar& s) {
  for (const auto& [i, c] : x) out.emplace_back(i * n + d, c * s);
}
void add_tensor_left(std::vector<SparseVec::Entry>& out, Index c0, const SparseVec& x, Index n, const Scalar& s) {
  for (const auto& [i, c] : x) out.emplace_back(c0 * n + i, c * s);
}

void require_jts(const TripleSystem& t) {
  IdentityReport r = check_jts(t);
  if (!r.holds)
    throw ValidationError("'" + t.name + "' is not a Jordan triple system: " + r.describe(t.space), r);
}

// Operator pair D(a⊗b) = (L(a,b), −L(b,a)) flattened into k^{2n²}; entry
// (row s, column c) of the first block sits at s*n + c.
std::vector<SparseVec> operator_pairs(const TripleSystem& t) {
  const Index n = t.dim();
  const Index nn = n * n;
  std::vector<SparseVec> d(nn);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      std::vector<SparseVec::Entry> out;
      for (Index c = 0; c < n; ++c) {
        for (const auto& [s, x] : t.at(a, b, c)) out.emplace_back(s * n + c, x);
        for (const auto& [s, x] : t.at(b, a, c)) out.emplace_back(nn + s * n + c, -x);
      }
      d[a * n + b] = SparseVec::from_entries(std::move(out));
    }
  return d;
}

struct GradedBuilder {
  Index n;
  Index m;
  StructureTable table;

  GradedBuilder(Index n_, Index m_) : n(n_), m(m_), table(2 * n_ + m_) {}
  Index minus(Index a) const { return a; }
  Index zero(Index q) const { return n + q; }
  Index plus(Index a) const { return n + m + a; }
  void set_pair(Index i, Index j, SparseVec v) {
    if (v.empty()) return;
    table.set(j, i, -v);
    table.set(i, j, std::move(v));
  }
};

GradedLie assemble(const std::string& name, const TripleSystem& t, const std::vector<std::string>& zero_labels,
                   StructureTable table, std::vector<SparseVec> t_columns, std::vector<Index> reps) {
  const Index n = t.dim();
  GradedLie k;
  std::vector<std::string> minus_labels, plus_labels;
  for (const auto& l : t.space.labels()) {
    minus_labels.push_back("x-(" + l + ")");
    plus_labels.push_back("x+(" + l + ")");
  }
  k.minus = BasedSpace(minus_labels);
  k.zero = BasedSpace(zero_labels);
  k.plus = BasedSpace(plus_labels);
  std::vector<std::string> all = minus_labels;
  all.insert(all.end(), zero_labels.begin(), zero_labels.end());
  all.insert(all.end(), plus_labels.begin(), plus_labels.end());
  BasedSpace total(std::move(all));
  try {
    k.lie = make_algebra(name, total, std::move(table), AlgebraKind::lie);
  } catch (const ValidationError& err) {
    throw ConsistencyError("TKK construction for '" + t.name + "' produced a non-Lie bracket: " + err.what());
  }
  k.embed_minus = LinearMap{t.space, total, {}};
  k.embed_plus = LinearMap{t.space, total, {}};
  for (Index a = 0; a < n; ++a) {
    k.embed_minus.columns.push_back(SparseVec::unit(a));
    k.embed_plus.columns.push_back(SparseVec::unit(n + k.zero.dim() + a));
  }
  k.t_map = LinearMap{tensor_square(t.space), total, std::move(t_columns)};
  k.zero_representatives = std::move(reps);
  return k;
}

}  // namespace

UniversalTkk universal_tkk(const TripleSystem& t, const TkkOptions& options) {
  require_jts(t);
  const Index n = t.dim();
  const Index nn = n * n;
  if (nn > options.max_dim)
    throw ResourceError("dim T(x)T = " + std::to_string(nn) + " exceeds the guard " + std::to_string(options.max_dim));
  log::info("universal_tkk: T = " + t.name + ", dim T(x)T = " + std::to_string(nn));

  // β on pure-tensor basis pairs.
  std::vector<SparseVec> beta(nn * nn);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d) {
          std::vector<SparseVec::Entry> out;
          add_tensor_right(out, t.at(a, b, c), d, n, 1);
          add_tensor_left(out, c, t.at(b, a, d), n, -1);
          beta[(a * n + b) * nn + (c * n + d)] = SparseVec::from_entries(std::move(out));
        }
  auto beta_at = [&](Index i, Index j) -> const SparseVec& { return beta[i * nn + j]; };

  const std::vector<SparseVec> dpairs = operator_pairs(t);
  Accumulator dacc(2 * nn);
  auto annihilates = [&](const SparseVec& w) {
    for (const auto& [i, c] : w) dacc.add(dpairs[i], c);
    return dacc.take().empty();
  };

  UniversalTkk result;
  ClosureStats& stats = result.stats;
  stats.tensor_dim = nn;
  RowSpace w(nn);
  std::deque<SparseVec> pending;
  auto seed = [&](const SparseVec& v) {
    if (v.empty() || !w.insert(v)) return;
    if (!annihilates(v))
      throw ConsistencyError("a defect of beta acts nontrivially on T; '" + t.name + "' violates the JTS identities");
    pending.push_back(v);
  };

  // Antisymmetry defects β(u,v) + β(v,u).
  for (Index u = 0; u < nn; ++u)
    for (Index v = u; v < nn; ++v) {
      ++stats.antisymmetry_defects;
      seed(beta_at(u, v) + beta_at(v, u));
    }

  // Jacobi defects. Modulo antisymmetry defects (and the closure) the Jacobi
  // defect is alternating, so u < v < w covers every basis triple.
  Accumulator acc(nn);
  auto jacobi = [&](Index u, Index v, Index x) {
    for (const auto& [c, s] : beta_at(u, v)) acc.add(beta_at(c, x), s);
    for (const auto& [c, s] : beta_at(v, x)) acc.add(beta_at(c, u), s);
    for (const auto& [c, s] : beta_at(x, u)) acc.add(beta_at(c, v), s);
    return acc.take();
  };
  if (options.fast && nn >= 3) {
    std::mt19937_64 rng(0x5eedULL);
    std::uniform_int_distribution<Index> pick(0, nn - 1);
    for (Index k = 0; k < 4 * nn; ++k) {
      Index a = pick(rng), b = pick(rng), c = pick(rng);
      if (a == b || b == c || a == c) continue;
      seed(jacobi(a, b, c));
    }
  }
  for (Index u = 0; u < nn; ++u)
    for (Index v = u + 1; v < nn; ++v)
      for (Index x = v + 1; x < nn; ++x) {
        ++stats.jacobi_triples;
        seed(jacobi(u, v, x));
      }
  stats.seed_rank = w.rank();
  log::info("universal_tkk: defect span dim " + std::to_string(stats.seed_rank));

  // Closure under β(basis, W) and β(W, basis).
  while (!pending.empty()) {
    SparseVec v = std::move(pending.front());
    pending.pop_front();
    ++stats.closure_steps;
    for (Index x = 0; x < nn; ++x) {
      for (const auto& [j, c] : v) acc.add(beta_at(x, j), c);
      seed(acc.take());
      for (const auto& [i, c] : v) acc.add(beta_at(i, x), c);
      seed(acc.take());
    }
  }
  stats.w_dim = w.rank();
  log::info("universal_tkk: W dim " + std::to_string(stats.w_dim) + " after " + std::to_string(stats.closure_steps) +
            " closure steps");

  const BasedSpace tt = tensor_square(t.space);
  result.w = Subspace{tt, w.rows()};
  for (const auto& row : result.w.basis_rows)
    if (!annihilates(row)) throw ConsistencyError("W contains an element acting nontrivially on T");
  QuotientSpace q(tt, result.w);
  const Index m = q.space().dim();

  GradedBuilder g(n, m);
  std::vector<Index> reps;
  std::vector<std::string> zero_labels;
  for (Index k = 0; k < m; ++k) {
    Index r = q.representative(k);
    reps.push_back(r);
    zero_labels.push_back("t(" + t.space.label(r / n) + "," + t.space.label(r % n) + ")");
  }
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      g.set_pair(g.plus(a), g.minus(b), shifted(q.project(SparseVec::unit(a * n + b)), n));
  for (Index k = 0; k < m; ++k) {
    const Index a = reps[k] / n, b = reps[k] % n;
    for (Index c = 0; c < n; ++c) {
      g.set_pair(g.zero(k), g.plus(c), shifted(t.at(a, b, c), n + m));
      g.set_pair(g.zero(k), g.minus(c), shifted(t.at(b, a, c), 0, -1));
    }
    for (Index l = k + 1; l < m; ++l) g.set_pair(g.zero(k), g.zero(l), shifted(q.project(beta_at(reps[k], reps[l])), n));
  }
  std::vector<SparseVec> t_columns;
  t_columns.reserve(nn);
  for (Index i = 0; i < nn; ++i) t_columns.push_back(shifted(q.project(SparseVec::unit(i)), n));

  result.k = assemble("K(" + t.name + ")", t, zero_labels, std::move(g.table), std::move(t_columns), std::move(reps));
  IdentityReport rel = check_tkk_relations(result.k, t);
  if (!rel.holds) throw ConsistencyError("universal TKK violates its defining relations: " + rel.describe(result.k.lie.space));
  IdentityReport grading = check_grading(result.k);
  if (!grading.holds) throw ConsistencyError("universal TKK is not 3-graded: " + grading.describe(result.k.lie.space));
  log::info("universal_tkk: dims " + std::to_string(n) + "/" + std::to_string(m) + "/" + std::to_string(n));
  return result;
}

GradedLie standard_tkk(const TripleSystem& t) {
  require_jts(t);
  const Index n = t.dim();
  const Index nn = n * n;
  const std::vector<SparseVec> dpairs = operator_pairs(t);

  RowSpace solver(2 * nn, true);
  std::vector<long> position(nn, -1);
  std::vector<Index> reps;
  for (Index i = 0; i < nn; ++i)
    if (solver.insert(dpairs[i])) {
      position[i] = static_cast<long>(reps.size());
      reps.push_back(i);
    }
  const Index m = reps.size();
  auto coords = [&](const SparseVec& op) {
    auto c = solver.express(op);
    if (!c) throw ConsistencyError("operator commutator leaves the span of the operator pairs");
    std::vector<SparseVec::Entry> out;
    for (const auto& [i, x] : *c) out.emplace_back(static_cast<Index>(position[i]), x);
    return SparseVec::from_entries(std::move(out));
  };
  // Operator pairs as maps: block 0 is L(a,b), block 1 is −L(b,a).
  auto apply_block = [&](Index rep, int block, const SparseVec& v) {
    const Index a = rep / n, b = rep % n;
    Accumulator acc(n);
    for (const auto& [c, x] : v) acc.add(block == 0 ? t.at(a, b, c) : t.at(b, a, c), block == 0 ? x : -x);
    return acc.take();
  };
  auto commutator = [&](Index p, Index r) {
    std::vector<SparseVec::Entry> out;
    for (int block = 0; block < 2; ++block)
      for (Index c = 0; c < n; ++c) {
        SparseVec ec = SparseVec::unit(c);
        SparseVec v = apply_block(p, block, apply_block(r, block, ec)) - apply_block(r, block, apply_block(p, block, ec));
        for (const auto& [s, x] : v) out.emplace_back(block * nn + s * n + c, x);
      }
    return SparseVec::from_entries(std::move(out));
  };

  GradedBuilder g(n, m);
  std::vector<std::string> zero_labels;
  for (Index r : reps) zero_labels.push_back("D(" + t.space.label(r / n) + "," + t.space.label(r % n) + ")");
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) g.set_pair(g.plus(a), g.minus(b), shifted(coords(dpairs[a * n + b]), n));
  for (Index k = 0; k < m; ++k) {
    const Index a = reps[k] / n, b = reps[k] % n;
    for (Index c = 0; c < n; ++c) {
      g.set_pair(g.zero(k), g.plus(c), shifted(t.at(a, b, c), n + m));
      g.set_pair(g.zero(k), g.minus(c), shifted(t.at(b, a, c), 0, -1));
    }
    for (Index l = k + 1; l < m; ++l) g.set_pair(g.zero(k), g.zero(l), shifted(coords(commutator(reps[k], reps[l])), n));
  }
  std::vector<SparseVec> t_columns;
  for (Index i = 0; i < nn; ++i) t_columns.push_back(shifted(coords(dpairs[i]), n));
  return assemble("Kstd(" + t.name + ")", t, zero_labels, std::move(g.table), std::move(t_columns), std::move(reps));
}

IdentityReport check_tkk_relations(const GradedLie& k, const TripleSystem& t) {
  const Index n = t.dim();
  const Algebra& L = k.lie;
  const Index P = k.plus_offset();
  Index count = 0;
  auto x_minus = [&](Index a) { return SparseVec::unit(a); };
  auto x_plus = [&](Index a) { return SparseVec::unit(P + a); };
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v) {
      for (int sigma = 0; sigma < 2; ++sigma) {
        ++count;
        SparseVec xu = sigma ? x_plus(u) : x_minus(u);
        SparseVec xv = sigma ? x_plus(v) : x_minus(v);
        SparseVec br = L.product(xu, xv);
        if (!br.empty()) return IdentityReport::failure("K1", {{xu, xv}, br, {}}, count);
      }
      for (Index w = 0; w < n; ++w) {
        ++count;
        SparseVec lhs = L.product(L.product(x_plus(u), x_minus(v)), x_plus(w));
        SparseVec rhs = shifted(t.at(u, v, w), P);
        if (lhs != rhs) return IdentityReport::failure("K2+", {{x_plus(u), x_minus(v), x_plus(w)}, lhs, rhs}, count);
        lhs = L.product(L.product(x_minus(u), x_plus(v)), x_minus(w));
        rhs = t.at(u, v, w);
        if (lhs != rhs) return IdentityReport::failure("K2-", {{x_minus(u), x_plus(v), x_minus(w)}, lhs, rhs}, count);
      }
    }
  return {"tkk-relations", true, std::nullopt, count};
}

IdentityReport check_grading(const GradedLie& k) {
  const Index dim = k.lie.dim();
  Index count = 0;
  for (Index i = 0; i < dim; ++i)
    for (Index j = 0; j < dim; ++j) {
      ++count;
      const int d = k.degree(i) + k.degree(j);
      for (const auto& [r, c] : k.lie.table.at(i, j)) {
        (void)c;
        if (d < -1 || d > 1 || k.degree(r) != d)
          return IdentityReport::failure("grading", {{SparseVec::unit(i), SparseVec::unit(j)}, k.lie.table.at(i, j), {}},
                                         count);
      }
    }
  return {"grading", true, std::nullopt, count};
}

LinearMap canonical_surjection(const GradedLie& universal, const GradedLie& standard) {
  if (universal.minus.dim() != standard.minus.dim() || universal.plus.dim() != standard.plus.dim())
    throw DimensionError("TKK algebras of different triple systems");
  LinearMap f{universal.lie.space, standard.lie.space, {}};
  const Index n = universal.minus.dim();
  for (Index a = 0; a < n; ++a) f.columns.push_back(SparseVec::unit(a));
  for (Index r : universal.zero_representatives) f.columns.push_back(standard.t_map.columns[r]);
  for (Index a = 0; a < n; ++a) f.columns.push_back(SparseVec::unit(standard.plus_offset() + a));
  return f;
}

LinearMap tkk_functor_map(const LinearMap& phi, const TripleSystem& from, const TripleSystem& to,
                          const GradedLie& k_from, const GradedLie& k_to) {
  IdentityReport hom = check_triple_homomorphism(phi, from, to);
  if (!hom.holds) throw ValidationError("map is not a triple homomorphism: " + hom.describe(from.space), hom);
  const Index n1 = from.dim(), n2 = to.dim();
  LinearMap f{k_from.lie.space, k_to.lie.space, {}};
  for (Index a = 0; a < n1; ++a) f.columns.push_back(shifted(phi.columns[a], 0));
  for (Index r : k_from.zero_representatives) {
    const SparseVec& pa = phi.columns[r / n1];
    const SparseVec& pb = phi.columns[r % n1];
    std::vector<SparseVec::Entry> tensor;
    for (const auto& [i, x] : pa)
      for (const auto& [j, y] : pb) tensor.emplace_back(i * n2 + j, x * y);
    f.columns.push_back(k_to.t_map.apply(SparseVec::from_entries(std::move(tensor))));
  }
  for (Index a = 0; a < n1; ++a) f.columns.push_back(shifted(phi.columns[a], k_to.plus_offset()));
  IdentityReport lie = check_lie_homomorphism(f, k_from.lie, k_to.lie);
  if (!lie.holds) throw ConsistencyError("K(phi) is not a Lie homomorphism: " + lie.describe(k_from.lie.space));
  return f;
}

IdentityReport check_lie_homomorphism(const LinearMap& f, const Algebra& from, const Algebra& to) {
  if (f.source.dim() != from.dim() || f.target.dim() != to.dim())
    throw DimensionError("map shape does not match the Lie algebras");
  const Index n = from.dim();
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      ++count;
      SparseVec lhs = f.apply(from.table.at(i, j));
      SparseVec rhs = to.product(f.columns[i], f.columns[j]);
      if (lhs != rhs)
        return IdentityReport::failure("lie-homomorphism", {{SparseVec::unit(i), SparseVec::unit(j)}, lhs, rhs}, count);
    }
  return {"lie-homomorphism", true, std::nullopt, count};
}

IdentityReport check_central(const Subspace& sub, const Algebra& lie) {
  Index count = 0;
  for (const auto& z : sub.basis_rows)
    for (Index i = 0; i < lie.dim(); ++i) {
      ++count;
      SparseVec br = lie.product_basis_right(z, i);
      if (!br.empty()) return IdentityReport::failure("centrality", {{z, SparseVec::unit(i)}, br, {}}, count);
    }
  return {"centrality", true, std::nullopt, count};
}

}  // namespace tkk
