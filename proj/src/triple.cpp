#include "tkk/triple.hpp"

#include <array>

namespace tkk {

SparseVec TripleSystem::eval(const SparseVec& x, const SparseVec& y, const SparseVec& z) const {
  Accumulator acc(dim());
  for (const auto& [u, a] : x)
    for (const auto& [v, b] : y) {
      Scalar ab = a * b;
      for (const auto& [w, c] : z) acc.add(at(u, v, w), ab * c);
    }
  return acc.take();
}

IdentityReport check_outer_symmetry(const TripleSystem& t) {
  const Index n = t.dim();
  Index count = 0;
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      for (Index w = u + 1; w < n; ++w) {
        ++count;
        if (t.at(u, v, w) != t.at(w, v, u))
          return IdentityReport::failure(
              "outer-symmetry", {{SparseVec::unit(u), SparseVec::unit(v), SparseVec::unit(w)}, t.at(u, v, w), t.at(w, v, u)},
              count);
      }
  return {"outer-symmetry", true, std::nullopt, count};
}

TripleSystem make_triple(std::string name, BasedSpace space, std::vector<SparseVec> gamma) {
  const Index n = space.dim();
  if (gamma.size() != n * n * n) throw DimensionError("triple table size does not match basis");
  for (const auto& g : gamma)
    if (!g.empty() && g.back().first >= n) throw DimensionError("triple coefficient index out of range");
  TripleSystem t{std::move(name), std::move(space), std::move(gamma)};
  IdentityReport r = check_outer_symmetry(t);
  if (!r.holds) throw ValidationError("triple system '" + t.name + "' is not outer-symmetric: " + r.describe(t.space), r);
  return t;
}

TripleSystem triple_from_jordan(const Algebra& j) {
  if (j.kind != AlgebraKind::jordan)
    throw KindError("triple_from_jordan requires a Jordan algebra, got " + to_string(j.kind));
  const Index n = j.dim();
  std::vector<SparseVec> gamma(n * n * n);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      for (Index w = 0; w < n; ++w) {
        SparseVec r = j.product_basis_right(j.table.at(u, v), w);
        r += j.product_basis_left(u, j.table.at(v, w));
        r -= j.product_basis_left(v, j.table.at(u, w));
        gamma[(u * n + v) * n + w] = std::move(r);
      }
  return make_triple("T(" + j.name + ")", j.space, std::move(gamma));
}

TripleSystem triple_from_associative(const Algebra& a) {
  if (a.kind != AlgebraKind::associative)
    throw KindError("triple_from_associative requires an associative algebra, got " + to_string(a.kind));
  const Index n = a.dim();
  const Scalar half(1, 2);
  std::vector<SparseVec> gamma(n * n * n);
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      for (Index w = 0; w < n; ++w) {
        SparseVec r = a.product_basis_right(a.table.at(u, v), w);
        r += a.product_basis_right(a.table.at(w, v), u);
        r *= half;
        gamma[(u * n + v) * n + w] = std::move(r);
      }
  return make_triple("T(" + a.name + ")", a.space, std::move(gamma));
}

namespace {

SparseVec e(Index i) { return SparseVec::unit(i); }

// Helpers adding triple products with one vector argument into an accumulator.
struct TripleEval {
  const TripleSystem& t;

  // {e_u, e_v, y}
  void right(Accumulator& acc, Index u, Index v, const SparseVec& y, const Scalar& s) const {
    for (const auto& [w, c] : y) acc.add(t.at(u, v, w), c * s);
  }
  // {e_u, y, e_w}
  void middle(Accumulator& acc, Index u, const SparseVec& y, Index w, const Scalar& s) const {
    for (const auto& [v, c] : y) acc.add(t.at(u, v, w), c * s);
  }
  // {y, e_v, e_w}
  void left(Accumulator& acc, const SparseVec& y, Index v, Index w, const Scalar& s) const {
    for (const auto& [u, c] : y) acc.add(t.at(u, v, w), c * s);
  }
  // {x, e_v, z}
  void outer(Accumulator& acc, const SparseVec& x, Index v, const SparseVec& z, const Scalar& s) const {
    for (const auto& [u, a] : x) {
      Scalar as = a * s;
      for (const auto& [w, c] : z) acc.add(t.at(u, v, w), as * c);
    }
  }
  SparseVec middle_vec(Index u, const SparseVec& y, Index w) const {
    Accumulator acc(t.dim());
    middle(acc, u, y, w, 1);
    return acc.take();
  }
};

constexpr int kPerm3[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};

IdentityReport identity_one(const TripleSystem& t, Index& count) {
  // Σ_σ {a_σ1, b, {a_σ2, c, a_σ3}}  =  Σ_σ {a_σ1, {b, a_σ2, c}, a_σ3}
  const Index n = t.dim();
  TripleEval ev{t};
  Accumulator lhs(n), rhs(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = j; k < n; ++k)
        for (Index b = 0; b < n; ++b)
          for (Index c = 0; c < n; ++c) {
            ++count;
            const Index a[3] = {i, j, k};
            for (const auto& p : kPerm3) {
              ev.right(lhs, a[p[0]], b, t.at(a[p[1]], c, a[p[2]]), 1);
              ev.middle(rhs, a[p[0]], t.at(b, a[p[1]], c), a[p[2]], 1);
            }
            SparseVec l = lhs.take(), r = rhs.take();
            if (l != r) return IdentityReport::failure("jts-identity-1", {{e(i), e(j), e(k), e(b), e(c)}, l, r}, count);
          }
  return {"jts-identity-1", true, std::nullopt, count};
}

IdentityReport identity_two(const TripleSystem& t, Index& count) {
  // Σ {{a_σ1, b_τ1, a_σ2}, b_τ2, c}  =  Σ {a_σ1, {b_τ1, a_σ2, b_τ2}, c}
  const Index n = t.dim();
  TripleEval ev{t};
  Accumulator lhs(n), rhs(n);
  for (Index a1 = 0; a1 < n; ++a1)
    for (Index a2 = a1; a2 < n; ++a2)
      for (Index b1 = 0; b1 < n; ++b1)
        for (Index b2 = b1; b2 < n; ++b2)
          for (Index c = 0; c < n; ++c) {
            ++count;
            const Index a[2] = {a1, a2}, b[2] = {b1, b2};
            for (int s = 0; s < 2; ++s)
              for (int r = 0; r < 2; ++r) {
                ev.left(lhs, t.at(a[s], b[r], a[1 - s]), b[1 - r], c, 1);
                ev.middle(rhs, a[s], t.at(b[r], a[1 - s], b[1 - r]), c, 1);
              }
            SparseVec l = lhs.take(), r = rhs.take();
            if (l != r)
              return IdentityReport::failure("jts-identity-2", {{e(a1), e(a2), e(b1), e(b2), e(c)}, l, r}, count);
          }
  return {"jts-identity-2", true, std::nullopt, count};
}

IdentityReport identity_three(const TripleSystem& t, Index& count) {
  // Full linearization of {a,{b,{a,c,a},b},a} = {{a,b,a},c,{a,b,a}} in a
  // (degree 4) and b (degree 2). With outer symmetry both sides reduce to
  //   Σ_O {a_O1, {b1, I, b2} + {b2, I, b1}, a_O2},  I = {a_I1, c, a_I2}
  //   Σ_(A,B) {{a_A1, b1, a_A2}, c, {a_B1, b2, a_B2}}
  // where O runs over the 6 two-element subsets of the four a-slots (I is the
  // complement) and (A,B) over the 6 ordered splits into two pairs.
  const Index n = t.dim();
  TripleEval ev{t};
  std::vector<SparseVec> inner(n * n), mid(n * n), q1(n * n), q2(n * n);
  Accumulator acc(n);
  static constexpr int kPairs[6][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2},
                                       {1, 2, 0, 3}, {1, 3, 0, 2}, {2, 3, 0, 1}};
  for (Index c = 0; c < n; ++c) {
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) inner[i * n + j] = t.at(i, c, j);
    for (Index b1 = 0; b1 < n; ++b1)
      for (Index b2 = b1; b2 < n; ++b2) {
        for (Index i = 0; i < n; ++i)
          for (Index j = 0; j < n; ++j) {
            const SparseVec& in = inner[i * n + j];
            ev.middle(acc, b1, in, b2, 1);
            ev.middle(acc, b2, in, b1, 1);
            mid[i * n + j] = acc.take();
            q1[i * n + j] = t.at(i, b1, j);
            q2[i * n + j] = t.at(i, b2, j);
          }
        for (Index i = 0; i < n; ++i)
          for (Index j = i; j < n; ++j)
            for (Index k = j; k < n; ++k)
              for (Index l = k; l < n; ++l) {
                ++count;
                const Index a[4] = {i, j, k, l};
                for (const auto& p : kPairs) {
                  // outer pair p0,p1 with inner pair p2,p3
                  ev.middle(acc, a[p[0]], mid[a[p[2]] * n + a[p[3]]], a[p[1]], 1);
                  // ordered splits (A,B) and (B,A)
                  ev.outer(acc, q1[a[p[0]] * n + a[p[1]]], c, q2[a[p[2]] * n + a[p[3]]], -1);
                  ev.outer(acc, q1[a[p[2]] * n + a[p[3]]], c, q2[a[p[0]] * n + a[p[1]]], -1);
                }
                SparseVec diff = acc.take();
                if (!diff.empty()) {
                  Accumulator lhs(n), rhs(n);
                  for (const auto& p : kPairs) {
                    ev.middle(lhs, a[p[0]], mid[a[p[2]] * n + a[p[3]]], a[p[1]], 1);
                    ev.outer(rhs, q1[a[p[0]] * n + a[p[1]]], c, q2[a[p[2]] * n + a[p[3]]], 1);
                    ev.outer(rhs, q1[a[p[2]] * n + a[p[3]]], c, q2[a[p[0]] * n + a[p[1]]], 1);
                  }
                  return IdentityReport::failure(
                      "jts-identity-3", {{e(i), e(j), e(k), e(l), e(b1), e(b2), e(c)}, lhs.take(), rhs.take()}, count);
                }
              }
      }
  }
  return {"jts-identity-3", true, std::nullopt, count};
}

}  // namespace

IdentityReport check_jts_defining(const TripleSystem& t) {
  IdentityReport sym = check_outer_symmetry(t);
  if (!sym.holds) return sym;
  Index count = sym.cases_checked;
  for (auto* check : {&identity_one, &identity_two, &identity_three}) {
    IdentityReport r = check(t, count);
    if (!r.holds) return r;
  }
  return {"jts-defining", true, std::nullopt, count};
}

IdentityReport check_jts_five_linear(const TripleSystem& t) {
  const Index n = t.dim();
  TripleEval ev{t};
  Accumulator acc(n);
  Index count = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index d = 0; d < n; ++d)
          for (Index x = 0; x < n; ++x) {
            ++count;
            ev.right(acc, a, b, t.at(c, d, x), 1);
            ev.left(acc, t.at(a, b, c), d, x, -1);
            ev.middle(acc, c, t.at(b, a, d), x, 1);
            ev.right(acc, c, d, t.at(a, b, x), -1);
            SparseVec diff = acc.take();
            if (diff.empty()) continue;
            Accumulator rhs(n);
            ev.left(rhs, t.at(a, b, c), d, x, 1);
            ev.middle(rhs, c, t.at(b, a, d), x, -1);
            ev.right(rhs, c, d, t.at(a, b, x), 1);
            Accumulator lhs(n);
            ev.right(lhs, a, b, t.at(c, d, x), 1);
            return IdentityReport::failure("jts-five-linear", {{e(a), e(b), e(c), e(d), e(x)}, lhs.take(), rhs.take()},
                                           count);
          }
  return {"jts-five-linear", true, std::nullopt, count};
}

IdentityReport check_jts(const TripleSystem& t) {
  IdentityReport def = check_jts_defining(t);
  if (!def.holds) return def;
  IdentityReport five = check_jts_five_linear(t);
  if (!five.holds) return five;
  return {"jts", true, std::nullopt, def.cases_checked + five.cases_checked};
}

IdentityReport check_triple_homomorphism(const LinearMap& phi, const TripleSystem& from, const TripleSystem& to) {
  if (phi.source.dim() != from.dim() || phi.target.dim() != to.dim())
    throw DimensionError("triple map shape does not match the triple systems");
  const Index n = from.dim();
  Index count = 0;
  for (Index u = 0; u < n; ++u)
    for (Index v = 0; v < n; ++v)
      for (Index w = 0; w < n; ++w) {
        ++count;
        SparseVec lhs = phi.apply(from.at(u, v, w));
        SparseVec rhs = to.eval(phi.columns[u], phi.columns[v], phi.columns[w]);
        if (lhs != rhs) return IdentityReport::failure("triple-homomorphism", {{e(u), e(v), e(w)}, lhs, rhs}, count);
      }
  return {"triple-homomorphism", true, std::nullopt, count};
}

}  // namespace tkk
