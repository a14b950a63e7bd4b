#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <map>

#include "tkk/algebra.hpp"

namespace tkk {

namespace {

void require_associative(const Algebra& a, const char* what) {
  if (a.kind != AlgebraKind::associative)
    throw KindError(std::string(what) + " requires an associative algebra, got '" + a.name + "' of kind " +
                    to_string(a.kind));
}

Index matrix_index(Index n, Index base_dim, Index i, Index j, Index p) { return (i * n + j) * base_dim + p; }

}  // namespace

Algebra scalar_algebra() {
  StructureTable t(1);
  t.add(0, 0, 0, 1);
  return make_algebra("k", BasedSpace({"1"}), std::move(t), AlgebraKind::associative, SparseVec::unit(0));
}

Algebra matrix_algebra(const Algebra& a, int n) {
  require_associative(a, "matrix_algebra");
  if (n < 1) throw DimensionError("matrix size must be positive");
  const Index nn = static_cast<Index>(n);
  const Index d = a.dim();
  std::vector<std::string> labels;
  labels.reserve(nn * nn * d);
  for (Index i = 0; i < nn; ++i)
    for (Index j = 0; j < nn; ++j)
      for (Index p = 0; p < d; ++p)
        labels.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1) + "(" + a.space.label(p) + ")");

  StructureTable t(nn * nn * d);
  for (Index i = 0; i < nn; ++i)
    for (Index j = 0; j < nn; ++j)
      for (Index l = 0; l < nn; ++l)
        for (Index p = 0; p < d; ++p)
          for (Index q = 0; q < d; ++q) {
            const SparseVec& pq = a.table.at(p, q);
            if (pq.empty()) continue;
            std::vector<SparseVec::Entry> out;
            for (const auto& [r, c] : pq) out.emplace_back(matrix_index(nn, d, i, l, r), c);
            t.set(matrix_index(nn, d, i, j, p), matrix_index(nn, d, j, l, q), SparseVec::from_entries(std::move(out)));
          }

  std::optional<SparseVec> unit;
  if (a.unit) {
    std::vector<SparseVec::Entry> u;
    for (Index i = 0; i < nn; ++i)
      for (const auto& [r, c] : *a.unit) u.emplace_back(matrix_index(nn, d, i, i, r), c);
    unit = SparseVec::from_entries(std::move(u));
  }
  Algebra m = make_algebra("M" + std::to_string(n) + "(" + a.name + ")", BasedSpace(std::move(labels)), std::move(t),
                           AlgebraKind::associative, unit);
  m.matrix = MatrixTag{n, std::make_shared<const Algebra>(a)};
  return m;
}

// ---------------------------------------------------------------------------
// sl_n(A)

SparseVec SlAlgebra::coordinates(const SparseVec& matrix) const {
  auto c = solver->express(matrix);
  if (!c) throw DimensionError("matrix does not lie in " + lie.name);
  return *c;
}

SparseVec SlAlgebra::matrix_unit(int i, int j, const SparseVec& a) const {
  const Index d = base->dim();
  std::vector<SparseVec::Entry> out;
  for (const auto& [p, c] : a)
    out.emplace_back(matrix_index(static_cast<Index>(n), d, static_cast<Index>(i), static_cast<Index>(j), p), c);
  return SparseVec::from_entries(std::move(out));
}

SparseVec SlAlgebra::elementary(int i, int j, const SparseVec& a) const {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw DimensionError("elementary matrix index out of range");
  return coordinates(matrix_unit(i, j, a));
}

SparseVec SlAlgebra::diagonal_h(int i, int j) const {
  return coordinates(matrix_unit(i, i, *base->unit) - matrix_unit(j, j, *base->unit));
}

SlAlgebra sl_n(const Algebra& a, int n) {
  require_associative(a, "sl_n");
  if (!a.unit) throw KindError("sl_n requires a unital algebra; '" + a.name + "' has no unit");
  if (n < 2) throw DimensionError("sl_n requires n >= 2");

  SlAlgebra sl;
  sl.n = n;
  sl.base = std::make_shared<const Algebra>(a);
  sl.matrices = std::make_shared<const Algebra>(matrix_algebra(a, n));
  const Algebra& m = *sl.matrices;
  const Index nn = static_cast<Index>(n);
  const Index d = a.dim();
  Subspace comm = commutator_subspace(a);

  std::vector<SparseVec> basis;
  std::vector<std::string> labels;
  for (Index i = 0; i < nn; ++i)
    for (Index j = 0; j < nn; ++j) {
      if (i == j) continue;
      for (Index p = 0; p < d; ++p) {
        basis.push_back(SparseVec::unit(matrix_index(nn, d, i, j, p)));
        labels.push_back(m.space.label(matrix_index(nn, d, i, j, p)));
      }
    }
  for (Index i = 0; i + 1 < nn; ++i)
    for (Index p = 0; p < d; ++p) {
      SparseVec v = SparseVec::unit(matrix_index(nn, d, i, i, p));
      v.add(matrix_index(nn, d, i + 1, i + 1, p), -1);
      basis.push_back(std::move(v));
      labels.push_back("h" + std::to_string(i + 1) + std::to_string(i + 2) + "(" + a.space.label(p) + ")");
    }
  for (Index q = 0; q < comm.dim(); ++q) {
    std::vector<SparseVec::Entry> v;
    for (const auto& [r, c] : comm.basis_rows[q]) v.emplace_back(matrix_index(nn, d, nn - 1, nn - 1, r), c);
    basis.push_back(SparseVec::from_entries(std::move(v)));
    labels.push_back("e" + std::to_string(nn) + std::to_string(nn) + "[" + format_vector(comm.basis_rows[q], a.space) +
                     "]");
  }

  auto solver = std::make_shared<RowSpace>(m.dim(), true);
  for (const auto& b : basis)
    if (!solver->insert(b)) throw ConsistencyError("sl_n basis is linearly dependent");
  sl.solver = solver;

  BasedSpace space(std::move(labels));
  sl.embedding = LinearMap{space, m.space, basis};

  const Index dim = basis.size();
  StructureTable t(dim);
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j) {
      SparseVec br = m.product(basis[i], basis[j]) - m.product(basis[j], basis[i]);
      if (br.empty()) continue;
      SparseVec c = sl.coordinates(br);
      t.set(j, i, -c);
      t.set(i, j, std::move(c));
    }
  sl.lie = make_algebra("sl" + std::to_string(n) + "(" + a.name + ")", std::move(space), std::move(t), AlgebraKind::lie);
  return sl;
}

bool sl_generated_equals_trace_subspace(const SlAlgebra& sl) {
  const Algebra& m = *sl.matrices;
  const Index nn = static_cast<Index>(sl.n);
  const Index d = sl.base->dim();
  std::vector<SparseVec> generators;
  for (Index i = 0; i < nn; ++i)
    for (Index j = 0; j < nn; ++j)
      if (i != j)
        for (Index p = 0; p < d; ++p) generators.push_back(SparseVec::unit(matrix_index(nn, d, i, j, p)));

  RowSpace span(m.dim());
  std::deque<SparseVec> pending;
  for (const auto& g : generators)
    if (span.insert(g)) pending.push_back(g);
  while (!pending.empty()) {
    SparseVec x = std::move(pending.front());
    pending.pop_front();
    for (const auto& g : generators) {
      SparseVec br = m.product(g, x) - m.product(x, g);
      if (span.insert(br)) pending.push_back(std::move(br));
    }
  }
  if (span.rank() != sl.lie.dim()) return false;
  for (const auto& col : sl.embedding.columns)
    if (!span.contains(col)) return false;
  return true;
}

// ---------------------------------------------------------------------------

Algebra plus_algebra(const Algebra& a) {
  require_associative(a, "plus_algebra");
  StructureTable t(a.dim());
  const Scalar half(1, 2);
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j) {
      SparseVec s = a.table.at(i, j) + a.table.at(j, i);
      s *= half;
      if (!s.empty()) t.set(i, j, std::move(s));
    }
  return make_algebra(a.name + "^(+)", a.space, std::move(t), AlgebraKind::jordan, a.unit);
}

// ---------------------------------------------------------------------------
// Noncommutative polynomials and truncated free algebras

NcPolynomial parse_nc_polynomial(const std::string& text, const std::vector<std::string>& generators) {
  auto gen_index = [&](char c) -> int {
    for (Index g = 0; g < generators.size(); ++g)
      if (generators[g].size() == 1 && generators[g][0] == c) return static_cast<int>(g);
    throw ParseError(std::string("unknown generator '") + c + "' in polynomial '" + text + "'");
  };
  NcPolynomial poly;
  Index pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> std::string {
    std::string s;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) s += text[pos++];
    return s;
  };
  skip();
  if (pos == text.size()) throw ParseError("empty polynomial");
  bool first = true;
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-' at position " + std::to_string(pos) + " in '" + text + "'");
    }
    first = false;
    Scalar coeff(sign);
    bool has_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_int();
      std::string den = "1";
      skip();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        skip();
        den = read_int();
        if (den.empty()) throw ParseError("malformed coefficient in '" + text + "'");
      }
      coeff *= Scalar::parse(num + "/" + den);
      has_coeff = true;
    }
    std::vector<int> word;
    while (true) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
      if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) break;
      int g = gen_index(text[pos++]);
      int power = 1;
      skip();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip();
        std::string e = read_int();
        if (e.empty()) throw ParseError("malformed exponent in '" + text + "'");
        power = std::stoi(e);
      }
      for (int k = 0; k < power; ++k) word.push_back(g);
    }
    if (!has_coeff && word.empty()) throw ParseError("empty term in polynomial '" + text + "'");
    poly.terms.emplace_back(coeff, std::move(word));
  }
  return poly;
}

Algebra truncated_free(const std::vector<std::string>& generators, int max_degree,
                       const std::vector<NcPolynomial>& relations) {
  if (max_degree < 1) throw DimensionError("truncated_free requires max_degree >= 1");
  if (generators.empty()) throw DimensionError("truncated_free requires at least one generator");
  const Index g = generators.size();

  // Words in degree-lexicographic order.
  std::vector<std::vector<int>> words{{}};
  std::vector<Index> level_start{0, 1};
  for (int deg = 1; deg <= max_degree; ++deg) {
    Index begin = level_start[static_cast<Index>(deg) - 1];
    Index end = level_start[static_cast<Index>(deg)];
    for (Index w = begin; w < end; ++w)
      for (Index x = 0; x < g; ++x) {
        auto word = words[w];
        word.push_back(static_cast<int>(x));
        words.push_back(std::move(word));
      }
    level_start.push_back(words.size());
    if (words.size() > 200000) throw ResourceError("truncated free algebra too large");
  }
  const Index total = words.size();
  std::map<std::vector<int>, Index> word_index;
  for (Index w = 0; w < total; ++w) word_index.emplace(words[w], w);
  // Larger words get smaller columns, so pivots (leading terms) are the
  // deglex-largest words and normal words are the smallest ones.
  auto column = [&](Index w) { return total - 1 - w; };

  RowSpace ideal(total);
  for (const auto& rel : relations) {
    int min_deg = max_degree + 1;
    for (const auto& [c, w] : rel.terms) min_deg = std::min(min_deg, static_cast<int>(w.size()));
    for (Index u = 0; u < total; ++u) {
      int du = static_cast<int>(words[u].size());
      if (du + min_deg > max_degree) continue;
      for (Index v = 0; v < total; ++v) {
        int dv = static_cast<int>(words[v].size());
        if (du + dv + min_deg > max_degree) continue;
        std::vector<SparseVec::Entry> entries;
        for (const auto& [c, w] : rel.terms) {
          if (du + dv + static_cast<int>(w.size()) > max_degree) continue;
          std::vector<int> full = words[u];
          full.insert(full.end(), w.begin(), w.end());
          full.insert(full.end(), words[v].begin(), words[v].end());
          entries.emplace_back(column(word_index.at(full)), c);
        }
        ideal.insert(SparseVec::from_entries(std::move(entries)));
      }
    }
  }
  if (ideal.is_pivot(column(0))) throw ValidationError("relations collapse 1 to 0", IdentityReport{"unit", false, {}, 0});

  std::vector<Index> normal;  // word indices, ascending deglex
  std::vector<long> normal_pos(total, -1);
  for (Index w = 0; w < total; ++w)
    if (!ideal.is_pivot(column(w))) {
      normal_pos[w] = static_cast<long>(normal.size());
      normal.push_back(w);
    }
  const bool short_names = std::all_of(generators.begin(), generators.end(), [](const auto& s) { return s.size() == 1; });
  std::vector<std::string> labels;
  for (Index w : normal) {
    if (words[w].empty()) {
      labels.emplace_back("1");
      continue;
    }
    std::string s;
    for (Index k = 0; k < words[w].size(); ++k) {
      if (k && !short_names) s += "*";
      s += generators[static_cast<Index>(words[w][k])];
    }
    labels.push_back(std::move(s));
  }

  auto normal_form = [&](Index w) {
    SparseVec r = ideal.reduce(SparseVec::unit(column(w)));
    std::vector<SparseVec::Entry> out;
    for (const auto& [col, c] : r) out.emplace_back(static_cast<Index>(normal_pos[total - 1 - col]), c);
    return SparseVec::from_entries(std::move(out));
  };

  StructureTable t(normal.size());
  for (Index a = 0; a < normal.size(); ++a)
    for (Index b = 0; b < normal.size(); ++b) {
      const auto& wa = words[normal[a]];
      const auto& wb = words[normal[b]];
      if (static_cast<int>(wa.size() + wb.size()) > max_degree) continue;
      std::vector<int> full = wa;
      full.insert(full.end(), wb.begin(), wb.end());
      SparseVec nf = normal_form(word_index.at(full));
      if (!nf.empty()) t.set(a, b, std::move(nf));
    }

  std::string name = "k<";
  for (Index x = 0; x < g; ++x) name += (x ? "," : "") + generators[x];
  name += ">_" + std::to_string(max_degree);
  if (!relations.empty()) name += "/rel";
  return make_algebra(name, BasedSpace(std::move(labels)), std::move(t), AlgebraKind::associative, SparseVec::unit(0));
}

Algebra grassmann(int generators) {
  if (generators < 0 || generators > 12) throw DimensionError("grassmann: unsupported number of generators");
  const unsigned m = static_cast<unsigned>(generators);
  std::vector<unsigned> masks;
  for (unsigned s = 0; s < (1u << m); ++s) masks.push_back(s);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    // Lexicographic on the sorted element lists = reverse bit order on the lowest differing element.
    unsigned diff = a ^ b;
    unsigned low = diff & (~diff + 1);
    return (a & low) != 0;
  });
  std::vector<Index> pos(1u << m);
  std::vector<std::string> labels;
  for (Index k = 0; k < masks.size(); ++k) {
    pos[masks[k]] = k;
    std::string s;
    for (unsigned b = 0; b < m; ++b)
      if (masks[k] & (1u << b)) s += "e" + std::to_string(b + 1);
    labels.push_back(s.empty() ? "1" : s);
  }
  StructureTable t(masks.size());
  for (Index a = 0; a < masks.size(); ++a)
    for (Index b = 0; b < masks.size(); ++b) {
      unsigned s = masks[a], u = masks[b];
      if (s & u) continue;
      int swaps = 0;
      for (unsigned x = 0; x < m; ++x)
        if (u & (1u << x)) swaps += std::popcount(s >> (x + 1));
      t.add(a, b, pos[s | u], swaps % 2 ? -1 : 1);
    }
  return make_algebra("Lambda" + std::to_string(m), BasedSpace(std::move(labels)), std::move(t),
                      AlgebraKind::associative, SparseVec::unit(0));
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.kind != b.kind)
    throw KindError("direct_sum of different kinds: " + to_string(a.kind) + " and " + to_string(b.kind));
  const Index da = a.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.space.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.space.labels()) labels.push_back("(0," + l + ")");
  StructureTable t(da + b.dim());
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) t.set(i, j, a.table.at(i, j));
  for (Index i = 0; i < b.dim(); ++i)
    for (Index j = 0; j < b.dim(); ++j) {
      std::vector<SparseVec::Entry> out;
      for (const auto& [k, c] : b.table.at(i, j)) out.emplace_back(da + k, c);
      t.set(da + i, da + j, SparseVec::from_entries(std::move(out)));
    }
  std::optional<SparseVec> unit;
  if (a.unit && b.unit) {
    SparseVec u = *a.unit;
    for (const auto& [k, c] : *b.unit) u.add(da + k, c);
    unit = std::move(u);
  }
  return make_algebra(a.name + "+" + b.name, BasedSpace(std::move(labels)), std::move(t), a.kind, unit);
}

PeirceDecomposition peirce_decompose(const Algebra& m) {
  if (!m.matrix || m.matrix->n != 2)
    throw KindError("peirce_decompose requires an algebra built as a 2x2 matrix algebra");
  const Index d = m.matrix->base->dim();
  PeirceDecomposition out;
  for (Index p = 0; p < 2; ++p)
    for (Index q = 0; q < 2; ++q) {
      Subspace& part = out.parts[p * 2 + q];
      part.ambient = m.space;
      for (Index r = 0; r < d; ++r) part.basis_rows.push_back(SparseVec::unit(matrix_index(2, d, p, q, r)));
    }
  return out;
}

}  // namespace tkk
