#include "tkk/algebra.hpp"

#include <random>

namespace tkk {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::associative: return "associative";
    case AlgebraKind::lie: return "lie";
    case AlgebraKind::jordan: return "jordan";
    case AlgebraKind::untagged: break;
  }
  return "untagged";
}

AlgebraKind parse_kind(const std::string& name) {
  if (name == "associative") return AlgebraKind::associative;
  if (name == "lie") return AlgebraKind::lie;
  if (name == "jordan") return AlgebraKind::jordan;
  if (name == "untagged" || name.empty()) return AlgebraKind::untagged;
  throw ParseError("unknown algebra kind '" + name + "'");
}

std::string to_string(Identity identity) {
  switch (identity) {
    case Identity::associativity: return "associativity";
    case Identity::commutativity: return "commutativity";
    case Identity::anticommutativity: return "anticommutativity";
    case Identity::jacobi: return "jacobi";
    case Identity::jordan: return "jordan";
    case Identity::power_linearized: return "power-linearized";
  }
  return "?";
}

Identity parse_identity(const std::string& name) {
  for (Identity id : {Identity::associativity, Identity::commutativity, Identity::anticommutativity,
                      Identity::jacobi, Identity::jordan, Identity::power_linearized})
    if (to_string(id) == name) return id;
  throw ParseError("unknown identity '" + name + "'");
}

void StructureTable::set(Index i, Index j, SparseVec v) {
  if (i >= dim_ || j >= dim_ || (!v.empty() && v.back().first >= dim_))
    throw DimensionError("structure constant index out of range");
  products_[i * dim_ + j] = std::move(v);
}

void StructureTable::add(Index i, Index j, Index k, const Scalar& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw DimensionError("structure constant index out of range");
  products_[i * dim_ + j].add(k, c);
}

SparseVec Algebra::product_basis_left(Index i, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [j, c] : y) out.axpy(c, table.at(i, j));
  return out;
}

SparseVec Algebra::product_basis_right(const SparseVec& x, Index j) const {
  SparseVec out;
  for (const auto& [i, c] : x) out.axpy(c, table.at(i, j));
  return out;
}

SparseVec Algebra::product(const SparseVec& x, const SparseVec& y) const {
  if (x.nnz() * y.nnz() <= 16) {
    SparseVec out;
    for (const auto& [i, a] : x)
      for (const auto& [j, b] : y) out.axpy(a * b, table.at(i, j));
    return out;
  }
  Accumulator acc(dim());
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y) acc.add(table.at(i, j), a * b);
  return acc.take();
}

SparseVec product_eval(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  if ((!x.empty() && x.back().first >= a.dim()) || (!y.empty() && y.back().first >= a.dim()))
    throw DimensionError("vector does not live in algebra '" + a.name + "'");
  return a.product(x, y);
}

IdentityReport IdentityReport::failure(std::string identity, Witness w, Index checked) {
  IdentityReport r;
  r.identity = std::move(identity);
  r.holds = false;
  r.witness = std::move(w);
  r.cases_checked = checked;
  return r;
}

std::string IdentityReport::describe(const BasedSpace& space) const {
  if (holds) return identity + ": holds (" + std::to_string(cases_checked) + " cases)";
  std::string out = identity + ": FAILS at (";
  for (Index k = 0; k < witness->inputs.size(); ++k) {
    if (k) out += ", ";
    out += format_vector(witness->inputs[k], space);
  }
  out += "): lhs = " + format_vector(witness->lhs, space) + ", rhs = " + format_vector(witness->rhs, space);
  return out;
}

namespace {

SparseVec e(Index i) { return SparseVec::unit(i); }

IdentityReport check_associativity(const Algebra& a) {
  const Index n = a.dim();
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        ++count;
        SparseVec lhs = a.product_basis_right(a.table.at(i, j), k);
        SparseVec rhs = a.product_basis_left(i, a.table.at(j, k));
        if (lhs != rhs) return IdentityReport::failure("associativity", {{e(i), e(j), e(k)}, lhs, rhs}, count);
      }
  return {"associativity", true, std::nullopt, count};
}

IdentityReport check_commutativity(const Algebra& a) {
  const Index n = a.dim();
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      ++count;
      if (a.table.at(i, j) != a.table.at(j, i))
        return IdentityReport::failure("commutativity", {{e(i), e(j)}, a.table.at(i, j), a.table.at(j, i)}, count);
    }
  return {"commutativity", true, std::nullopt, count};
}

IdentityReport check_anticommutativity(const Algebra& a) {
  const Index n = a.dim();
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      ++count;
      SparseVec rhs = -a.table.at(j, i);
      if (a.table.at(i, j) != rhs)
        return IdentityReport::failure("anticommutativity", {{e(i), e(j)}, a.table.at(i, j), rhs}, count);
    }
  return {"anticommutativity", true, std::nullopt, count};
}

IdentityReport check_jacobi(const Algebra& a) {
  const Index n = a.dim();
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        ++count;
        SparseVec sum = a.product_basis_left(i, a.table.at(j, k));
        sum += a.product_basis_left(j, a.table.at(k, i));
        sum += a.product_basis_left(k, a.table.at(i, j));
        if (!sum.empty()) return IdentityReport::failure("jacobi", {{e(i), e(j), e(k)}, sum, {}}, count);
      }
  return {"jacobi", true, std::nullopt, count};
}

// Σ_σ ((x_σ1 x_σ2) y) x_σ3  vs  Σ_σ (x_σ1 x_σ2)(y x_σ3) on basis vectors.
IdentityReport check_jordan_linearized(const Algebra& a, const std::string& name) {
  const Index n = a.dim();
  static constexpr int kPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  Index count = 0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      for (Index k = j; k < n; ++k)
        for (Index y = 0; y < n; ++y) {
          ++count;
          const Index xs[3] = {i, j, k};
          SparseVec lhs, rhs;
          for (const auto& p : kPerms) {
            const SparseVec& x12 = a.table.at(xs[p[0]], xs[p[1]]);
            lhs += a.product_basis_right(a.product_basis_right(x12, y), xs[p[2]]);
            rhs += a.product(x12, a.table.at(y, xs[p[2]]));
          }
          if (lhs != rhs) return IdentityReport::failure(name, {{e(i), e(j), e(k), e(y)}, lhs, rhs}, count);
        }
  return {name, true, std::nullopt, count};
}

std::optional<Witness> jordan_raw(const Algebra& a, const SparseVec& x, const SparseVec& y) {
  SparseVec x2 = a.product(x, x);
  SparseVec lhs = a.product(a.product(x2, y), x);
  SparseVec rhs = a.product(x2, a.product(y, x));
  if (lhs == rhs) return std::nullopt;
  return Witness{{x, y}, lhs, rhs};
}

IdentityReport check_jordan(const Algebra& a) {
  IdentityReport comm = check_commutativity(a);
  if (!comm.holds) {
    comm.identity = "jordan/commutativity";
    return comm;
  }
  IdentityReport lin = check_jordan_linearized(a, "jordan/linearized");
  if (!lin.holds) return lin;
  Index count = comm.cases_checked + lin.cases_checked;
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      ++count;
      if (auto w = jordan_raw(a, e(i), e(j))) return IdentityReport::failure("jordan/raw-basis", *w, count);
    }
  // Spot check of the unlinearized identity on fixed pseudo-random vectors.
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<SparseVec::Entry> xe, ye;
    for (Index k = 0; k < n; ++k) {
      xe.emplace_back(k, Scalar(num(rng), den(rng)));
      ye.emplace_back(k, Scalar(num(rng), den(rng)));
    }
    ++count;
    if (auto w = jordan_raw(a, SparseVec::from_entries(xe), SparseVec::from_entries(ye)))
      return IdentityReport::failure("jordan/raw-random", *w, count);
  }
  return {"jordan", true, std::nullopt, count};
}

}  // namespace

IdentityReport check_identity(const Algebra& a, Identity identity) {
  switch (identity) {
    case Identity::associativity: return check_associativity(a);
    case Identity::commutativity: return check_commutativity(a);
    case Identity::anticommutativity: return check_anticommutativity(a);
    case Identity::jacobi: return check_jacobi(a);
    case Identity::jordan: return check_jordan(a);
    case Identity::power_linearized: return check_jordan_linearized(a, "power-linearized");
  }
  throw Error("unhandled identity");
}

std::optional<SparseVec> detect_unit(const Algebra& a) {
  // Unknowns u_k; equations Σ_k u_k (e_k e_i) = e_i and Σ_k u_k (e_i e_k) = e_i.
  // Augmented rows live in k^{n+1}; column n holds the right-hand side.
  const Index n = a.dim();
  if (n == 0) return std::nullopt;
  RowSpace rows(n + 1);
  for (Index i = 0; i < n; ++i) {
    for (int side = 0; side < 2; ++side) {
      std::vector<std::vector<SparseVec::Entry>> eq(n);
      for (Index k = 0; k < n; ++k) {
        const SparseVec& prod = side == 0 ? a.table.at(k, i) : a.table.at(i, k);
        for (const auto& [t, c] : prod) eq[t].emplace_back(k, c);
      }
      for (Index t = 0; t < n; ++t) {
        if (t == i) eq[t].emplace_back(n, Scalar(1));
        SparseVec row = SparseVec::from_entries(std::move(eq[t]));
        if (!row.empty()) rows.insert(row);
      }
    }
  }
  if (rows.is_pivot(n)) return std::nullopt;  // inconsistent
  if (rows.rank() != n) {
    // Underdetermined systems cannot occur for a genuine unit (it is unique),
    // but a degenerate table may leave free variables.
    for (Index k = 0; k < n; ++k)
      if (!rows.is_pivot(k)) return std::nullopt;
  }
  std::vector<SparseVec::Entry> u;
  for (const auto& r : rows.rows()) u.emplace_back(r.front().first, r.coeff(n));
  return SparseVec::from_entries(std::move(u));
}

namespace {

void validate_unit(const Algebra& a, const SparseVec& u) {
  for (Index i = 0; i < a.dim(); ++i) {
    SparseVec left = a.product_basis_right(u, i);
    SparseVec right = a.product_basis_left(i, u);
    SparseVec ei = SparseVec::unit(i);
    if (left != ei || right != ei)
      throw ValidationError("declared unit of '" + a.name + "' is not a two-sided identity",
                            IdentityReport::failure("unit", {{u, ei}, left, right}, i + 1));
  }
}

}  // namespace

Algebra make_algebra(std::string name, BasedSpace space, StructureTable table, AlgebraKind kind,
                     std::optional<SparseVec> unit) {
  if (table.dim() != space.dim()) throw DimensionError("structure table does not match basis size");
  Algebra a;
  a.name = std::move(name);
  a.space = std::move(space);
  a.table = std::move(table);
  a.kind = kind;
  auto require = [&](Identity id) {
    IdentityReport r = check_identity(a, id);
    if (!r.holds)
      throw ValidationError("algebra '" + a.name + "' is not " + to_string(kind) + ": " + r.describe(a.space), r);
  };
  switch (kind) {
    case AlgebraKind::associative: require(Identity::associativity); break;
    case AlgebraKind::lie:
      require(Identity::anticommutativity);
      require(Identity::jacobi);
      break;
    case AlgebraKind::jordan: require(Identity::jordan); break;
    case AlgebraKind::untagged: break;
  }
  if (unit) {
    validate_unit(a, *unit);
    a.unit = std::move(unit);
  } else if (kind != AlgebraKind::lie) {
    a.unit = detect_unit(a);
  }
  return a;
}

Subspace commutator_subspace(const Algebra& a) {
  if (a.kind != AlgebraKind::associative)
    throw KindError("commutator subspace requires an associative algebra, got " + to_string(a.kind));
  RowSpace rows(a.dim());
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i + 1; j < a.dim(); ++j) rows.insert(a.table.at(i, j) - a.table.at(j, i));
  return {a.space, rows.rows()};
}

}  // namespace tkk
