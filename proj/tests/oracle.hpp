#pragma once

// Independent dense reference arithmetic for the tests. Plain GMP rationals,
// textbook Gaussian elimination; shares no code with the library's RREF.

#include <gmpxx.h>

#include <vector>

#include "tkk/algebra.hpp"

namespace oracle {

using Mat = std::vector<std::vector<mpq_class>>;

inline std::size_t rank(Mat m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

inline std::vector<mpq_class> dense(const tkk::SparseVec& v, std::size_t dim) {
  std::vector<mpq_class> out(dim);
  for (const auto& [i, c] : v) out[i] = c.to_mpq();
  return out;
}

// Structure constants as a dense cube c[i][j][k].
inline std::vector<std::vector<std::vector<mpq_class>>> cube(const tkk::Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<std::vector<mpq_class>>> c(n, std::vector<std::vector<mpq_class>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = dense(a.table.at(i, j), n);
  return c;
}

// dim H₂(g) = dim ker(∂₂: Λ²g → g) − rank(∂₃: Λ³g → Λ²g), dense.
inline std::size_t h2_dim(const tkk::Algebra& g) {
  const std::size_t n = g.dim();
  auto c = cube(g);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<long>> idx(n, std::vector<long>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      idx[i][j] = static_cast<long>(pairs.size());
      pairs.emplace_back(i, j);
    }
  Mat d2(pairs.size(), std::vector<mpq_class>(n));
  for (std::size_t p = 0; p < pairs.size(); ++p) d2[p] = c[pairs[p].first][pairs[p].second];
  const std::size_t ker2 = pairs.size() - rank(d2);
  Mat d3;
  auto put = [&](std::vector<mpq_class>& row, std::size_t a, std::size_t b, const mpq_class& x) {
    if (a == b || x == 0) return;
    if (a < b)
      row[idx[a][b]] += x;
    else
      row[idx[b][a]] -= x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<mpq_class> row(pairs.size());
        for (std::size_t t = 0; t < n; ++t) {
          put(row, t, k, -c[i][j][t]);
          put(row, t, j, c[i][k][t]);
          put(row, t, i, -c[j][k][t]);
        }
        d3.push_back(std::move(row));
      }
  return ker2 - rank(d3);
}

}  // namespace oracle
