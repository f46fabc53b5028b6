#include "valflag/linear.hpp"

#include <algorithm>
#include <utility>

#include "valflag/error.hpp"

namespace valflag {

std::size_t rank(const ScalarMatrix& rows) {
  ScalarMatrix m = rows;
  if (m.empty())
    return 0;
  std::size_t cols = m.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero())
      ++p;
    if (p == m.size())
      continue;
    std::swap(m[r], m[p]);
    Scalar inv = m[r][c].inverse();
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c].is_zero())
        continue;
      Scalar f = m[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<ScalarVector> solve(ScalarMatrix a, ScalarVector b) {
  std::size_t n = a.size();
  if (b.size() != n)
    throw DimensionError("solve: right-hand side length mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero())
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(a[c], a[p]);
    std::swap(b[c], b[p]);
    Scalar inv = a[c][c].inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c].is_zero())
        continue;
      Scalar f = a[i][c] * inv;
      for (std::size_t j = c; j < n; ++j)
        a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  ScalarVector x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = b[i] / a[i][i];
  return x;
}

IntMatrix hermite_rows(IntMatrix rows, std::size_t pivot_cols,
                       std::size_t* zero_rows) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows.size(); ++c) {
    for (;;) {
      // smallest nonzero entry in column c below r becomes the pivot
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 &&
            (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size())
        break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0)
          continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(),
                   rows[r][c].get_mpz_t());
        for (std::size_t j = 0; j < rows[i].size(); ++j)
          rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (r < rows.size() && rows[r][c] != 0) {
      if (rows[r][c] < 0)
        for (auto& v : rows[r])
          v = -v;
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(),
                   rows[r][c].get_mpz_t());
        if (q != 0)
          for (std::size_t j = 0; j < rows[i].size(); ++j)
            rows[i][j] -= q * rows[r][j];
      }
      ++r;
    }
  }
  if (zero_rows)
    *zero_rows = rows.size() - r;
  return rows;
}

IntMatrix hermite_basis(IntMatrix rows) {
  if (rows.empty())
    return rows;
  std::size_t cols = rows.front().size();
  std::size_t zeros = 0;
  rows = hermite_rows(std::move(rows), cols, &zeros);
  rows.resize(rows.size() - zeros);
  return rows;
}

IntMatrix integer_kernel(const RationalMatrix& a, std::size_t r) {
  std::size_t p = a.size();
  // rows of [a^T | I_r], with a scaled to integers row by row
  IntMatrix aug(r, IntVector(p + r));
  for (std::size_t i = 0; i < p; ++i) {
    if (a[i].size() != r)
      throw DimensionError("integer_kernel: row length mismatch");
    Integer den = 1;
    for (const auto& q : a[i])
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t j = 0; j < r; ++j)
      aug[j][i] = a[i][j].get_num() * (den / a[i][j].get_den());
  }
  for (std::size_t j = 0; j < r; ++j)
    aug[j][p + j] = 1;
  std::size_t zeros = 0;
  aug = hermite_rows(std::move(aug), p, &zeros);
  IntMatrix kernel;
  for (std::size_t i = r - zeros; i < r; ++i)
    kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(p),
                        aug[i].end());
  return hermite_basis(std::move(kernel));
}

IntVector combine(const IntVector& z, const IntMatrix& basis, std::size_t n) {
  IntVector m(n);
  for (std::size_t j = 0; j < z.size(); ++j)
    if (z[j] != 0)
      for (std::size_t i = 0; i < n; ++i)
        m[i] += z[j] * basis[j][i];
  return m;
}

} // namespace valflag
