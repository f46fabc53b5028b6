#pragma once

// Brute-force reference for feasibility of small strict/weak systems.
// A nonempty polyhedron has a minimal face {x : A_I x = b_I} that is an
// affine subspace, so some subset I has a particular solution inside it.

#include <cstddef>
#include <optional>

#include "valflag/polyhedra.hpp"

namespace valflag::testing {

/// Any solution of A x = b (free variables set to 0), or nullopt.
inline std::optional<ScalarVector> particular_solution(ScalarMatrix a,
                                                       ScalarVector b,
                                                       std::size_t d) {
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < d && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero())
      ++p;
    if (p == a.size())
      continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    Scalar inv = a[r][c].inverse();
    for (auto& v : a[r])
      v *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero())
        continue;
      Scalar f = a[i][c];
      for (std::size_t j = 0; j < d; ++j)
        a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < a.size(); ++i)
    if (!b[i].is_zero())
      return std::nullopt;
  ScalarVector x(d);
  for (std::size_t i = 0; i < r; ++i)
    x[pivot_col[i]] = b[i];
  return x;
}

/// Points on every minimal face of the weak relaxation.
inline std::vector<ScalarVector> face_points(const std::vector<Inequality>& rows,
                                             std::size_t d) {
  std::vector<ScalarVector> out;
  std::size_t m = rows.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    ScalarMatrix a;
    ScalarVector b;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1) {
        a.push_back(rows[i].normal);
        b.push_back(rows[i].rhs);
      }
    auto x = particular_solution(a, b, d);
    if (!x)
      continue;
    bool ok = true;
    for (const auto& r : rows)
      ok = ok && dot(r.normal, *x) <= r.rhs;
    if (ok)
      out.push_back(*x);
  }
  return out;
}

/// Feasibility by face enumeration. Strict rows get a slack t with
/// <a, x> + t <= b, 0 <= t <= 1, and the system is feasible iff some face
/// point has t > 0.
inline bool oracle_feasible(const IneqSystem& s) {
  std::size_t d = s.dim();
  bool any_strict = false;
  std::vector<Inequality> rows;
  for (const auto& r : s.rows()) {
    Inequality e{r.normal, r.rhs, false};
    e.normal.push_back(r.strict ? Scalar(1) : Scalar());
    any_strict = any_strict || r.strict;
    rows.push_back(std::move(e));
  }
  ScalarVector lo(d + 1);
  lo[d] = -1;
  ScalarVector hi(d + 1);
  hi[d] = 1;
  rows.push_back(Inequality{lo, Scalar(), false});
  rows.push_back(Inequality{hi, Scalar(1), false});
  auto pts = face_points(rows, d + 1);
  if (!any_strict)
    return !pts.empty();
  for (const auto& p : pts)
    if (p[d].sign() > 0)
      return true;
  return false;
}

} // namespace valflag::testing
