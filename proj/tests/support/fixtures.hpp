#pragma once

// Shared helpers for tests: terse matrix builders, random generators and
// brute-force oracles.

#include <random>
#include <string>
#include <vector>

#include "valflag/prime.hpp"

namespace valflag::testing {

inline const Scalar& sqrt2() {
  static const Scalar s = Scalar::sqrt(2);
  return s;
}
inline const Scalar& sqrt3() {
  static const Scalar s = Scalar::sqrt(3);
  return s;
}

inline Prime prime(ScalarMatrix rows) {
  std::size_t n = rows.empty() ? 0 : rows.front().size() - 1;
  return canonicalize(DefiningMatrix(n, std::move(rows)));
}

inline Term term(Rational gamma, Exponent u) { return Term{gamma, std::move(u)}; }

/// A scalar drawn from a small pool mixing rationals and quadratic surds.
inline Scalar pool_scalar(std::mt19937& rng) {
  static const std::vector<Scalar> pool = {
      Scalar(0),         Scalar(0),           Scalar(1),
      Scalar(-1),        Scalar(2),           Scalar(Rational(1, 2)),
      Scalar::sqrt(2),   Scalar::sqrt(3),     Scalar(1) + Scalar::sqrt(2),
      -Scalar::sqrt(2),  Scalar::sqrt(6),     Scalar(Rational(-3, 2))};
  return pool[rng() % pool.size()];
}

/// Random canonical matrix; cont forces a positive leading coefficient.
inline Prime random_prime(std::mt19937& rng, std::size_t n, bool cont) {
  std::size_t k = 1 + rng() % (n + 1);
  ScalarMatrix rows;
  for (std::size_t i = 0; i < k; ++i) {
    ScalarVector row(n + 1);
    for (auto& s : row)
      s = pool_scalar(rng);
    rows.push_back(std::move(row));
  }
  if (cont)
    rows[0][0] = Scalar(1 + static_cast<int>(rng() % 2));
  else
    for (auto& row : rows)
      row[0] = row[0].abs();
  return prime(std::move(rows));
}

/// Random term with small exponents; denominators up to max_den.
inline Term random_term(std::mt19937& rng, std::size_t n, int bound = 3,
                        int max_den = 4) {
  std::uniform_int_distribution<int> e(-bound, bound);
  std::uniform_int_distribution<int> d(1, max_den);
  Term t{Rational(e(rng), d(rng)), Exponent(n)};
  t.gamma.canonicalize();
  for (auto& v : t.u)
    v = e(rng);
  return t;
}

/// All exponent vectors with |u_i| <= bound and gamma = p/q, |gamma| <= bound,
/// q <= max_den.
inline std::vector<ExponentVector> exponent_grid(std::size_t n, int bound,
                                                 int max_den) {
  std::vector<Rational> gammas;
  for (int q = 1; q <= max_den; ++q)
    for (int p = -bound * q; p <= bound * q; ++p) {
      Rational g(p, q);
      g.canonicalize();
      if (g.get_den() == q)
        gammas.push_back(g);
    }
  std::vector<ExponentVector> out;
  Exponent u(n, -bound);
  for (;;) {
    for (const auto& g : gammas)
      out.push_back(ExponentVector{g, u});
    std::size_t i = 0;
    while (i < n && u[i] == bound) {
      u[i] = -bound;
      ++i;
    }
    if (i == n)
      break;
    ++u[i];
  }
  return out;
}

/// First grid vector with different lex signs, if any.
inline std::optional<ExponentVector>
brute_force_distinguish(const ScalarMatrix& a, const ScalarMatrix& b,
                        const std::vector<ExponentVector>& grid) {
  for (const auto& w : grid)
    if (sign_lex(image(a, w)) != sign_lex(image(b, w)))
      return w;
  return std::nullopt;
}

} // namespace valflag::testing
