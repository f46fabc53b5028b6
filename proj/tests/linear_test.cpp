#include <doctest.h>

#include "valflag/linear.hpp"

using namespace valflag;

TEST_CASE("scalar rank") {
  Scalar r2 = Scalar::sqrt(2);
  CHECK(rank({{1, r2}, {r2, 2}}) == 1);
  CHECK(rank({{1, r2}, {0, 1}}) == 2);
  CHECK(rank({}) == 0);
  CHECK(rank({{0, 0}}) == 0);
}

TEST_CASE("solve") {
  Scalar r2 = Scalar::sqrt(2);
  auto x = solve({{1, 1}, {1, -1}}, {r2, Scalar(0)});
  REQUIRE(x);
  CHECK((*x)[0] == r2 / Scalar(2));
  CHECK(!solve({{1, 2}, {2, 4}}, {Scalar(1), Scalar(2)}));
}

TEST_CASE("integer kernel") {
  // x + 2y - z = 0 in Z^3 has rank 2
  RationalMatrix a{{1, 2, -1}};
  auto k = integer_kernel(a, 3);
  REQUIRE(k.size() == 2);
  for (const auto& z : k)
    CHECK(z[0] + 2 * z[1] - z[2] == 0);
  CHECK(integer_kernel({}, 2).size() == 2);
  // (1/2) x - (1/3) y = 0 -> saturated generator (2, 3)
  auto k2 = integer_kernel({{Rational(1, 2), Rational(-1, 3)}}, 2);
  REQUIRE(k2.size() == 1);
  CHECK(k2[0] == IntVector{2, 3});
}

TEST_CASE("hermite basis") {
  IntMatrix b = hermite_basis({{2, 4}, {1, 3}, {3, 7}});
  REQUIRE(b.size() == 2);
  CHECK(b[0] == IntVector{1, 1});
  CHECK(b[1] == IntVector{0, 2});
}
