#include <doctest.h>

#include "support/fixtures.hpp"
#include "valflag/error.hpp"
#include "valflag/tropical.hpp"

using namespace valflag;
using namespace valflag::testing;

namespace {

TropPolynomial poly(std::initializer_list<Term> ts) {
  TropPolynomial f(ts.begin()->vars());
  for (const auto& t : ts)
    f.add_term(t);
  return f;
}

TropPolynomial random_poly(std::mt19937& rng, std::size_t n) {
  TropPolynomial f(n);
  int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i)
    f.add_term(random_term(rng, n, 2, 2));
  return f;
}

} // namespace

TEST_CASE("polynomial arithmetic examples") {
  TropPolynomial f = poly({term(1, {0}), term(0, {1})});
  CHECK(f + f == f);
  TropPolynomial xy = poly({term(0, {1, 0})}) * poly({term(0, {0, 1})});
  CHECK(xy == poly({term(0, {1, 1})}));
  CHECK(f * f == poly({term(2, {0}), term(1, {1}), term(0, {2})}));
  CHECK_THROWS_AS(f + xy, DimensionError);
}

TEST_CASE("evaluation examples") {
  TropPolynomial f = poly({term(1, {0}), term(0, {1})});
  CHECK(eval(f, {sqrt2()}) == sqrt2());
  CHECK(!eval(TropPolynomial(1), {Scalar(3)}));
  CHECK(eval(poly({term(3, {0})}), {sqrt3()}) == Scalar(3));
  CHECK(eval_homog(f, 0, {Scalar(5)}) == Scalar(5));
  CHECK(eval_homog(f, 1, {sqrt2()}) == sqrt2());
  CHECK(eval_homog(poly({term(2, {0})}), 0, {Scalar(7)}) == Scalar(0));
  CHECK_THROWS_AS(eval_homog(f, -1, {Scalar(0)}), DomainError);
}

TEST_CASE("semiring axioms and evaluation homomorphism") {
  std::mt19937 rng(11);
  for (int it = 0; it < 200; ++it) {
    auto f = random_poly(rng, 2);
    auto g = random_poly(rng, 2);
    auto h = random_poly(rng, 2);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f + g == g + f);
    CHECK(f + f == f);
    std::vector<Scalar> x{pool_scalar(rng), pool_scalar(rng)};
    CHECK(*eval(f * g, x) == *eval(f, x) + *eval(g, x));
    CHECK(*eval(f + g, x) == std::max(*eval(f, x), *eval(g, x)));
    CHECK(eval_homog(f, 1, x) == eval(f, x));
  }
}
