#include <doctest.h>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "valflag/error.hpp"
#include "valflag/polyhedra.hpp"

using namespace valflag;
using namespace valflag::testing;

namespace {

const Scalar& r2 = sqrt2();
const Scalar& r3 = sqrt3();

GammaPolyhedron box(std::size_t n, Rational lo, Rational hi) {
  GammaPolyhedron p(n);
  for (std::size_t i = 0; i < n; ++i) {
    Exponent e(n, 0);
    e[i] = 1;
    p.add(e, hi);
    e[i] = -1;
    p.add(e, -lo);
  }
  return p;
}

Flag poly_flag(ScalarMatrix rows) {
  return flag_from_matrix(prime(std::move(rows)), Flag::Kind::polyhedra);
}

/// The other characterization: base in U, and U meets P_i minus P_{i-1}.
bool neighborhood_by_layers(const GammaPolyhedron& u, const Flag& f) {
  if (!u.contains(f.base()))
    return false;
  for (std::size_t i = 1; i < f.length(); ++i) {
    IneqSystem s(i);
    for (const auto& r : u.rows()) {
      ScalarVector normal(i);
      Scalar at_base;
      for (std::size_t k = 0; k < r.u.size(); ++k)
        at_base += f.base()[k] * Scalar(static_cast<long>(r.u[k]));
      for (std::size_t j = 0; j < i; ++j)
        for (std::size_t k = 0; k < r.u.size(); ++k)
          normal[j] += f.dirs()[j][k] * Scalar(static_cast<long>(r.u[k]));
      s.add(std::move(normal), Scalar(r.gamma) - at_base);
    }
    for (std::size_t j = 0; j < i; ++j) {
      ScalarVector normal(i);
      normal[j] = -1;
      s.add(std::move(normal), Scalar(), j + 1 == i);
    }
    if (!fm_feasible(s))
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("Fourier-Motzkin examples") {
  IneqSystem a(1);
  a.add({1}, 1, true);
  a.add({-1}, -1, true);
  CHECK(!fm_feasible(a));

  IneqSystem b(1);
  b.add({1}, r2);
  b.add({-1}, -r2);
  auto pb = fm_feasible(b);
  REQUIRE(pb);
  CHECK((*pb)[0] == r2);

  IneqSystem c(1);
  c.add({1}, r2, true);
  c.add({-1}, -1, true);
  auto pc = fm_feasible(c);
  REQUIRE(pc);
  CHECK((*pc)[0].is_rational());
  CHECK((*pc)[0] > Scalar(1));
  CHECK((*pc)[0] < r2);

  IneqSystem e(0);
  CHECK(fm_feasible(e));
  CHECK_THROWS_AS(a.add({1, 2}, 0), DimensionError);
}

TEST_CASE("Fourier-Motzkin agrees with face enumeration") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> rhs(-3, 3);
  int feasible = 0;
  int infeasible = 0;
  for (int it = 0; it < 400; ++it) {
    std::size_t d = 1 + rng() % 3;
    std::size_t m = 1 + rng() % 6;
    IneqSystem s(d);
    for (std::size_t i = 0; i < m; ++i) {
      ScalarVector normal(d);
      for (auto& v : normal)
        v = coef(rng);
      s.add(std::move(normal), Rational(rhs(rng), 1 + static_cast<int>(rng() % 2)),
            rng() % 3 == 0);
    }
    auto x = fm_feasible(s);
    bool oracle = oracle_feasible(s);
    CHECK(x.has_value() == oracle);
    if (x)
      CHECK(s.satisfied_by(*x));
    (oracle ? feasible : infeasible)++;
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 50);
}

TEST_CASE("Fourier-Motzkin with equalities agrees with face enumeration") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<int> rhs(-3, 3);
  int feasible = 0;
  int infeasible = 0;
  for (int it = 0; it < 300; ++it) {
    std::size_t d = 2 + rng() % 2;
    IneqSystem s(d);
    for (std::size_t i = 0; i < 2 + rng() % 4; ++i) {
      ScalarVector normal(d);
      for (auto& v : normal)
        v = coef(rng);
      if (rng() % 2)
        s.add_equality(normal, Rational(rhs(rng)));
      else
        s.add(std::move(normal), Rational(rhs(rng)), rng() % 3 == 0);
    }
    auto x = fm_feasible(s);
    CHECK(x.has_value() == oracle_feasible(s));
    if (x)
      CHECK(s.satisfied_by(*x));
    (x ? feasible : infeasible)++;
  }
  CHECK(feasible > 30);
  CHECK(infeasible > 30);
}

TEST_CASE("cone membership with many generators") {
  ScalarMatrix gens;
  for (int i = 0; i < 12; ++i)
    gens.push_back({1, Scalar(i), Scalar(i * i)});
  CHECK(in_cone({12, 66, 506}, gens));
  CHECK(in_cone({2, 11, 121}, gens));
  CHECK(in_cone({1, 5, 26}, gens));
  CHECK_FALSE(in_cone({1, 5, 24}, gens));
  CHECK_FALSE(in_cone({-1, 0, 0}, gens));
}

TEST_CASE("dimension by implicit equalities") {
  GammaPolyhedron seg(2);
  seg.add_equality({0, 1}, 0);
  seg.add({1, 0}, 3);
  seg.add({-1, 0}, 0);
  CHECK(seg.dimension() == 1);
  CHECK(box(2, 1, 2).dimension() == 2);
  GammaPolyhedron pt(2);
  pt.add_equality({1, 0}, 0);
  pt.add_equality({0, 1}, 0);
  CHECK(pt.dimension() == 0);
  GammaPolyhedron empty(1);
  empty.add({1}, -1);
  empty.add({-1}, 0);
  CHECK(!empty.dimension());
}

TEST_CASE("rational set examples") {
  TropPolynomial one(Term{0, {0}});
  TropPolynomial a(Term{-1, {1}});
  std::vector<TropPolynomial> fs{a};
  auto r = rational_set(one, fs);
  REQUIRE(r.pieces().size() == 1);
  CHECK(r.pieces()[0].rows() == std::vector<GammaInequality>{{{1}, 1}});

  std::vector<TropPolynomial> zero{TropPolynomial(1)};
  auto all = rational_set(one, zero);
  CHECK(all.pieces()[0].rows().empty());

  std::vector<TropPolynomial> tee{TropPolynomial(Term{1, {0}})};
  auto cones = rational_set_homog(one, tee);
  REQUIRE(cones.size() == 1);
  CHECK(cones[0].contains(0, {Scalar(5)}));
  CHECK(!cones[0].contains(Rational(1, 10), {Scalar(0)}));

  auto empty = rational_set(TropPolynomial(1), fs);
  CHECK(empty.pieces()[0].is_empty());
  CHECK(rational_set_homog(TropPolynomial(1), fs).empty());
}

TEST_CASE("rational sets match pointwise evaluation") {
  std::mt19937 rng(8);
  for (int it = 0; it < 60; ++it) {
    std::size_t n = 2;
    TropPolynomial f0(n);
    TropPolynomial f1(n);
    for (int k = 0; k < 2; ++k) {
      f0.add_term(random_term(rng, n, 2, 2));
      f1.add_term(random_term(rng, n, 2, 2));
    }
    std::vector<TropPolynomial> fs{f1};
    auto set = rational_set(f0, fs);
    auto cones = rational_set_homog(f0, fs);
    for (int s = 0; s < 10; ++s) {
      ScalarVector x{pool_scalar(rng), pool_scalar(rng)};
      bool in = *eval(f0, x) >= *eval(f1, x);
      CHECK(set.contains(x) == in);
      bool in_cones = std::any_of(cones.begin(), cones.end(),
                                  [&](const AdmissibleCone& c) {
                                    return c.contains(1, x);
                                  });
      CHECK(in_cones == in);
    }
  }
}

TEST_CASE("flags from matrices") {
  Flag whale = poly_flag({{1, r2, 0}, {0, 0, 1}});
  CHECK(whale.base() == ScalarVector{r2, 0});
  CHECK(whale.dirs() == ScalarMatrix{{0, 1}});
  Flag point = poly_flag({{1, r2, r3}});
  CHECK(point.length() == 1);
  CHECK(point.base() == ScalarVector{r2, r3});
  Flag ray = flag_from_matrix(prime({{0, 1, 0}}), Flag::Kind::cones);
  CHECK(ray.base() == ScalarVector{0, 1, 0});
  CHECK_THROWS_AS(flag_from_matrix(prime({{0, 1, 0}}), Flag::Kind::polyhedra),
                  DomainError);
}

TEST_CASE("neighborhood examples") {
  Flag point = poly_flag({{1, r2, r3}});
  CHECK(is_neighborhood(box(2, 1, 2), point));
  GammaPolyhedron half(2);
  half.add({1, 0}, 1);
  CHECK(!is_neighborhood(half, point));
  GammaPolyhedron upper(2);
  upper.add({0, -1}, 0);
  CHECK(is_neighborhood(upper, poly_flag({{1, r2, 0}, {0, 0, 1}})));
  GammaPolyhedron lower(2);
  lower.add({0, 1}, 0);
  CHECK(!is_neighborhood(lower, poly_flag({{1, r2, 0}, {0, 0, 1}})));
}

TEST_CASE("both neighborhood characterizations agree") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> c(-1, 1);
  std::uniform_int_distribution<int> g(-2, 3);
  int yes = 0;
  for (int it = 0; it < 200; ++it) {
    Flag f = flag_from_matrix(random_prime(rng, 2, true), Flag::Kind::polyhedra);
    GammaPolyhedron u(2);
    std::size_t m = 1 + rng() % 4;
    for (std::size_t i = 0; i < m; ++i)
      u.add({c(rng), c(rng)}, Rational(g(rng), 1 + static_cast<int>(rng() % 2)));
    bool a = is_neighborhood(u, f);
    CHECK(a == neighborhood_by_layers(u, f));
    yes += a;
  }
  CHECK(yes > 20);
}

TEST_CASE("local equivalence") {
  Flag whale = poly_flag({{1, r2, 0}, {0, 1, r3}});
  Flag dolphin = poly_flag({{1, r2, 0}, {0, 0, 1}});
  CHECK(locally_equivalent(whale, dolphin).is_equal());
  CHECK(!locally_equivalent(poly_flag({{1, 0, 0}}), poly_flag({{1, r2, 0}}))
             .is_equal());
  CHECK(locally_equivalent(whale, whale).is_equal());
  Flag ray = flag_from_matrix(prime({{0, 1, 0}}), Flag::Kind::cones);
  CHECK_THROWS_AS(locally_equivalent(whale, ray), PreconditionError);

  std::mt19937 rng(6);
  for (int it = 0; it < 30; ++it) {
    Prime p = random_prime(rng, 2, it % 2 == 0);
    auto kind = it % 2 == 0 ? Flag::Kind::polyhedra : Flag::Kind::cones;
    Flag f = flag_from_matrix(p, kind);
    CHECK(decide_equal(p, canonicalize(matrix_from_flag(f))).is_equal());
  }
}

TEST_CASE("simplicialize examples") {
  std::vector<ScalarMatrix> simplicial{{{1, 0, 0}}, {{1, 0, 0}, {0, 1, 0}}};
  Flag s = simplicialize(simplicial);
  CHECK(s.base() == ScalarVector{1, 0, 0});
  CHECK(s.dirs() == ScalarMatrix{{0, 1, 0}});

  std::vector<ScalarMatrix> fan{{{1, 0, 0}},
                                {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}}};
  Flag t = simplicialize(fan);
  CHECK(t.dirs() == ScalarMatrix{{1, 1, 0}});

  // four rays spanning a 2-dimensional member
  std::vector<ScalarMatrix> square{
      {{1, 0, 0}}, {{1, 0, 0}, {1, 1, 0}, {1, 2, 0}, {1, 3, 0}}};
  Flag q = simplicialize(square);
  ScalarMatrix interior{{1, 0, 0}, {4, 6, 0}};
  CHECK(decide_equal(canonicalize(matrix_from_flag(q)),
                     canonicalize(DefiningMatrix(2, interior)))
            .is_equal());

  // (1,1,0) is inside the member, so the first member is not a face
  std::vector<ScalarMatrix> bad{{{1, 1, 0}}, {{1, 0, 0}, {1, 2, 0}}};
  CHECK_THROWS_AS(simplicialize(bad), PreconditionError);
  std::vector<ScalarMatrix> wrong_dim{{{1, 0, 0}, {0, 1, 0}}};
  CHECK_THROWS_AS(simplicialize(wrong_dim), PreconditionError);
  std::vector<ScalarMatrix> not_nested{{{0, 0, 1}}, {{1, 0, 0}, {0, 1, 0}}};
  CHECK_THROWS_AS(simplicialize(not_nested), PreconditionError);
}
