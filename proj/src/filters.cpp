#include "valflag/filters.hpp"

#include <stdexcept>

#include "valflag/error.hpp"

namespace valflag {

namespace {

void require_cont(const Prime& p) {
  if (classify(p) != PrimeClass::cont)
    throw DomainError("the filter is defined here for cont primes only");
}

ScalarVector to_scalars(const Exponent& u) {
  ScalarVector v;
  for (auto e : u)
    v.emplace_back(static_cast<long>(e));
  return v;
}

Rational round_half_up(const Scalar& s) {
  return Rational((s + Scalar(Rational(1, 2))).floor());
}

} // namespace

MembershipAnswer filter_member(const Prime& p, const GammaPolyhedralSet& u) {
  require_cont(p);
  if (u.vars() != p.vars())
    throw DimensionError("polyhedral set and prime have different dimensions");
  Flag flag = flag_from_matrix(p, Flag::Kind::polyhedra);
  for (std::size_t i = 0; i < u.pieces().size(); ++i)
    if (is_neighborhood(u.pieces()[i], flag))
      return {true, i};
  return {false, std::nullopt};
}

bool halfspace_member(const Prime& p, const Term& a) {
  require_cont(p);
  Term one{0, Exponent(p.vars(), 0)};
  return compare(p, a, one) != Comparison::greater;
}

FarkasCertificate::FarkasCertificate(Integer m, std::vector<Integer> m_l,
                                     Rational b, std::span<const Term> a_l,
                                     const Term& a)
    : m_(std::move(m)), m_l_(std::move(m_l)), b_(std::move(b)) {
  if (m_ <= 0 || b_ < 0 || m_l_.size() != a_l.size())
    throw std::logic_error("malformed Farkas certificate");
  for (const auto& v : m_l_)
    if (v < 0)
      throw std::logic_error("negative Farkas multiplier");
  auto [lhs, rhs] = certificate_sides(*this, a_l, a);
  if (lhs != rhs)
    throw std::logic_error("Farkas identity does not hold");
}

std::pair<Term, Term> certificate_sides(const FarkasCertificate& c,
                                        std::span<const Term> a_l,
                                        const Term& a) {
  Term lhs = pow(a, c.m());
  lhs.gamma += c.b();
  Term rhs{0, Exponent(a.vars(), 0)};
  for (std::size_t l = 0; l < a_l.size(); ++l)
    rhs = rhs * pow(a_l[l], c.m_l()[l]);
  return {lhs, rhs};
}

FarkasResult farkas_certify(std::span<const Term> a_l, const Term& a) {
  std::size_t n = a.vars();
  std::size_t k = a_l.size();
  for (const auto& t : a_l)
    if (t.vars() != n)
      throw DimensionError("terms have different variable counts");

  // x with gamma_l + <x, u_l> <= 0 for all l
  IneqSystem region(n);
  for (const auto& t : a_l)
    region.add(to_scalars(t.u), Scalar(-t.gamma));
  if (!fm_feasible(region))
    throw PreconditionError("the half-spaces have empty intersection");

  // r >= 0, sum r_l u_l = u, sum r_l gamma_l >= gamma
  IneqSystem lp(k);
  for (std::size_t i = 0; i < n; ++i) {
    ScalarVector row(k);
    for (std::size_t l = 0; l < k; ++l)
      row[l] = Scalar(static_cast<long>(a_l[l].u[i]));
    lp.add_equality(row, Scalar(static_cast<long>(a.u[i])));
  }
  ScalarVector value_row(k);
  for (std::size_t l = 0; l < k; ++l) {
    ScalarVector row(k);
    row[l] = -1;
    lp.add(std::move(row), Scalar());
    value_row[l] = Scalar(-a_l[l].gamma);
  }
  lp.add(std::move(value_row), Scalar(-a.gamma));
  auto r = fm_feasible(lp);

  // gamma + <x, u> > 0 inside the region
  IneqSystem outside = region;
  ScalarVector neg = to_scalars(a.u);
  for (auto& v : neg)
    v = -v;
  outside.add(std::move(neg), Scalar(a.gamma), true);
  auto x = fm_feasible(outside);

  if (r.has_value() == x.has_value())
    throw std::logic_error("Farkas alternative violated");
  if (x)
    return CounterexamplePoint{*x};

  Integer m = 1;
  for (const auto& s : *r) {
    if (!s.is_rational())
      throw std::logic_error("irrational multiplier from rational data");
    Rational q = s.rational_part();
    mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<Integer> m_l;
  Rational b = -Rational(m) * a.gamma;
  for (std::size_t l = 0; l < k; ++l) {
    Rational q = (*r)[l].rational_part() * Rational(m);
    m_l.push_back(q.get_num());
    b += Rational(m_l.back()) * a_l[l].gamma;
  }
  b.canonicalize();
  return FarkasCertificate(std::move(m), std::move(m_l), std::move(b), a_l, a);
}

GammaPolyhedron mindim_witness(const Prime& p) {
  require_cont(p);
  std::size_t n = p.vars();
  KernelSubgroup h = final_kernel(p);
  GammaPolyhedron u(n);
  for (std::size_t j = 0; j < h.rank(); ++j)
    u.add_equality(to_exponent(h.basis[j]), -h.ell[j]);
  const ScalarVector vertex(p.rows()[0].begin() + 1, p.rows()[0].end());
  for (std::size_t i = 0; i < n; ++i) {
    Rational c = round_half_up(vertex[i]);
    Exponent e(n, 0);
    e[i] = 1;
    u.add(e, c + 3);
    e[i] = -1;
    u.add(e, 3 - c);
  }
  Flag flag = flag_from_matrix(p, Flag::Kind::polyhedra);
  if (!is_neighborhood(u, flag) || u.dimension() != min_filter_dim(p))
    throw std::logic_error("minimum-dimension witness failed verification");
  return u;
}

std::vector<Comparison>
reconstruct_preorder(const HalfspaceOracle& oracle,
                     std::span<const std::pair<Term, Term>> pairs) {
  std::vector<Comparison> out;
  out.reserve(pairs.size());
  for (const auto& [s, t] : pairs) {
    bool le = oracle(s / t);
    bool ge = oracle(t / s);
    if (!le && !ge)
      throw PreconditionError("oracle is not a filter: neither half-space "
                              "is a member");
    out.push_back(le && ge ? Comparison::equal
                           : le ? Comparison::less : Comparison::greater);
  }
  return out;
}

} // namespace valflag
