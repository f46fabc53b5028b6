#include "valflag/tropical.hpp"

#include "valflag/error.hpp"

namespace valflag {

namespace {

void check_vars(std::size_t a, std::size_t b) {
  if (a != b)
    throw DimensionError("variable counts differ: " + std::to_string(a) +
                         " vs " + std::to_string(b));
}

TropValue max_value(TropValue a, const Scalar& b) {
  if (!a || *a < b)
    return b;
  return a;
}

} // namespace

Term operator*(const Term& a, const Term& b) {
  check_vars(a.vars(), b.vars());
  Term t{a.gamma + b.gamma, a.u};
  for (std::size_t i = 0; i < t.u.size(); ++i)
    t.u[i] += b.u[i];
  return t;
}

Term operator/(const Term& a, const Term& b) {
  check_vars(a.vars(), b.vars());
  Term t{a.gamma - b.gamma, a.u};
  for (std::size_t i = 0; i < t.u.size(); ++i)
    t.u[i] -= b.u[i];
  return t;
}

Term pow(const Term& a, const Integer& e) {
  Term t{a.gamma * Rational(e), a.u};
  for (auto& v : t.u) {
    Integer p = Integer(static_cast<long>(v)) * e;
    if (!p.fits_slong_p())
      throw CapacityError("exponent overflow");
    v = p.get_si();
  }
  return t;
}

TropPolynomial::TropPolynomial(const Term& t) : vars_(t.vars()) {
  add_term(t);
}

void TropPolynomial::add_term(const Term& t) {
  check_vars(vars_, t.vars());
  auto [it, inserted] = terms_.emplace(t.u, t.gamma);
  if (!inserted && it->second < t.gamma)
    it->second = t.gamma;
}

std::vector<Term> TropPolynomial::term_list() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [u, g] : terms_)
    out.push_back(Term{g, u});
  return out;
}

TropPolynomial& TropPolynomial::operator+=(const TropPolynomial& rhs) {
  check_vars(vars_, rhs.vars_);
  for (const auto& [u, g] : rhs.terms_)
    add_term(Term{g, u});
  return *this;
}

TropPolynomial operator*(const TropPolynomial& a, const TropPolynomial& b) {
  check_vars(a.vars_, b.vars_);
  TropPolynomial out(a.vars_);
  for (const auto& [u, g] : a.terms_)
    for (const auto& [v, h] : b.terms_)
      out.add_term(Term{g, u} * Term{h, v});
  return out;
}

Scalar eval(const Term& t, const std::vector<Scalar>& x) {
  check_vars(t.vars(), x.size());
  Scalar s(t.gamma);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (t.u[i] != 0)
      s += x[i] * Scalar(static_cast<long>(t.u[i]));
  return s;
}

TropValue eval(const TropPolynomial& f, const std::vector<Scalar>& x) {
  check_vars(f.vars(), x.size());
  TropValue best;
  for (const auto& [u, g] : f.terms())
    best = max_value(best, eval(Term{g, u}, x));
  return best;
}

TropValue eval_homog(const TropPolynomial& f, const Scalar& r,
                     const std::vector<Scalar>& x) {
  if (r.sign() < 0)
    throw DomainError("homogenizing coordinate must be nonnegative");
  check_vars(f.vars(), x.size());
  TropValue best;
  for (const auto& [u, g] : f.terms()) {
    Scalar v = r * Scalar(g);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (u[i] != 0)
        v += x[i] * Scalar(static_cast<long>(u[i]));
    best = max_value(best, v);
  }
  return best;
}

} // namespace valflag
