#pragma once

// Max-plus Laurent polynomials with rational coefficients, stored in log
// convention: the coefficient t^a is kept as the rational a.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "valflag/scalar.hpp"

namespace valflag {

using Exponent = std::vector<std::int64_t>;

/// An element of Q u {-inf}; nullopt is -inf.
using TropNumber = std::optional<Rational>;

/// A real value or -inf (nullopt).
using TropValue = std::optional<Scalar>;

/// A nonzero term t^gamma * x^u. Also serves as the exponent vector
/// (gamma, u) of the term.
struct Term {
  Rational gamma;
  Exponent u;

  std::size_t vars() const noexcept { return u.size(); }

  friend bool operator==(const Term&, const Term&) = default;
};

using ExponentVector = Term;

Term operator*(const Term& a, const Term& b);
Term operator/(const Term& a, const Term& b);
Term pow(const Term& a, const Integer& e);

class TropPolynomial {
public:
  using TermMap = std::map<Exponent, Rational>;

  explicit TropPolynomial(std::size_t vars) : vars_(vars) {}
  TropPolynomial(const Term& t);

  /// Inserts a term, keeping the larger coefficient on collision.
  void add_term(const Term& t);

  std::size_t vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<Term> term_list() const;

  TropPolynomial& operator+=(const TropPolynomial& rhs);
  friend TropPolynomial operator+(TropPolynomial a, const TropPolynomial& b) {
    return a += b;
  }
  friend TropPolynomial operator*(const TropPolynomial& a,
                                  const TropPolynomial& b);

  friend bool operator==(const TropPolynomial&,
                         const TropPolynomial&) = default;

private:
  std::size_t vars_;
  TermMap terms_;
};

/// max over terms of gamma_u + <x, u>; nullopt for the zero polynomial.
TropValue eval(const TropPolynomial& f, const std::vector<Scalar>& x);

/// max over terms of r * gamma_u + <x, u>. Requires r >= 0.
TropValue eval_homog(const TropPolynomial& f, const Scalar& r,
                     const std::vector<Scalar>& x);

/// <x, u> + gamma for a single term.
Scalar eval(const Term& t, const std::vector<Scalar>& x);

} // namespace valflag
