#pragma once

// Prime congruences on tropical Laurent polynomial semirings, given by
// defining matrices whose rows are (c, xi) with c the coefficient column.
// A term t^gamma x^u is sent to C (gamma, u) and terms are compared by the
// lexicographic order of their images.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "valflag/linear.hpp"
#include "valflag/tropical.hpp"

namespace valflag {

class DefiningMatrix {
public:
  DefiningMatrix(std::size_t vars, ScalarMatrix rows);

  std::size_t vars() const noexcept { return vars_; }
  const ScalarMatrix& rows() const noexcept { return rows_; }

  friend bool operator==(const DefiningMatrix&,
                         const DefiningMatrix&) = default;

private:
  std::size_t vars_;
  ScalarMatrix rows_;
};

/// A prime congruence held through its canonical defining matrix: rows are
/// independent, each row's first nonzero entry is +-1, at most one entry of
/// the first column is nonzero and that entry is 1. Two matrices related by
/// positive row scaling, adding multiples of a row to rows below it, and
/// dropping zero rows have the same canonical form.
class Prime {
public:
  std::size_t vars() const noexcept { return vars_; }
  const ScalarMatrix& rows() const noexcept { return rows_; }
  DefiningMatrix matrix() const { return {vars_, rows_}; }

  friend bool operator==(const Prime&, const Prime&) = default;

private:
  Prime(std::size_t vars, ScalarMatrix rows)
      : vars_(vars), rows_(std::move(rows)) {}
  friend Prime canonicalize(const DefiningMatrix& c);

  std::size_t vars_;
  ScalarMatrix rows_;
};

Prime canonicalize(const DefiningMatrix& c);

enum class Comparison { less, equal, greater };
std::string to_string(Comparison c);

/// Lex value of a polynomial; nullopt is -inf.
using LexValue = std::optional<ScalarVector>;

/// Image C (gamma, u) of an exponent vector.
ScalarVector image(const ScalarMatrix& rows, const ExponentVector& w);

/// Sign of the first nonzero entry; 0 for the zero vector.
int sign_lex(std::span<const Scalar> v);

LexValue phi(const Prime& p, const TropPolynomial& f);
Comparison compare(const Prime& p, const TropPolynomial& f,
                   const TropPolynomial& g);

/// A subgroup of Q x Z^n: either Q x Lambda (product) or the graph
/// {(ell(m), m) : m in Lambda} of a rational linear map on Lambda.
struct KernelSubgroup {
  enum class Kind { product, graph };

  Kind kind = Kind::product;
  std::size_t vars = 0;
  IntMatrix basis;          // Hermite-reduced rows spanning Lambda
  std::vector<Rational> ell; // values on basis rows; graph kind only

  std::size_t rank() const noexcept { return basis.size(); }
  bool is_trivial() const noexcept {
    return kind == Kind::graph && basis.empty();
  }
};

class EqualityVerdict {
public:
  enum class Outcome { equal, distinguished };

  static EqualityVerdict equal() { return EqualityVerdict(); }
  /// Throws std::logic_error unless w has different lex signs under a and b.
  static EqualityVerdict distinguished(ExponentVector w, const ScalarMatrix& a,
                                       const ScalarMatrix& b);

  Outcome outcome() const noexcept { return outcome_; }
  bool is_equal() const noexcept { return outcome_ == Outcome::equal; }
  const std::optional<ExponentVector>& witness() const noexcept {
    return witness_;
  }

private:
  EqualityVerdict() = default;

  Outcome outcome_ = Outcome::equal;
  std::optional<ExponentVector> witness_;
};

/// Equal iff every exponent vector in Q x Z^n has the same lex sign under
/// both primes; otherwise a distinguishing exponent vector.
EqualityVerdict decide_equal(const Prime& a, const Prime& b);

enum class PrimeClass { cont, coefficient_blind, non_continuous };
std::string to_string(PrimeClass c);

PrimeClass classify(const Prime& p);

/// {w in Q x Z^n : C w = 0}.
KernelSubgroup final_kernel(const Prime& p);

/// Both require a cont prime.
std::size_t height(const Prime& p);
std::size_t min_filter_dim(const Prime& p);

/// True iff distinct terms are never equivalent.
bool is_order(const Prime& p);

/// Integer vector to exponent, throwing CapacityError on overflow.
Exponent to_exponent(const IntVector& v);

} // namespace valflag
