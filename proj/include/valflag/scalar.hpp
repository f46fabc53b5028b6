#pragma once

// Exact arithmetic in multi-quadratic real fields Q(sqrt(d1), ..., sqrt(dr)).
//
// A Scalar is stored as a finite sum  sum_n q_n * sqrt(n)  over squarefree
// radicands n (n = 1 is the rational part). Distinct squarefree square roots
// are linearly independent over Q, so a Scalar is zero exactly when its term
// map is empty and equality is structural. Signs are decided by integer
// interval arithmetic whose precision doubles until the interval excludes 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace valflag {

using Integer = mpz_class;
using Rational = mpq_class;

/// Upper bound on the number of independent radicals a Scalar may carry.
/// Independent radicals are counted as the size of a pairwise-coprime basis
/// of the radicands present. Default 8.
std::size_t radical_cap() noexcept;
void set_radical_cap(std::size_t cap) noexcept;

class Scalar {
public:
  using Radicand = std::uint64_t;
  using TermMap = std::map<Radicand, Rational>;

  Scalar() = default;
  Scalar(long value) : Scalar(Rational(value)) {}
  Scalar(int value) : Scalar(Rational(value)) {}
  Scalar(const Rational& value);

  /// q * sqrt(radicand); the radicand is reduced to squarefree form first.
  static Scalar sqrt(Radicand radicand, const Rational& q = Rational(1));

  /// Builds from arbitrary (squarefree) keys; zero coefficients are dropped.
  static Scalar from_terms(TermMap terms);

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// Coefficient of sqrt(n); zero when absent.
  Rational coefficient(Radicand n) const;
  Rational rational_part() const { return coefficient(1); }

  int sign() const;
  /// Rational bounds lo <= value <= hi, with precision 2^-bits relative to
  /// the common denominator.
  std::pair<Rational, Rational> enclose(unsigned bits) const;
  Integer floor() const;
  Integer ceil() const;
  double to_double() const;

  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(const Scalar& lhs, const Scalar& rhs);
  friend Scalar operator/(const Scalar& lhs, const Scalar& rhs);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.terms_ == b.terms_;
  }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

private:
  void check_capacity() const;

  TermMap terms_;
};

inline int scalar_sign(const Scalar& a) { return a.sign(); }

/// Distinct radicands other than 1 appearing in v, ascending.
std::vector<Scalar::Radicand> irrational_radicands(std::span<const Scalar> v);

/// For every radicand n != 1 present in v, the row (q_n(v_0), ..., q_n(v_m)).
/// An integer vector z has sum z_i v_i rational iff z annihilates every row.
std::vector<std::vector<Rational>>
rational_part_basis(std::span<const Scalar> v);

/// Like rational_part_basis but also includes the row for n = 1, so that
/// sum z_i v_i = 0 iff z annihilates every row.
std::vector<std::vector<Rational>> coefficient_rows(std::span<const Scalar> v);

/// Simplest rational (smallest denominator, then smallest magnitude) in the
/// open interval (lo, hi). Requires lo < hi.
Rational simplest_rational_between(const Scalar& lo, const Scalar& hi);

/// Simplest rational in the open interval (lo, hi) of rationals.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

/// Dot product of a Scalar vector with a rational or integer vector.
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);

} // namespace valflag
