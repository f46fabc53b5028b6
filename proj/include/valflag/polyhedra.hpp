#pragma once

// Polyhedral geometry over the Scalar field: strict/weak inequality systems
// solved by Fourier-Motzkin elimination, Gamma-rational polyhedra and their
// finite unions, rational sets of tropical polynomials, and flags.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "valflag/linear.hpp"
#include "valflag/prime.hpp"
#include "valflag/tropical.hpp"

namespace valflag {

/// <x, normal> <= rhs, or < rhs when strict.
struct Inequality {
  ScalarVector normal;
  Scalar rhs;
  bool strict = false;
};

class IneqSystem {
public:
  explicit IneqSystem(std::size_t dim) : dim_(dim) {}

  void add(ScalarVector normal, Scalar rhs, bool strict = false);
  /// <x, normal> = rhs as two weak rows.
  void add_equality(const ScalarVector& normal, const Scalar& rhs);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<Inequality>& rows() const noexcept { return rows_; }
  bool satisfied_by(const ScalarVector& x) const;

private:
  std::size_t dim_;
  std::vector<Inequality> rows_;
};

/// A point satisfying every row, or nullopt when the system is infeasible.
std::optional<ScalarVector> fm_feasible(const IneqSystem& s);

/// Dimension of the solution set, computed from its implicit equalities;
/// nullopt when empty. Strict rows are treated as weak.
std::optional<std::size_t> dimension(const IneqSystem& s);

/// <x, u> <= gamma.
struct GammaInequality {
  Exponent u;
  Rational gamma;

  friend bool operator==(const GammaInequality&,
                         const GammaInequality&) = default;
};

class GammaPolyhedron {
public:
  explicit GammaPolyhedron(std::size_t vars) : vars_(vars) {}
  GammaPolyhedron(std::size_t vars, std::vector<GammaInequality> rows);

  void add(Exponent u, Rational gamma);
  /// <x, u> = gamma as two rows.
  void add_equality(const Exponent& u, const Rational& gamma);

  std::size_t vars() const noexcept { return vars_; }
  const std::vector<GammaInequality>& rows() const noexcept { return rows_; }

  IneqSystem system() const;
  bool contains(const ScalarVector& x) const;
  bool is_empty() const { return !fm_feasible(system()); }
  std::optional<std::size_t> dimension() const {
    return valflag::dimension(system());
  }

  /// Intersection with another polyhedron.
  GammaPolyhedron meet(const GammaPolyhedron& other) const;

  friend bool operator==(const GammaPolyhedron&,
                         const GammaPolyhedron&) = default;

private:
  std::size_t vars_;
  std::vector<GammaInequality> rows_;
};

/// A finite union of Gamma-rational polyhedra (at least one piece).
class GammaPolyhedralSet {
public:
  explicit GammaPolyhedralSet(std::vector<GammaPolyhedron> pieces);

  std::size_t vars() const noexcept { return pieces_.front().vars(); }
  const std::vector<GammaPolyhedron>& pieces() const noexcept {
    return pieces_;
  }
  bool contains(const ScalarVector& x) const;

private:
  std::vector<GammaPolyhedron> pieces_;
};

/// r_coeff * r + <x, u> <= 0.
struct ConeInequality {
  Rational r_coeff;
  Exponent u;
};

/// A Gamma-admissible cone in R>=0 x N_R; r >= 0 is implicit.
struct AdmissibleCone {
  std::size_t vars = 0;
  std::vector<ConeInequality> rows;

  bool contains(const Scalar& r, const ScalarVector& x) const;
};

/// {x : f0(x) >= fi(x) for all i} as a union over the terms of f0. An empty
/// f0 against a nonzero fi gives a single empty piece.
GammaPolyhedralSet rational_set(const TropPolynomial& f0,
                                std::span<const TropPolynomial> fs);

/// Homogenized version, as a union of admissible cones (possibly none).
std::vector<AdmissibleCone>
rational_set_homog(const TropPolynomial& f0,
                   std::span<const TropPolynomial> fs);

/// A simplicial flag. Member i is cone(base, dirs[0..i)) for cones and
/// base + cone(dirs[0..i)) for polyhedra.
class Flag {
public:
  enum class Kind { cones, polyhedra };

  Flag(Kind kind, ScalarVector base, ScalarMatrix dirs);

  Kind kind() const noexcept { return kind_; }
  const ScalarVector& base() const noexcept { return base_; }
  const ScalarMatrix& dirs() const noexcept { return dirs_; }
  std::size_t ambient() const noexcept { return base_.size(); }
  std::size_t length() const noexcept { return dirs_.size() + 1; }

private:
  Kind kind_;
  ScalarVector base_;
  ScalarMatrix dirs_;
};

Flag flag_from_matrix(const Prime& p, Flag::Kind kind);

/// Rows base, dirs...; polyhedra kind prepends the homogenizing 1 / 0.
DefiningMatrix matrix_from_flag(const Flag& f);

/// U meets the relative interior of every member of the polyhedral flag.
bool is_neighborhood(const GammaPolyhedron& u, const Flag& f);

EqualityVerdict locally_equivalent(const Flag& f, const Flag& g);

/// x in cone(generators).
bool in_cone(const ScalarVector& x, const ScalarMatrix& generators);

/// Replaces a flag of cones, each given by generators, by a simplicial flag
/// spanned by one new generator per member.
Flag simplicialize(const std::vector<ScalarMatrix>& cones);

} // namespace valflag
