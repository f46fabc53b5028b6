#pragma once

// Linear algebra over the Scalar field and over the integers.

#include <cstddef>
#include <optional>
#include <vector>

#include "valflag/scalar.hpp"

namespace valflag {

using ScalarVector = std::vector<Scalar>;
using ScalarMatrix = std::vector<ScalarVector>;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank of a matrix of Scalars (rows may be empty).
std::size_t rank(const ScalarMatrix& rows);

/// Solves A x = b exactly for a square nonsingular A; nullopt when singular.
std::optional<ScalarVector> solve(ScalarMatrix a, ScalarVector b);

/// Row-style Hermite normal form of an integer matrix. Only the first
/// pivot_cols columns are used for pivoting; remaining columns ride along.
/// Returns the reduced rows; rows whose pivot part vanished are kept at the
/// end and their count is reported through zero_rows.
IntMatrix hermite_rows(IntMatrix rows, std::size_t pivot_cols,
                       std::size_t* zero_rows = nullptr);

/// Hermite-reduced basis of the row lattice; zero rows dropped.
IntMatrix hermite_basis(IntMatrix rows);

/// Basis of {z in Z^r : a z = 0} for a rational p x r matrix a, in Hermite
/// form. When a has no rows the result is the standard basis of Z^r.
IntMatrix integer_kernel(const RationalMatrix& a, std::size_t r);

/// z * basis, a combination of lattice basis rows.
IntVector combine(const IntVector& z, const IntMatrix& basis, std::size_t n);

} // namespace valflag
