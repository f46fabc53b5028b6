#pragma once

// Text and JSON forms of scalars, terms, polynomials, matrices and
// polyhedra. Every printer produces text its parser reads back unchanged.
//
//   scalar  := term (('+'|'-') term)*
//   term    := rational ('*' 'sqrt(' uint ')')? | '-'? 'sqrt(' uint ')'
//   poly    := '0' | monomial ('+' monomial)*
//   monomial:= factor ('*' factor)*,  factor := '1' | 't' ('^' rational)?
//              | var ('^' int)?

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "valflag/filters.hpp"
#include "valflag/polyhedra.hpp"
#include "valflag/prime.hpp"

namespace valflag {

using Json = nlohmann::json;
using VarNames = std::vector<std::string>;

/// x, y, z for up to three variables, x1..xn otherwise.
VarNames default_var_names(std::size_t n);

Rational parse_rational(std::string_view text);
Scalar parse_scalar(std::string_view text);
Term parse_term(std::string_view text, const VarNames& vars);
TropPolynomial parse_polynomial(std::string_view text, const VarNames& vars);

std::string to_string(const Rational& q);
std::string to_string(const Scalar& s);
std::string to_string(const Term& t, const VarNames& vars);
std::string to_string(const TropPolynomial& f, const VarNames& vars);

/// Decimal rendering, rounded to the given number of fractional digits.
std::string to_decimal(const Scalar& s, int digits = 12);

/// Parses JSON text, reporting syntax errors with line and column.
Json parse_json(std::string_view text);

struct NamedMatrix {
  VarNames vars;
  DefiningMatrix matrix;
};

NamedMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const VarNames& vars, const ScalarMatrix& rows);

GammaPolyhedron polyhedron_from_json(const Json& j, std::size_t vars);
/// Accepts {"pieces": [...]} or a single polyhedron.
GammaPolyhedralSet polyset_from_json(const Json& j, std::size_t vars);
Json polyhedron_to_json(const GammaPolyhedron& p);

Json scalars_to_json(const ScalarVector& v);

} // namespace valflag
