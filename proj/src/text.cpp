#include "valflag/text.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "valflag/error.hpp"

namespace valflag {

namespace {

class Cursor {
public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w)
      return false;
    pos_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!at_end())
      fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  Integer uint_value() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a digit");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }
  Integer int_value() {
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Integer v = uint_value();
    return neg ? Integer(-v) : v;
  }
  Rational rational_value() {
    Integer num = int_value();
    Integer den = 1;
    if (accept('/')) {
      den = uint_value();
      if (den == 0)
        fail("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() &&
        (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      ++pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& why) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(why, line, col);
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Scalar sqrt_call(Cursor& c, const Rational& q) {
  c.expect('(');
  Integer n = c.uint_value();
  c.expect(')');
  if (!n.fits_ulong_p())
    c.fail("radicand too large");
  return Scalar::sqrt(n.get_ui(), q);
}

Scalar scalar_term(Cursor& c) {
  bool neg = c.accept('-');
  if (c.accept_word("sqrt"))
    return sqrt_call(c, neg ? Rational(-1) : Rational(1));
  Integer num = c.uint_value();
  Integer den = 1;
  if (c.accept('/')) {
    den = c.uint_value();
    if (den == 0)
      c.fail("zero denominator");
  }
  Rational q(neg ? Integer(-num) : num, den);
  q.canonicalize();
  if (c.accept('*')) {
    if (!c.accept_word("sqrt"))
      c.fail("expected sqrt");
    return sqrt_call(c, q);
  }
  return Scalar(q);
}

Term monomial(Cursor& c, const VarNames& vars) {
  Term t{0, Exponent(vars.size(), 0)};
  do {
    if (c.peek() == '1') {
      Integer one = c.uint_value();
      if (one != 1)
        c.fail("only 1 may appear as a constant factor");
      continue;
    }
    std::string name = c.identifier();
    if (name.empty())
      c.fail("expected a factor");
    if (name == "t") {
      Rational g = 1;
      if (c.accept('^')) {
        if (c.accept('(')) {
          g = c.rational_value();
          c.expect(')');
        } else {
          g = c.rational_value();
        }
      }
      t.gamma += g;
      continue;
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end())
      c.fail("unknown variable '" + name + "'");
    Integer e = 1;
    if (c.accept('^')) {
      if (c.accept('(')) {
        e = c.int_value();
        c.expect(')');
      } else {
        e = c.int_value();
      }
    }
    if (!e.fits_slong_p())
      c.fail("exponent too large");
    t.u[static_cast<std::size_t>(it - vars.begin())] += e.get_si();
  } while (c.accept('*'));
  return t;
}

void check_var_names(const VarNames& vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    Cursor c(v);
    std::string id = c.identifier();
    if (id != v || v.empty())
      throw ParseError("invalid variable name '" + v + "'", 1, 1);
    if (v == "t")
      throw ParseError("'t' is reserved for the coefficient", 1, 1);
    if (!seen.insert(v).second)
      throw ParseError("duplicate variable name '" + v + "'", 1, 1);
  }
}

template <class F>
auto with_context(const std::string& where, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.reason(), e.line(), e.column());
  }
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_string())
    return with_context(where, [&] { return parse_scalar(j.get<std::string>()); });
  if (j.is_number_integer())
    return Scalar(Rational(Integer(j.dump())));
  throw ParseError(where + ": expected a scalar string or integer", 1, 1);
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_string())
    return with_context(where,
                        [&] { return parse_rational(j.get<std::string>()); });
  if (j.is_number_integer())
    return Rational(Integer(j.dump()));
  throw ParseError(where + ": expected a rational string or integer", 1, 1);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError(where + ": missing \"" + key + "\"", 1, 1);
  return j.at(key);
}

} // namespace

VarNames default_var_names(std::size_t n) {
  if (n <= 3) {
    VarNames v{"x", "y", "z"};
    v.resize(n);
    return v;
  }
  VarNames v;
  for (std::size_t i = 1; i <= n; ++i)
    v.push_back("x" + std::to_string(i));
  return v;
}

Rational parse_rational(std::string_view text) {
  Cursor c(text);
  Rational q = c.rational_value();
  c.expect_end();
  return q;
}

Scalar parse_scalar(std::string_view text) {
  Cursor c(text);
  Scalar s = scalar_term(c);
  for (;;) {
    if (c.accept('+'))
      s += scalar_term(c);
    else if (c.accept('-'))
      s -= scalar_term(c);
    else
      break;
  }
  c.expect_end();
  return s;
}

Term parse_term(std::string_view text, const VarNames& vars) {
  Cursor c(text);
  Term t = monomial(c, vars);
  c.expect_end();
  return t;
}

TropPolynomial parse_polynomial(std::string_view text, const VarNames& vars) {
  Cursor c(text);
  TropPolynomial f(vars.size());
  if (c.accept_word("0")) {
    c.expect_end();
    return f;
  }
  do
    f.add_term(monomial(c, vars));
  while (c.accept('+'));
  c.expect_end();
  return f;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Scalar& s) {
  if (s.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [n, q] : s.terms()) {
    Rational mag = abs(q);
    std::string body;
    if (n == 1)
      body = to_string(mag);
    else if (mag == 1)
      body = "sqrt(" + std::to_string(n) + ")";
    else
      body = to_string(mag) + "*sqrt(" + std::to_string(n) + ")";
    if (first)
      out = (q < 0 ? "-" : "") + body;
    else
      out += (q < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

std::string to_string(const Term& t, const VarNames& vars) {
  if (vars.size() != t.vars())
    throw DimensionError("term and variable names differ in length");
  std::vector<std::string> factors;
  if (t.gamma != 0)
    factors.push_back("t^" + to_string(t.gamma));
  for (std::size_t i = 0; i < t.u.size(); ++i) {
    if (t.u[i] == 1)
      factors.push_back(vars[i]);
    else if (t.u[i] != 0)
      factors.push_back(vars[i] + "^" + std::to_string(t.u[i]));
  }
  if (factors.empty())
    return "1";
  std::string out = factors[0];
  for (std::size_t i = 1; i < factors.size(); ++i)
    out += "*" + factors[i];
  return out;
}

std::string to_string(const TropPolynomial& f, const VarNames& vars) {
  if (f.is_zero())
    return "0";
  std::string out;
  for (const auto& t : f.term_list())
    out += (out.empty() ? "" : " + ") + to_string(t, vars);
  return out;
}

std::string to_decimal(const Scalar& s, int digits) {
  auto [lo, hi] = s.enclose(96);
  Rational mid = (lo + hi) / 2;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = mid * Rational(scale) + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  bool neg = r < 0;
  if (neg)
    r = -r;
  std::string d = r.get_str();
  if (d.size() <= static_cast<std::size_t>(digits))
    d.insert(0, static_cast<std::size_t>(digits) + 1 - d.size(), '0');
  std::string out = d.substr(0, d.size() - static_cast<std::size_t>(digits));
  if (digits > 0)
    out += "." + d.substr(d.size() - static_cast<std::size_t>(digits));
  return (neg ? "-" : "") + out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t limit = e.byte > 0 ? e.byte - 1 : 0;
    for (std::size_t i = 0; i < limit && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON", line, col);
  }
}

NamedMatrix matrix_from_json(const Json& j) {
  const Json& rows = field(j, "rows", "matrix");
  if (!rows.is_array())
    throw ParseError("matrix: \"rows\" must be an array", 1, 1);
  VarNames vars;
  if (j.contains("vars")) {
    if (!j.at("vars").is_array())
      throw ParseError("matrix: \"vars\" must be an array", 1, 1);
    for (const auto& v : j.at("vars")) {
      if (!v.is_string())
        throw ParseError("matrix: variable names must be strings", 1, 1);
      vars.push_back(v.get<std::string>());
    }
  } else if (!rows.empty() && rows[0].is_array() && !rows[0].empty()) {
    vars = default_var_names(rows[0].size() - 1);
  } else {
    throw ParseError("matrix: \"vars\" is required when there are no rows",
                     1, 1);
  }
  check_var_names(vars);
  ScalarMatrix m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string where = "rows[" + std::to_string(i) + "]";
    if (!rows[i].is_array())
      throw ParseError(where + ": expected an array", 1, 1);
    ScalarVector row;
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      row.push_back(scalar_from_json(rows[i][k],
                                     where + "[" + std::to_string(k) + "]"));
    m.push_back(std::move(row));
  }
  return NamedMatrix{vars, DefiningMatrix(vars.size(), std::move(m))};
}

Json scalars_to_json(const ScalarVector& v) {
  Json a = Json::array();
  for (const auto& s : v)
    a.push_back(to_string(s));
  return a;
}

Json matrix_to_json(const VarNames& vars, const ScalarMatrix& rows) {
  Json rs = Json::array();
  for (const auto& r : rows)
    rs.push_back(scalars_to_json(r));
  return Json{{"vars", vars}, {"rows", rs}};
}

GammaPolyhedron polyhedron_from_json(const Json& j, std::size_t vars) {
  const Json& ineqs = field(j, "ineqs", "polyhedron");
  if (!ineqs.is_array())
    throw ParseError("polyhedron: \"ineqs\" must be an array", 1, 1);
  GammaPolyhedron p(vars);
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    std::string where = "ineqs[" + std::to_string(i) + "]";
    const Json& u = field(ineqs[i], "u", where);
    if (!u.is_array())
      throw ParseError(where + ": \"u\" must be an array", 1, 1);
    Exponent e;
    for (const auto& v : u) {
      if (!v.is_number_integer())
        throw ParseError(where + ": \"u\" entries must be integers", 1, 1);
      e.push_back(v.get<std::int64_t>());
    }
    if (e.size() != vars)
      throw DimensionError(where + ": normal has " + std::to_string(e.size()) +
                           " entries, expected " + std::to_string(vars));
    p.add(std::move(e),
          rational_from_json(field(ineqs[i], "gamma", where), where + ".gamma"));
  }
  return p;
}

GammaPolyhedralSet polyset_from_json(const Json& j, std::size_t vars) {
  if (j.is_object() && j.contains("pieces")) {
    const Json& ps = j.at("pieces");
    if (!ps.is_array() || ps.empty())
      throw ParseError("\"pieces\" must be a nonempty array", 1, 1);
    std::vector<GammaPolyhedron> pieces;
    for (const auto& p : ps)
      pieces.push_back(polyhedron_from_json(p, vars));
    return GammaPolyhedralSet(std::move(pieces));
  }
  return GammaPolyhedralSet({polyhedron_from_json(j, vars)});
}

Json polyhedron_to_json(const GammaPolyhedron& p) {
  Json rows = Json::array();
  for (const auto& r : p.rows())
    rows.push_back(Json{{"u", r.u}, {"gamma", to_string(r.gamma)}});
  return Json{{"ineqs", rows}};
}

} // namespace valflag
