#include "valflag/polyhedra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "valflag/error.hpp"

namespace valflag {

namespace {

// Structural order on scalar vectors, used only to bucket identical normals.
struct StructuralLess {
  bool operator()(const ScalarVector& a, const ScalarVector& b) const {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [](const Scalar& x, const Scalar& y) { return x.terms() < y.terms(); });
  }
};

bool row_ok(const Inequality& r, const Scalar& lhs) {
  int s = (lhs - r.rhs).sign();
  return r.strict ? s < 0 : s <= 0;
}

/// Scales so the first nonzero normal entry has absolute value 1, then keeps
/// only the tightest row per normal. Returns false on a contradiction among
/// rows with zero normal.
bool tidy(std::vector<Inequality>& rows) {
  std::map<ScalarVector, Inequality, StructuralLess> best;
  for (auto& r : rows) {
    auto lead = std::find_if(r.normal.begin(), r.normal.end(),
                             [](const Scalar& s) { return !s.is_zero(); });
    if (lead == r.normal.end()) {
      int s = r.rhs.sign();
      if (s < 0 || (s == 0 && r.strict))
        return false;
      continue;
    }
    if (*lead != Scalar(1) && *lead != Scalar(-1)) {
      Scalar scale = lead->abs().inverse();
      for (auto& v : r.normal)
        v *= scale;
      r.rhs *= scale;
    }
    auto [it, inserted] = best.emplace(r.normal, r);
    if (!inserted) {
      int c = (r.rhs - it->second.rhs).sign();
      if (c < 0 || (c == 0 && r.strict))
        it->second = r;
    }
  }
  rows.clear();
  for (auto& [n, r] : best)
    rows.push_back(std::move(r));
  return true;
}

std::vector<Inequality> eliminate(const std::vector<Inequality>& rows,
                                  std::size_t k) {
  std::vector<Inequality> pos;
  std::vector<Inequality> neg;
  std::vector<Inequality> out;
  for (const auto& r : rows) {
    int s = r.normal[k].sign();
    if (s == 0) {
      out.push_back(r);
      continue;
    }
    Inequality n = r;
    Scalar scale = r.normal[k].abs().inverse();
    for (auto& v : n.normal)
      v *= scale;
    n.rhs *= scale;
    (s > 0 ? pos : neg).push_back(std::move(n));
  }
  // an equality through x_k: substitute instead of pairing
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const Inequality& p = pos[i];
    if (p.strict)
      continue;
    for (std::size_t j = 0; j < neg.size(); ++j) {
      const Inequality& q = neg[j];
      if (q.strict || !(p.rhs + q.rhs).is_zero())
        continue;
      bool opposite = true;
      for (std::size_t c = 0; c < p.normal.size() && opposite; ++c)
        opposite = (p.normal[c] + q.normal[c]).is_zero();
      if (!opposite)
        continue;
      auto substitute = [&](const Inequality& r, int sign) {
        Inequality c = r;
        for (std::size_t m = 0; m < c.normal.size(); ++m)
          c.normal[m] = m == k ? Scalar() : r.normal[m] - sign * p.normal[m];
        c.rhs = r.rhs - sign * p.rhs;
        out.push_back(std::move(c));
      };
      for (std::size_t m = 0; m < pos.size(); ++m)
        if (m != i)
          substitute(pos[m], 1);
      for (std::size_t m = 0; m < neg.size(); ++m)
        if (m != j)
          substitute(neg[m], -1);
      return out;
    }
  }
  for (const auto& p : pos) {
    for (const auto& q : neg) {
      Inequality c;
      c.normal.resize(p.normal.size());
      for (std::size_t j = 0; j < p.normal.size(); ++j)
        c.normal[j] = j == k ? Scalar() : p.normal[j] + q.normal[j];
      c.rhs = p.rhs + q.rhs;
      c.strict = p.strict || q.strict;
      out.push_back(std::move(c));
    }
  }
  return out;
}

Scalar pick(const std::optional<Scalar>& lo, const std::optional<Scalar>& hi) {
  if (lo && hi) {
    if (*lo == *hi)
      return *lo;
    return Scalar(simplest_rational_between(*lo, *hi));
  }
  if (lo)
    return Scalar(Rational(lo->floor() + 1));
  if (hi)
    return Scalar(Rational(hi->ceil() - 1));
  return Scalar();
}

ScalarVector to_scalars(const Exponent& u) {
  ScalarVector v;
  v.reserve(u.size());
  for (auto e : u)
    v.emplace_back(static_cast<long>(e));
  return v;
}

Scalar dot_exp(const ScalarVector& x, const Exponent& u) {
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0)
      s += x[i] * Scalar(static_cast<long>(u[i]));
  return s;
}

void check_len(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw DimensionError(std::string(what) + ": length " +
                         std::to_string(got) + ", expected " +
                         std::to_string(want));
}

} // namespace

void IneqSystem::add(ScalarVector normal, Scalar rhs, bool strict) {
  check_len(normal.size(), dim_, "inequality normal");
  rows_.push_back(Inequality{std::move(normal), std::move(rhs), strict});
}

void IneqSystem::add_equality(const ScalarVector& normal, const Scalar& rhs) {
  add(normal, rhs);
  ScalarVector neg = normal;
  for (auto& v : neg)
    v = -v;
  add(std::move(neg), -rhs);
}

bool IneqSystem::satisfied_by(const ScalarVector& x) const {
  check_len(x.size(), dim_, "point");
  for (const auto& r : rows_)
    if (!row_ok(r, dot(r.normal, x)))
      return false;
  return true;
}

std::optional<ScalarVector> fm_feasible(const IneqSystem& s) {
  std::size_t d = s.dim();
  // stages[k] involves only variables 0..k-1
  std::vector<std::vector<Inequality>> stages(d + 1);
  stages[d] = s.rows();
  if (!tidy(stages[d]))
    return std::nullopt;
  for (std::size_t k = d; k-- > 0;) {
    stages[k] = eliminate(stages[k + 1], k);
    if (!tidy(stages[k]))
      return std::nullopt;
  }
  ScalarVector x(d);
  for (std::size_t k = 0; k < d; ++k) {
    std::optional<Scalar> lo;
    std::optional<Scalar> hi;
    for (const auto& r : stages[k + 1]) {
      const Scalar& a = r.normal[k];
      if (a.is_zero())
        continue;
      Scalar rest;
      for (std::size_t j = 0; j < k; ++j)
        if (!r.normal[j].is_zero())
          rest += r.normal[j] * x[j];
      Scalar bound = (r.rhs - rest) / a;
      if (a.sign() > 0) {
        if (!hi || bound < *hi)
          hi = bound;
      } else {
        if (!lo || bound > *lo)
          lo = bound;
      }
    }
    x[k] = pick(lo, hi);
  }
  if (!s.satisfied_by(x))
    throw std::logic_error("Fourier-Motzkin back-substitution failed");
  return x;
}

std::optional<std::size_t> dimension(const IneqSystem& s) {
  IneqSystem weak(s.dim());
  for (const auto& r : s.rows())
    weak.add(r.normal, r.rhs);
  if (!fm_feasible(weak))
    return std::nullopt;
  ScalarMatrix equalities;
  for (std::size_t i = 0; i < weak.rows().size(); ++i) {
    IneqSystem probe(s.dim());
    for (std::size_t j = 0; j < weak.rows().size(); ++j)
      probe.add(weak.rows()[j].normal, weak.rows()[j].rhs, i == j);
    if (!fm_feasible(probe))
      equalities.push_back(weak.rows()[i].normal);
  }
  return s.dim() - rank(equalities);
}

GammaPolyhedron::GammaPolyhedron(std::size_t vars,
                                 std::vector<GammaInequality> rows)
    : vars_(vars) {
  for (auto& r : rows)
    add(std::move(r.u), std::move(r.gamma));
}

void GammaPolyhedron::add(Exponent u, Rational gamma) {
  check_len(u.size(), vars_, "polyhedron normal");
  rows_.push_back(GammaInequality{std::move(u), std::move(gamma)});
}

void GammaPolyhedron::add_equality(const Exponent& u, const Rational& gamma) {
  add(u, gamma);
  Exponent neg = u;
  for (auto& v : neg)
    v = -v;
  add(std::move(neg), -gamma);
}

IneqSystem GammaPolyhedron::system() const {
  IneqSystem s(vars_);
  for (const auto& r : rows_)
    s.add(to_scalars(r.u), Scalar(r.gamma));
  return s;
}

bool GammaPolyhedron::contains(const ScalarVector& x) const {
  check_len(x.size(), vars_, "point");
  for (const auto& r : rows_)
    if (dot_exp(x, r.u) > Scalar(r.gamma))
      return false;
  return true;
}

GammaPolyhedron GammaPolyhedron::meet(const GammaPolyhedron& other) const {
  check_len(other.vars_, vars_, "polyhedron");
  GammaPolyhedron out = *this;
  for (const auto& r : other.rows_)
    out.add(r.u, r.gamma);
  return out;
}

GammaPolyhedralSet::GammaPolyhedralSet(std::vector<GammaPolyhedron> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty())
    throw PreconditionError("a polyhedral set needs at least one piece");
  for (const auto& p : pieces_)
    check_len(p.vars(), pieces_.front().vars(), "polyhedral set piece");
}

bool GammaPolyhedralSet::contains(const ScalarVector& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [&](const GammaPolyhedron& p) { return p.contains(x); });
}

bool AdmissibleCone::contains(const Scalar& r, const ScalarVector& x) const {
  check_len(x.size(), vars, "point");
  if (r.sign() < 0)
    return false;
  for (const auto& row : rows)
    if ((r * Scalar(row.r_coeff) + dot_exp(x, row.u)).sign() > 0)
      return false;
  return true;
}

GammaPolyhedralSet rational_set(const TropPolynomial& f0,
                                std::span<const TropPolynomial> fs) {
  std::size_t n = f0.vars();
  for (const auto& f : fs)
    check_len(f.vars(), n, "rational set polynomial");
  std::vector<GammaPolyhedron> pieces;
  for (const auto& [mu, g0] : f0.terms()) {
    GammaPolyhedron piece(n);
    for (const auto& f : fs) {
      for (const auto& [u, g] : f.terms()) {
        Exponent d = u;
        for (std::size_t i = 0; i < n; ++i)
          d[i] -= mu[i];
        piece.add(std::move(d), g0 - g);
      }
    }
    pieces.push_back(std::move(piece));
  }
  if (pieces.empty()) {
    GammaPolyhedron piece(n);
    bool any = std::any_of(fs.begin(), fs.end(),
                           [](const TropPolynomial& f) { return !f.is_zero(); });
    if (any)
      piece.add(Exponent(n, 0), -1);
    pieces.push_back(std::move(piece));
  }
  return GammaPolyhedralSet(std::move(pieces));
}

std::vector<AdmissibleCone>
rational_set_homog(const TropPolynomial& f0,
                   std::span<const TropPolynomial> fs) {
  std::size_t n = f0.vars();
  for (const auto& f : fs)
    check_len(f.vars(), n, "rational set polynomial");
  std::vector<AdmissibleCone> cones;
  for (const auto& [mu, g0] : f0.terms()) {
    AdmissibleCone c{n, {}};
    for (const auto& f : fs) {
      for (const auto& [u, g] : f.terms()) {
        Exponent d = u;
        for (std::size_t i = 0; i < n; ++i)
          d[i] -= mu[i];
        c.rows.push_back(ConeInequality{g - g0, std::move(d)});
      }
    }
    cones.push_back(std::move(c));
  }
  bool any = std::any_of(fs.begin(), fs.end(),
                         [](const TropPolynomial& f) { return !f.is_zero(); });
  if (cones.empty() && !any)
    cones.push_back(AdmissibleCone{n, {}});
  return cones;
}

Flag::Flag(Kind kind, ScalarVector base, ScalarMatrix dirs)
    : kind_(kind), base_(std::move(base)), dirs_(std::move(dirs)) {
  for (const auto& d : dirs_)
    check_len(d.size(), base_.size(), "flag direction");
  ScalarMatrix all = dirs_;
  if (kind_ == Kind::cones)
    all.push_back(base_);
  if (rank(all) != all.size())
    throw PreconditionError("flag generators are not independent");
}

Flag flag_from_matrix(const Prime& p, Flag::Kind kind) {
  const ScalarMatrix& rows = p.rows();
  if (rows.empty())
    throw PreconditionError("a flag needs at least one matrix row");
  if (kind == Flag::Kind::cones)
    return Flag(kind, rows[0], ScalarMatrix(rows.begin() + 1, rows.end()));
  if (classify(p) != PrimeClass::cont)
    throw DomainError("flags of polyhedra require a cont prime");
  auto strip = [](const ScalarVector& r) {
    return ScalarVector(r.begin() + 1, r.end());
  };
  ScalarMatrix dirs;
  for (std::size_t i = 1; i < rows.size(); ++i)
    dirs.push_back(strip(rows[i]));
  return Flag(kind, strip(rows[0]), std::move(dirs));
}

DefiningMatrix matrix_from_flag(const Flag& f) {
  ScalarMatrix rows;
  if (f.kind() == Flag::Kind::cones) {
    rows.push_back(f.base());
    for (const auto& d : f.dirs())
      rows.push_back(d);
    return DefiningMatrix(f.ambient() - 1, std::move(rows));
  }
  ScalarVector r0{Scalar(1)};
  r0.insert(r0.end(), f.base().begin(), f.base().end());
  rows.push_back(std::move(r0));
  for (const auto& d : f.dirs()) {
    ScalarVector r{Scalar()};
    r.insert(r.end(), d.begin(), d.end());
    rows.push_back(std::move(r));
  }
  return DefiningMatrix(f.ambient(), std::move(rows));
}

bool is_neighborhood(const GammaPolyhedron& u, const Flag& f) {
  if (f.kind() != Flag::Kind::polyhedra)
    throw PreconditionError("neighborhoods are tested against polyhedral flags");
  check_len(u.vars(), f.ambient(), "polyhedron");
  for (std::size_t i = 0; i < f.length(); ++i) {
    // unknowns are the multipliers of dirs[0..i)
    IneqSystem s(i);
    for (const auto& r : u.rows()) {
      ScalarVector normal(i);
      for (std::size_t j = 0; j < i; ++j)
        normal[j] = dot_exp(f.dirs()[j], r.u);
      s.add(std::move(normal), Scalar(r.gamma) - dot_exp(f.base(), r.u));
    }
    for (std::size_t j = 0; j < i; ++j) {
      ScalarVector normal(i);
      normal[j] = -1;
      s.add(std::move(normal), Scalar(), true);
    }
    if (!fm_feasible(s))
      return false;
  }
  return true;
}

EqualityVerdict locally_equivalent(const Flag& f, const Flag& g) {
  if (f.kind() != g.kind())
    throw PreconditionError("flags of different kinds");
  check_len(g.ambient(), f.ambient(), "flag");
  return decide_equal(canonicalize(matrix_from_flag(f)),
                      canonicalize(matrix_from_flag(g)));
}

bool in_cone(const ScalarVector& x, const ScalarMatrix& generators) {
  for (const auto& g : generators)
    check_len(g.size(), x.size(), "cone generator");
  std::size_t r = rank(generators);
  if (r == 0)
    return std::all_of(x.begin(), x.end(),
                       [](const Scalar& v) { return v.is_zero(); });
  // some basis of the span drawn from the generators has x in its cone
  std::size_t k = generators.size();
  std::vector<std::size_t> pick(r);
  for (std::size_t i = 0; i < r; ++i)
    pick[i] = i;
  for (;;) {
    ScalarMatrix gram(r, ScalarVector(r));
    ScalarVector rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
      const ScalarVector& gi = generators[pick[i]];
      rhs[i] = dot(gi, x);
      for (std::size_t j = 0; j < r; ++j)
        gram[i][j] = dot(gi, generators[pick[j]]);
    }
    if (auto c = solve(std::move(gram), std::move(rhs))) {
      bool nonneg = std::all_of(c->begin(), c->end(),
                                [](const Scalar& v) { return v.sign() >= 0; });
      if (nonneg) {
        ScalarVector y(x.size());
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t m = 0; m < x.size(); ++m)
            y[m] += (*c)[i] * generators[pick[i]][m];
        if (y == x)
          return true;
      }
    }
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == k - r + i - 1)
      --i;
    if (i == 0)
      return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < r; ++j)
      pick[j] = pick[j - 1] + 1;
  }
}

Flag simplicialize(const std::vector<ScalarMatrix>& cones) {
  if (cones.empty() || cones.front().empty())
    throw PreconditionError("empty flag");
  std::size_t d = cones.front().front().size();
  for (std::size_t i = 0; i < cones.size(); ++i) {
    for (const auto& g : cones[i])
      check_len(g.size(), d, "cone generator");
    if (rank(cones[i]) != i + 1)
      throw PreconditionError("member " + std::to_string(i) +
                              " does not have dimension " +
                              std::to_string(i + 1));
  }
  ScalarVector base;
  for (const auto& g : cones[0])
    if (rank({g}) == 1) {
      base = g;
      break;
    }
  ScalarMatrix dirs;
  for (std::size_t i = 1; i < cones.size(); ++i) {
    const ScalarMatrix& prev = cones[i - 1];
    const ScalarMatrix& cur = cones[i];
    for (const auto& g : prev)
      if (!in_cone(g, cur))
        throw PreconditionError("member " + std::to_string(i - 1) +
                                " is not contained in member " +
                                std::to_string(i));
    // a functional vanishing on the previous member and negative on the
    // rest of the current one certifies the face relation
    IneqSystem face(d);
    std::optional<ScalarVector> chosen;
    for (const auto& g : prev)
      face.add_equality(g, Scalar());
    for (const auto& g : cur) {
      if (in_cone(g, prev)) {
        face.add_equality(g, Scalar());
      } else {
        face.add(g, Scalar(), true);
        if (!chosen)
          chosen = g;
      }
    }
    if (!chosen || !fm_feasible(face))
      throw PreconditionError("member " + std::to_string(i - 1) +
                              " is not a face of member " + std::to_string(i));
    dirs.push_back(*chosen);
  }
  return Flag(Flag::Kind::cones, std::move(base), std::move(dirs));
}

} // namespace valflag
