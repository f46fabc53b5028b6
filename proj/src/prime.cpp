#include "valflag/prime.hpp"

#include <stdexcept>

#include "valflag/error.hpp"

namespace valflag {

namespace {

constexpr std::size_t kSearchCap = 1'000'000;

using Kind = KernelSubgroup::Kind;

KernelSubgroup full_product(std::size_t n) {
  KernelSubgroup h;
  h.kind = Kind::product;
  h.vars = n;
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    h.basis.push_back(std::move(e));
  }
  return h;
}

Scalar dot_int(std::span<const Scalar> xi, const IntVector& m) {
  Scalar s;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0 && !xi[i].is_zero())
      s += xi[i] * Scalar(Rational(m[i]));
  return s;
}

std::span<const Scalar> xi_part(const ScalarVector& row) {
  return std::span<const Scalar>(row).subspan(1);
}

/// Values of a row on the lattice generators of h.
ScalarVector covector(const ScalarVector& row, const KernelSubgroup& h) {
  ScalarVector g;
  g.reserve(h.rank());
  for (std::size_t j = 0; j < h.rank(); ++j) {
    Scalar v = dot_int(xi_part(row), h.basis[j]);
    if (h.kind == Kind::graph && !row[0].is_zero())
      v += row[0] * Scalar(h.ell[j]);
    g.push_back(std::move(v));
  }
  return g;
}

bool all_zero(const ScalarVector& g) {
  for (const auto& s : g)
    if (!s.is_zero())
      return false;
  return true;
}

bool vanishes(const ScalarVector& row, const KernelSubgroup& h) {
  if (h.kind == Kind::product && !row[0].is_zero())
    return false;
  return all_zero(covector(row, h));
}

/// Replaces the lattice by {z * basis : z in rows of zs} and ell by
/// z * ell_values, then Hermite-reduces the basis.
KernelSubgroup restrict_to(const KernelSubgroup& h, const IntMatrix& zs,
                           Kind kind, const std::vector<Rational>& ell_values) {
  std::size_t n = h.vars;
  std::size_t r = h.rank();
  IntMatrix aug;
  for (const auto& z : zs) {
    IntVector row = combine(z, h.basis, n);
    row.insert(row.end(), z.begin(), z.end());
    aug.push_back(std::move(row));
  }
  aug = hermite_rows(std::move(aug), n);
  KernelSubgroup out;
  out.kind = kind;
  out.vars = n;
  for (auto& row : aug) {
    IntVector m(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    if (kind == Kind::graph) {
      Rational v = 0;
      for (std::size_t j = 0; j < r; ++j)
        v += Rational(row[n + j]) * ell_values[j];
      out.ell.push_back(v);
    }
    out.basis.push_back(std::move(m));
  }
  return out;
}

/// Threshold t(m) = -(xi/c) m on the basis of a product-kind subgroup.
ScalarVector thresholds(const ScalarVector& row, const KernelSubgroup& h) {
  Scalar inv = -row[0].inverse();
  ScalarVector t;
  for (const auto& b : h.basis)
    t.push_back(dot_int(xi_part(row), b) * inv);
  return t;
}

KernelSubgroup threshold_step(const KernelSubgroup& h, const ScalarVector& t) {
  IntMatrix zs = integer_kernel(rational_part_basis(t), h.rank());
  std::vector<Rational> ell;
  for (const auto& s : t)
    ell.push_back(s.rational_part());
  return restrict_to(h, zs, Kind::graph, ell);
}

KernelSubgroup kernel_step(const KernelSubgroup& h, const ScalarVector& g) {
  IntMatrix zs = integer_kernel(coefficient_rows(g), h.rank());
  return restrict_to(h, zs, h.kind, h.ell);
}

/// The element of h with lattice coordinates z; gamma only for product kind.
ExponentVector element(const KernelSubgroup& h, const IntVector& z,
                       const Rational& gamma = 0) {
  ExponentVector w;
  w.u = to_exponent(combine(z, h.basis, h.vars));
  if (h.kind == Kind::graph) {
    Rational v = 0;
    for (std::size_t j = 0; j < z.size(); ++j)
      v += Rational(z[j]) * h.ell[j];
    w.gamma = v;
  } else {
    w.gamma = gamma;
  }
  return w;
}

IntVector unit(std::size_t r, std::size_t j, int s) {
  IntVector z(r);
  z[j] = s;
  return z;
}

Scalar dot_z(const ScalarVector& g, const IntVector& z) {
  return dot_int(g, z);
}

/// Calls visit on integer vectors of growing max-norm until it returns true.
/// The 2r unit vectors come first.
template <class Visit>
void search_lattice(std::size_t r, Visit visit) {
  std::size_t tried = 0;
  for (std::size_t j = 0; j < r; ++j)
    for (int s : {1, -1})
      if (++tried, visit(unit(r, j, s)))
        return;
  for (long k = 1;; ++k) {
    IntVector z(r, Integer(-k));
    for (;;) {
      bool on_shell = false;
      for (const auto& v : z)
        on_shell = on_shell || abs(v) == k;
      if (on_shell) {
        if (++tried > kSearchCap)
          throw SearchExhausted("no distinguishing lattice vector among " +
                                std::to_string(kSearchCap) + " candidates");
        if (visit(z))
          return;
      }
      std::size_t i = 0;
      while (i < r && z[i] == k) {
        z[i] = -k;
        ++i;
      }
      if (i == r)
        break;
      z[i] += 1;
    }
  }
}

/// Positive lambda with g2 = lambda g1, if any.
bool positively_proportional(const ScalarVector& g1, const ScalarVector& g2) {
  std::size_t j = 0;
  while (j < g1.size() && g1[j].is_zero())
    ++j;
  if (j == g1.size())
    return all_zero(g2);
  Scalar lambda = g2[j] / g1[j];
  if (lambda.sign() <= 0)
    return false;
  for (std::size_t i = 0; i < g1.size(); ++i)
    if (g2[i] != lambda * g1[i])
      return false;
  return true;
}

} // namespace

DefiningMatrix::DefiningMatrix(std::size_t vars, ScalarMatrix rows)
    : vars_(vars), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != vars_ + 1)
      throw DimensionError("matrix row has " + std::to_string(r.size()) +
                           " entries, expected " + std::to_string(vars_ + 1));
}

Prime canonicalize(const DefiningMatrix& c) {
  ScalarVector first;
  for (const auto& r : c.rows())
    first.push_back(r[0]);
  if (sign_lex(first) < 0)
    throw InvalidMatrix("first column is lexicographically negative");
  std::size_t width = c.vars() + 1;
  ScalarMatrix kept;
  std::vector<std::size_t> pivots;
  for (ScalarVector row : c.rows()) {
    for (std::size_t k = 0; k < kept.size(); ++k) {
      const Scalar& f = row[pivots[k]];
      if (f.is_zero())
        continue;
      // kept pivots are +-1
      Scalar factor = f * kept[k][pivots[k]];
      for (std::size_t j = 0; j < width; ++j)
        if (!kept[k][j].is_zero())
          row[j] -= factor * kept[k][j];
    }
    std::size_t p = 0;
    while (p < width && row[p].is_zero())
      ++p;
    if (p == width)
      continue;
    Scalar scale = row[p].abs().inverse();
    for (auto& v : row)
      v *= scale;
    kept.push_back(std::move(row));
    pivots.push_back(p);
  }
  return Prime(c.vars(), std::move(kept));
}

std::string to_string(Comparison c) {
  switch (c) {
  case Comparison::less: return "less";
  case Comparison::equal: return "equal";
  case Comparison::greater: return "greater";
  }
  return "";
}

ScalarVector image(const ScalarMatrix& rows, const ExponentVector& w) {
  ScalarVector out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != w.u.size() + 1)
      throw DimensionError("exponent vector length does not match matrix");
    Scalar v;
    if (!row[0].is_zero() && w.gamma != 0)
      v = row[0] * Scalar(w.gamma);
    for (std::size_t i = 0; i < w.u.size(); ++i)
      if (w.u[i] != 0 && !row[i + 1].is_zero())
        v += row[i + 1] * Scalar(static_cast<long>(w.u[i]));
    out.push_back(std::move(v));
  }
  return out;
}

int sign_lex(std::span<const Scalar> v) {
  for (const auto& s : v)
    if (!s.is_zero())
      return s.sign();
  return 0;
}

LexValue phi(const Prime& p, const TropPolynomial& f) {
  if (f.vars() != p.vars())
    throw DimensionError("polynomial and prime have different variable counts");
  LexValue best;
  for (const auto& t : f.term_list()) {
    ScalarVector v = image(p.rows(), t);
    if (!best || *best < v)
      best = std::move(v);
  }
  return best;
}

Comparison compare(const Prime& p, const TropPolynomial& f,
                   const TropPolynomial& g) {
  LexValue a = phi(p, f);
  LexValue b = phi(p, g);
  if (a < b)
    return Comparison::less;
  if (b < a)
    return Comparison::greater;
  return Comparison::equal;
}

EqualityVerdict EqualityVerdict::distinguished(ExponentVector w,
                                               const ScalarMatrix& a,
                                               const ScalarMatrix& b) {
  if (sign_lex(image(a, w)) == sign_lex(image(b, w)))
    throw std::logic_error("witness does not distinguish the matrices");
  EqualityVerdict v;
  v.outcome_ = Outcome::distinguished;
  v.witness_ = std::move(w);
  return v;
}

EqualityVerdict decide_equal(const Prime& pa, const Prime& pb) {
  if (pa.vars() != pb.vars())
    throw DimensionError("primes have different variable counts");
  const ScalarMatrix& a = pa.rows();
  const ScalarMatrix& b = pb.rows();
  auto differs = [&](const ExponentVector& w) {
    return sign_lex(image(a, w)) != sign_lex(image(b, w));
  };
  auto verdict = [&](ExponentVector w) {
    return EqualityVerdict::distinguished(std::move(w), a, b);
  };

  KernelSubgroup h = full_product(pa.vars());
  std::size_t ia = 0;
  std::size_t ib = 0;
  for (;;) {
    while (ia < a.size() && vanishes(a[ia], h))
      ++ia;
    while (ib < b.size() && vanishes(b[ib], h))
      ++ib;
    bool a_done = ia == a.size();
    bool b_done = ib == b.size();
    if (a_done && b_done)
      return EqualityVerdict::equal();
    std::size_t r = h.rank();

    if (a_done || b_done) {
      // every element of h where the remaining row is nonzero distinguishes
      if (h.kind == Kind::product) {
        ExponentVector w{1, Exponent(h.vars, 0)};
        if (differs(w))
          return verdict(w);
      }
      for (std::size_t j = 0; j < r; ++j)
        for (int s : {1, -1})
          if (auto w = element(h, unit(r, j, s)); differs(w))
            return verdict(w);
      throw std::logic_error("decide_equal: no witness for a lone row");
    }

    const ScalarVector& fa = a[ia];
    const ScalarVector& fb = b[ib];
    if (h.kind == Kind::product) {
      int sa = fa[0].sign();
      int sb = fb[0].sign();
      if (sa > 0 && sb > 0) {
        ScalarVector ta = thresholds(fa, h);
        ScalarVector tb = thresholds(fb, h);
        for (std::size_t j = 0; j < r; ++j) {
          if (ta[j] == tb[j])
            continue;
          const Scalar& lo = std::min(ta[j], tb[j]);
          const Scalar& hi = std::max(ta[j], tb[j]);
          return verdict(
              element(h, unit(r, j, 1), simplest_rational_between(lo, hi)));
        }
        h = threshold_step(h, ta);
        ++ia;
        ++ib;
        continue;
      }
      if (sa > 0 || sb > 0) {
        ExponentVector w{1, Exponent(h.vars, 0)};
        if (differs(w))
          return verdict(w);
        // push the blind row positive and the other row negative
        const ScalarVector& live = sa > 0 ? fa : fb;
        const ScalarVector& blind = sa > 0 ? fb : fa;
        for (std::size_t j = 0; j < r; ++j) {
          Scalar v = dot_int(xi_part(blind), h.basis[j]);
          if (v.is_zero())
            continue;
          IntVector z = unit(r, j, v.sign());
          IntVector m = combine(z, h.basis, h.vars);
          Scalar thr = -dot_int(xi_part(live), m) / live[0];
          ExponentVector cand = element(h, z, Rational(thr.floor() - 1));
          if (differs(cand))
            return verdict(cand);
        }
        throw std::logic_error("decide_equal: no witness for a blind row");
      }
    }

    ScalarVector ga = covector(fa, h);
    ScalarVector gb = covector(fb, h);
    if (positively_proportional(ga, gb)) {
      h = kernel_step(h, ga);
      ++ia;
      ++ib;
      continue;
    }
    std::optional<ExponentVector> found;
    search_lattice(r, [&](const IntVector& z) {
      if (dot_z(ga, z).sign() == dot_z(gb, z).sign())
        return false;
      ExponentVector w = element(h, z);
      if (!differs(w))
        return false;
      found = std::move(w);
      return true;
    });
    return verdict(*found);
  }
}

std::string to_string(PrimeClass c) {
  switch (c) {
  case PrimeClass::cont: return "cont";
  case PrimeClass::coefficient_blind: return "coefficient_blind";
  case PrimeClass::non_continuous: return "non_continuous";
  }
  return "";
}

PrimeClass classify(const Prime& p) {
  if (!p.rows().empty() && p.rows()[0][0].sign() > 0)
    return PrimeClass::cont;
  for (const auto& row : p.rows())
    if (!row[0].is_zero())
      return PrimeClass::non_continuous;
  return PrimeClass::coefficient_blind;
}

KernelSubgroup final_kernel(const Prime& p) {
  KernelSubgroup h = full_product(p.vars());
  for (const auto& row : p.rows()) {
    if (vanishes(row, h))
      continue;
    if (h.kind == Kind::product && row[0].sign() > 0)
      h = threshold_step(h, thresholds(row, h));
    else
      h = kernel_step(h, covector(row, h));
  }
  return h;
}

std::size_t height(const Prime& p) {
  if (classify(p) != PrimeClass::cont)
    throw DomainError("height is only defined here for cont primes");
  return final_kernel(p).rank();
}

std::size_t min_filter_dim(const Prime& p) {
  if (classify(p) != PrimeClass::cont)
    throw DomainError("minimum filter dimension requires a cont prime");
  return p.vars() - final_kernel(p).rank();
}

bool is_order(const Prime& p) { return final_kernel(p).is_trivial(); }

Exponent to_exponent(const IntVector& v) {
  Exponent e;
  e.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p())
      throw CapacityError("exponent does not fit in 64 bits");
    e.push_back(x.get_si());
  }
  return e;
}

} // namespace valflag
