#include "valflag/scalar.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>

#include "valflag/error.hpp"

namespace valflag {

namespace {

std::atomic<std::size_t> g_radical_cap{8};

Integer to_integer(std::uint64_t v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > static_cast<unsigned __int128>(UINT64_MAX))
    throw CapacityError("radicand product exceeds 64 bits");
  return static_cast<std::uint64_t>(p);
}

std::uint64_t isqrt(std::uint64_t n) {
  Integer r = sqrt(to_integer(n));
  return static_cast<std::uint64_t>(r.get_ui());
}

// Pairwise-coprime refinement of a set of integers > 1. Every input is a
// product of basis elements; no factoring needed.
std::vector<std::uint64_t> coprime_basis(std::vector<std::uint64_t> xs) {
  std::erase(xs, std::uint64_t{1});
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (std::size_t i = 0; i < xs.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < xs.size() && !changed; ++j) {
        std::uint64_t g = std::gcd(xs[i], xs[j]);
        if (g > 1) {
          xs[i] /= g;
          xs[j] /= g;
          xs.push_back(g);
          std::erase(xs, std::uint64_t{1});
          changed = true;
        }
      }
    }
  }
  return xs;
}

// The field automorphism that negates sqrt(b) for a coprime-basis element b.
Scalar conjugate(const Scalar& a, std::uint64_t b) {
  Scalar::TermMap out = a.terms();
  for (auto& [n, q] : out)
    if (n % b == 0)
      q = -q;
  return Scalar::from_terms(std::move(out));
}

} // namespace

std::size_t radical_cap() noexcept { return g_radical_cap.load(); }
void set_radical_cap(std::size_t cap) noexcept { g_radical_cap.store(cap); }

Scalar::Scalar(const Rational& value) {
  if (value != 0)
    terms_.emplace(1, value);
}

Scalar Scalar::sqrt(Radicand radicand, const Rational& q) {
  if (radicand == 0 || q == 0)
    return {};
  std::uint64_t rest = radicand;
  std::uint64_t square = 1;
  std::uint64_t core = 1;
  for (std::uint64_t d = 2;
       static_cast<unsigned __int128>(d) * d * d <= rest; ++d) {
    int e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i)
      square *= d;
    if (e % 2)
      core *= d;
  }
  // rest now has at most two prime factors
  if (rest > 1) {
    std::uint64_t r = isqrt(rest);
    if (r * r == rest)
      square *= r;
    else
      core = checked_mul(core, rest);
  }
  TermMap terms;
  terms.emplace(core, q * Rational(to_integer(square)));
  return from_terms(std::move(terms));
}

Scalar Scalar::from_terms(TermMap terms) {
  Scalar s;
  for (auto& [n, q] : terms) {
    if (q != 0) {
      q.canonicalize();
      s.terms_.emplace(n, std::move(q));
    }
  }
  s.check_capacity();
  return s;
}

void Scalar::check_capacity() const {
  if (terms_.size() <= 1)
    return;
  std::vector<std::uint64_t> keys;
  keys.reserve(terms_.size());
  for (const auto& [n, q] : terms_)
    if (n != 1)
      keys.push_back(n);
  if (keys.size() <= 1)
    return;
  std::size_t cap = radical_cap();
  if (coprime_basis(std::move(keys)).size() > cap)
    throw CapacityError("more than " + std::to_string(cap) +
                        " independent radicals");
}

bool Scalar::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

Rational Scalar::coefficient(Radicand n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Rational, Rational> Scalar::enclose(unsigned bits) const {
  if (is_rational()) {
    Rational v = rational_part();
    return {v, v};
  }
  Integer denom = 1;
  for (const auto& [n, q] : terms_)
    mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den_mpz_t());
  Integer lo = 0;
  Integer hi = 0;
  for (const auto& [n, q] : terms_) {
    Integer a = q.get_num() * (denom / q.get_den());
    if (n == 1) {
      Integer v = a << bits;
      lo += v;
      hi += v;
      continue;
    }
    // s <= sqrt(n) * 2^bits < s + 1, strict since n is not a square
    Integer s = ::sqrt(Integer(to_integer(n) << (2 * bits)));
    if (a > 0) {
      lo += a * s;
      hi += a * (s + 1);
    } else {
      lo += a * (s + 1);
      hi += a * s;
    }
  }
  Integer scale = denom << bits;
  Rational rlo(lo, scale);
  Rational rhi(hi, scale);
  rlo.canonicalize();
  rhi.canonicalize();
  return {rlo, rhi};
}

int Scalar::sign() const {
  if (terms_.empty())
    return 0;
  if (terms_.size() == 1)
    return sgn(terms_.begin()->second);
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    if (lo > 0)
      return 1;
    if (hi < 0)
      return -1;
  }
}

Integer Scalar::floor() const {
  if (is_rational()) {
    Rational v = rational_part();
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return f;
  }
  // irrational values are never integers, so the enclosure eventually
  // stays inside one unit interval
  for (unsigned bits = 64;; bits *= 2) {
    auto [lo, hi] = enclose(bits);
    Integer flo;
    Integer fhi;
    mpz_fdiv_q(flo.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    mpz_fdiv_q(fhi.get_mpz_t(), hi.get_num_mpz_t(), hi.get_den_mpz_t());
    if (flo == fhi)
      return flo;
  }
}

Integer Scalar::ceil() const { return -(-*this).floor(); }

double Scalar::to_double() const {
  auto [lo, hi] = enclose(64);
  Rational mid = (lo + hi) / 2;
  return mid.get_d();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& [n, q] : s.terms_)
    q = -q;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  for (const auto& [n, q] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(n, q);
    if (!inserted) {
      it->second += q;
      if (it->second == 0)
        terms_.erase(it);
    }
  }
  check_capacity();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return {};
  Scalar::TermMap out;
  for (const auto& [m, a] : lhs.terms_) {
    for (const auto& [n, b] : rhs.terms_) {
      std::uint64_t g = std::gcd(m, n);
      std::uint64_t key = checked_mul(m / g, n / g);
      Rational c = a * b * Rational(to_integer(g));
      auto [it, inserted] = out.emplace(key, c);
      if (!inserted)
        it->second += c;
    }
  }
  return Scalar::from_terms(std::move(out));
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

Scalar Scalar::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero scalar");
  Scalar num(1);
  Scalar den = *this;
  while (!den.is_rational()) {
    std::vector<std::uint64_t> keys;
    for (const auto& [n, q] : den.terms_)
      if (n != 1)
        keys.push_back(n);
    std::uint64_t b = coprime_basis(std::move(keys)).front();
    Scalar conj = conjugate(den, b);
    num *= conj;
    den *= conj;
  }
  Rational r = den.rational_part();
  return num * Scalar(Rational(1) / r);
}

Scalar operator/(const Scalar& lhs, const Scalar& rhs) {
  if (rhs.is_zero())
    throw DivisionByZero("division by zero scalar");
  if (rhs.is_rational())
    return lhs * Scalar(Rational(1) / rhs.rational_part());
  return lhs * rhs.inverse();
}

Scalar& Scalar::operator/=(const Scalar& rhs) { return *this = *this / rhs; }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int s = (a - b).sign();
  if (s < 0)
    return std::strong_ordering::less;
  if (s > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::vector<Scalar::Radicand> irrational_radicands(std::span<const Scalar> v) {
  std::vector<Scalar::Radicand> keys;
  for (const auto& s : v)
    for (const auto& [n, q] : s.terms())
      if (n != 1)
        keys.push_back(n);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

std::vector<std::vector<Rational>>
rational_part_basis(std::span<const Scalar> v) {
  std::vector<std::vector<Rational>> rows;
  for (auto n : irrational_radicands(v)) {
    std::vector<Rational> row;
    row.reserve(v.size());
    for (const auto& s : v)
      row.push_back(s.coefficient(n));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<Rational>> coefficient_rows(std::span<const Scalar> v) {
  auto rows = rational_part_basis(v);
  std::vector<Rational> ones;
  ones.reserve(v.size());
  bool any = false;
  for (const auto& s : v) {
    ones.push_back(s.rational_part());
    any = any || ones.back() != 0;
  }
  if (any)
    rows.insert(rows.begin(), std::move(ones));
  return rows;
}

Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (lo < 0 && hi > 0)
    return 0;
  if (hi <= 0)
    return -simplest_rational_between(Rational(-hi), Rational(-lo));
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rational(fl + 1) < hi)
    return Rational(fl + 1);
  Rational a = lo - Rational(fl);
  Rational b = hi - Rational(fl);
  if (a == 0) {
    Rational inv_b = 1 / b;
    Integer y;
    mpz_fdiv_q(y.get_mpz_t(), inv_b.get_num_mpz_t(), inv_b.get_den_mpz_t());
    Rational r = Rational(fl) + Rational(1) / Rational(y + 1);
    r.canonicalize();
    return r;
  }
  Rational r = Rational(fl) +
               1 / simplest_rational_between(Rational(1 / b), Rational(1 / a));
  r.canonicalize();
  return r;
}

Rational simplest_rational_between(const Scalar& lo, const Scalar& hi) {
  if (!(lo < hi))
    throw PreconditionError("empty interval in simplest_rational_between");
  for (unsigned bits = 64;; bits *= 2) {
    Rational upper_of_lo = lo.enclose(bits).second;
    Rational lower_of_hi = hi.enclose(bits).first;
    if (upper_of_lo < lower_of_hi)
      return simplest_rational_between(upper_of_lo, lower_of_hi);
  }
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size())
    throw DimensionError("dot product of vectors with different lengths");
  Scalar s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero())
      s += a[i] * b[i];
  return s;
}

} // namespace valflag
