#pragma once

// The prime filter of a cont prime: the Gamma-rational polyhedral sets that
// are neighborhoods of its flag of polyhedra.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "valflag/polyhedra.hpp"
#include "valflag/prime.hpp"

namespace valflag {

struct MembershipAnswer {
  bool member = false;
  std::optional<std::size_t> piece_index; // first piece that is a member
};

MembershipAnswer filter_member(const Prime& p, const GammaPolyhedralSet& u);

/// R(1, a) is in the filter, decided from the lex order alone.
bool halfspace_member(const Prime& p, const Term& a);

/// Integers m > 0, m_l >= 0 and b >= 0 with
///   b + m * gamma = sum m_l gamma_l  and  m * u = sum m_l u_l,
/// i.e. the product identity t^b (a)^m = prod (a_l)^{m_l}.
class FarkasCertificate {
public:
  /// Throws std::logic_error when the identity fails.
  FarkasCertificate(Integer m, std::vector<Integer> m_l, Rational b,
                    std::span<const Term> a_l, const Term& a);

  const Integer& m() const noexcept { return m_; }
  const std::vector<Integer>& m_l() const noexcept { return m_l_; }
  const Rational& b() const noexcept { return b_; }

private:
  Integer m_;
  std::vector<Integer> m_l_;
  Rational b_;
};

/// t^b * a^m and prod a_l^{m_l} as terms, for checking a certificate.
std::pair<Term, Term> certificate_sides(const FarkasCertificate& c,
                                        std::span<const Term> a_l,
                                        const Term& a);

/// A point of the intersection of the R(1, a_l) outside R(1, a).
struct CounterexamplePoint {
  ScalarVector point;
};

using FarkasResult = std::variant<FarkasCertificate, CounterexamplePoint>;

/// Decides whether the intersection of R(1, a_l) lies in R(1, a). The
/// intersection must be nonempty.
FarkasResult farkas_certify(std::span<const Term> a_l, const Term& a);

/// A member polyhedron of the filter of minimum dimension.
GammaPolyhedron mindim_witness(const Prime& p);

using HalfspaceOracle = std::function<bool(const Term&)>;

/// Compares s and t through oracle(s / t) (s <= t) and oracle(t / s).
std::vector<Comparison>
reconstruct_preorder(const HalfspaceOracle& oracle,
                     std::span<const std::pair<Term, Term>> pairs);

} // namespace valflag
