#pragma once

#include "moyal/ordering.hpp"

namespace moyal {

/// Bracket expansion in the monomial basis: (q-power, p-power) -> weight.
using BracketExpansion = std::map<std::pair<std::uint32_t, std::uint32_t>, Coefficient>;

/// a(n,m,k,l;r,j) = n!m!k!l! / ((n+r-j)!(m-r)!(k-r)!(l+r-j)!); zero whenever
/// a factorial argument is negative, which makes the double-sum bounds of
/// the closed form automatic.
GaussianRational a_coeff(long n, long m, long k, long l, long r, long j);

/// Ordering factor f_srj = (s-)^r (-s+)^(j-r) -+ (s-)^(j-r) (-s+)^r;
/// minus for the bracket, plus for the anti-bracket.
Coefficient f_factor(const OrderParameter& s, std::uint32_t r, std::uint32_t j, bool anti);

/// Closed-form s-Moyal bracket (or anti-bracket) of q^n p^m and q^k p^l:
///   sum_j (i^j/j!) [sum_r C(j,r) f_srj a(n,m,k,l;r,j)] q^(n+k-j) p^(m+l-j).
BracketExpansion bracket_closed_form(std::uint32_t n, std::uint32_t m, std::uint32_t k,
                                     std::uint32_t l, const OrderParameter& s, bool anti = false);

Symbol expansion_to_symbol(const BracketExpansion& e, const RegistryPtr& reg);
BracketExpansion symbol_to_expansion(const Symbol& f);

/// The first-order part of the bracket: coefficient of (i hbar)^1, equal to
/// (mk - nl) q^(n+k-1) p^(m+l-1), the Poisson bracket of the generators.
Symbol poisson_limit(std::uint32_t n, std::uint32_t m, std::uint32_t k, std::uint32_t l,
                     const RegistryPtr& reg);

/// Product form of the standard-ordered tower element:
///   H_n = prod_{j=1..n} (x + c(2j-1)),  x = (qh ph + ph qh)/2, c = i hbar/2;
/// equals the normal form of qh^n ph^n.
CanonicalElement h_tower(std::uint32_t n, const SignaturePtr& sig);

enum class VirasoroSide { QSide, PSide };

/// Moyal bracket of two Virasoro generators w_n = q^(n+1) p (q-side) or
/// w_n = q p^(n+1) (p-side); equals i hbar (k-n) w_(n+k) on the q-side and
/// i hbar (n-k) w_(n+k) on the p-side, independent of s.
BracketExpansion virasoro_bracket(VirasoroSide side, std::uint32_t n, std::uint32_t k,
                                  const OrderParameter& s);

enum class KacMoodyKind { QnPl, QkHn, PkHn };

KacMoodyKind kac_moody_kind_from_name(const std::string& name);

/// The three cross brackets of the abelian towers:
///   {q^n, p^l}, {q^k, H^n}, {p^k, H^n} with H^n = q^n p^n, each a single
/// j-sum with weights i^j b(j,..) [(-s+)^j - (s-)^j] (sign mirrored for the
/// p-tower).
BracketExpansion kac_moody_bracket(KacMoodyKind kind, std::uint32_t first, std::uint32_t second,
                                   const OrderParameter& s);

}  // namespace moyal
