#pragma once

#include "moyal/symbol.hpp"
#include "moyal/weyl.hpp"

namespace moyal {

/// b(k,n,m) = C(n,k) C(m,k) k!, the contraction count of the order
/// conversion formula. Throws unless 0 <= k <= min(n,m).
GaussianRational b_coeff(std::uint32_t k, std::uint32_t n, std::uint32_t m);

/// The r-ordered product {X^n Y^m}_r of two elements of any canonical
/// algebra, the binomial average
///   2^-n sum_j C(n,j) (1+r)^j (1-r)^(n-j) X^j Y^m X^(n-j).
CanonicalElement ordered_pair_product(const CanonicalElement& x, const CanonicalElement& y,
                                      std::uint32_t n, std::uint32_t m, const OrderParameter& r,
                                      std::uint32_t degree_cap = CanonicalElement::kDefaultDegreeCap);

/// The equivalent split over Y,
///   2^-m sum_k C(m,k) (1-r)^k (1+r)^(m-k) Y^k X^n Y^(m-k);
/// must agree with ordered_pair_product (self-test in the suites).
CanonicalElement ordered_pair_product_alt(const CanonicalElement& x, const CanonicalElement& y,
                                          std::uint32_t n, std::uint32_t m, const OrderParameter& r,
                                          std::uint32_t degree_cap = CanonicalElement::kDefaultDegreeCap);

/// The s-ordered basis element t_nm(s) of the Weyl algebra (s=1 standard,
/// 0 Weyl-symmetric, -1 antistandard).
CanonicalElement ordered_product(std::uint32_t n, std::uint32_t m, const OrderParameter& s,
                                 const SignaturePtr& sig);

/// Expansion of t_nm(s) in the t(s') basis:
///   t_nm(s) = sum_k 2^-k b(k,n,m) [i hbar (s - s')]^k t_(n-k)(m-k)(s').
/// Keys are the target (n-k, m-k) indices.
std::map<std::pair<std::uint32_t, std::uint32_t>, Coefficient> convert_order(
    std::uint32_t n, std::uint32_t m, const OrderParameter& s, const OrderParameter& s_prime);

/// Linear extension of q^n p^m -> t_nm(s).
CanonicalElement quantize(const Symbol& f, const OrderParameter& s, const SignaturePtr& sig);

/// Exact inverse of quantize at the same s. Reads normal form as the s=1
/// basis and converts termwise, deliberately a different code path from
/// quantize.
Symbol dequantize(const CanonicalElement& a, const OrderParameter& s);

/// alpha t_nm(s) + conj(alpha) t_nm(-conj(s)); self-adjoint by construction.
/// Requires numeric s.
CanonicalElement hermitize(std::uint32_t n, std::uint32_t m, const OrderParameter& s,
                           const GaussianRational& alpha, const SignaturePtr& sig);

}  // namespace moyal
