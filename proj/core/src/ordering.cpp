#include "moyal/ordering.hpp"

namespace moyal {

GaussianRational b_coeff(std::uint32_t k, std::uint32_t n, std::uint32_t m) {
    if (k > std::min(n, m)) throw Error("b_coeff: k out of range");
    return GaussianRational(Rational(binomial(n, k) * binomial(m, k) * factorial(k)));
}

CanonicalElement ordered_pair_product(const CanonicalElement& x, const CanonicalElement& y,
                                      std::uint32_t n, std::uint32_t m, const OrderParameter& r,
                                      std::uint32_t degree_cap) {
    x.require_same_signature(y);
    const auto& reg = r.registry();
    const Coefficient one = Coefficient::one(reg);
    const Coefficient plus = one + r.coeff();
    const Coefficient minus = one - r.coeff();

    const CanonicalElement ym = y.pow(m, degree_cap);
    CanonicalElement acc = CanonicalElement::zero(x.signature());
    for (std::uint32_t j = 0; j <= n; ++j) {
        const Coefficient weight =
            (plus.pow(j) * minus.pow(n - j)).scaled(GaussianRational(Rational(binomial(n, j))));
        CanonicalElement term = multiply(x.pow(j, degree_cap), ym, degree_cap);
        term = multiply(term, x.pow(n - j, degree_cap), degree_cap);
        acc += term.scaled(weight);
    }
    return acc.scaled(GaussianRational(pow_rational(Rational(1, 2), n)));
}

CanonicalElement ordered_pair_product_alt(const CanonicalElement& x, const CanonicalElement& y,
                                          std::uint32_t n, std::uint32_t m, const OrderParameter& r,
                                          std::uint32_t degree_cap) {
    x.require_same_signature(y);
    const auto& reg = r.registry();
    const Coefficient one = Coefficient::one(reg);
    const Coefficient plus = one + r.coeff();
    const Coefficient minus = one - r.coeff();

    const CanonicalElement xn = x.pow(n, degree_cap);
    CanonicalElement acc = CanonicalElement::zero(x.signature());
    for (std::uint32_t k = 0; k <= m; ++k) {
        const Coefficient weight =
            (minus.pow(k) * plus.pow(m - k)).scaled(GaussianRational(Rational(binomial(m, k))));
        CanonicalElement term = multiply(y.pow(k, degree_cap), xn, degree_cap);
        term = multiply(term, y.pow(m - k, degree_cap), degree_cap);
        acc += term.scaled(weight);
    }
    return acc.scaled(GaussianRational(pow_rational(Rational(1, 2), m)));
}

CanonicalElement ordered_product(std::uint32_t n, std::uint32_t m, const OrderParameter& s,
                                 const SignaturePtr& sig) {
    const CanonicalElement qh = CanonicalElement::generator(sig, "qh");
    const CanonicalElement ph = CanonicalElement::generator(sig, "ph");
    return ordered_pair_product(qh, ph, n, m, s);
}

std::map<std::pair<std::uint32_t, std::uint32_t>, Coefficient> convert_order(
    std::uint32_t n, std::uint32_t m, const OrderParameter& s, const OrderParameter& s_prime) {
    const auto& reg = s.registry();
    const Coefficient ihbar = Coefficient::parameter(reg, "hbar").scaled(GaussianRational::i());
    const Coefficient step = ihbar * (s.coeff() - s_prime.coeff());

    std::map<std::pair<std::uint32_t, std::uint32_t>, Coefficient> expansion;
    for (std::uint32_t k = 0; k <= std::min(n, m); ++k) {
        Coefficient c = step.pow(k).scaled(
            b_coeff(k, n, m) * GaussianRational(pow_rational(Rational(1, 2), k)));
        if (!c.is_zero()) expansion.emplace(std::make_pair(n - k, m - k), std::move(c));
    }
    return expansion;
}

CanonicalElement quantize(const Symbol& f, const OrderParameter& s, const SignaturePtr& sig) {
    if (f.vars() != PhaseSpaceVars::QP) throw Error("quantize expects a (q,p) symbol");
    CanonicalElement result = CanonicalElement::zero(sig);
    for (const auto& [e, c] : f.terms())
        result += ordered_product(e[0], e[1], s, sig).scaled(c);
    return result;
}

Symbol dequantize(const CanonicalElement& a, const OrderParameter& s) {
    const auto& reg = s.registry();
    const OrderParameter standard = OrderParameter::numeric(reg, GaussianRational(1));
    Symbol result = Symbol::zero(reg, PhaseSpaceVars::QP);
    for (const auto& [e, c] : a.terms()) {
        // Normal form q^n p^m is the standard-ordered basis element t_nm(1).
        for (const auto& [nm, w] : convert_order(e[0], e[1], standard, s))
            result.add_term({nm.first, nm.second}, c * w);
    }
    return result;
}

CanonicalElement hermitize(std::uint32_t n, std::uint32_t m, const OrderParameter& s,
                           const GaussianRational& alpha, const SignaturePtr& sig) {
    if (!s.is_numeric()) throw Error("hermitize requires a numeric order parameter");
    const OrderParameter mirror =
        OrderParameter::numeric(s.registry(), -s.numeric_value().conj());
    return ordered_product(n, m, s, sig).scaled(Coefficient::constant(s.registry(), alpha)) +
           ordered_product(n, m, mirror, sig)
               .scaled(Coefficient::constant(s.registry(), alpha.conj()));
}

}  // namespace moyal
