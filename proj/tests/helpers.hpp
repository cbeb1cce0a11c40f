#pragma once

#include <random>

#include "moyal/diffop.hpp"
#include "moyal/ordering.hpp"

namespace testutil {

using namespace moyal;

inline const RegistryPtr& reg() {
    static const RegistryPtr r = ParameterRegistry::standard();
    return r;
}

inline const SignaturePtr& weyl() {
    static const SignaturePtr sig = weyl_signature(reg());
    return sig;
}

inline Coefficient c_one() { return Coefficient::one(reg()); }
inline Coefficient c_i() { return Coefficient::imaginary_unit(reg()); }
inline Coefficient c_hbar() { return Coefficient::parameter(reg(), "hbar"); }
inline Coefficient c_s() { return Coefficient::parameter(reg(), "s"); }
inline Coefficient c_num(long n, long d = 1) {
    return Coefficient::constant(reg(), GaussianRational(n, d));
}
inline Coefficient c_ihbar() { return c_hbar().scaled(GaussianRational::i()); }

inline OrderParameter s_formal() { return OrderParameter::formal(reg(), "s"); }
inline OrderParameter s_num(long n, long d = 1) {
    return OrderParameter::numeric(reg(), GaussianRational(n, d));
}

inline CanonicalElement qh(std::uint32_t pow = 1) {
    return CanonicalElement::generator(weyl(), "qh", pow);
}
inline CanonicalElement ph(std::uint32_t pow = 1) {
    return CanonicalElement::generator(weyl(), "ph", pow);
}
inline CanonicalElement wmono(std::uint32_t a, std::uint32_t b, Coefficient c) {
    return CanonicalElement::monomial(weyl(), ExponentVec{a, b}, std::move(c));
}
inline CanonicalElement wone() { return CanonicalElement::identity(weyl()); }

inline Symbol sym(std::uint32_t n, std::uint32_t m) { return Symbol::power(reg(), n, m); }

/// Deterministic random coefficient: a few small Gaussian-rational terms in
/// hbar and s.
inline Coefficient random_coefficient(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> exp(0, 2);
    std::uniform_int_distribution<int> nterms(1, 3);
    Coefficient c = Coefficient::zero(reg());
    for (int t = nterms(rng); t > 0; --t) {
        ExponentVec e(reg()->size(), 0);
        e[0] = std::uint32_t(exp(rng));
        e[1] = std::uint32_t(exp(rng));
        c += Coefficient::monomial(
            reg(), e,
            GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))));
    }
    return c;
}

/// Random canonical element of bounded degree over the Weyl signature.
inline CanonicalElement random_weyl_element(std::mt19937_64& rng, std::uint32_t max_degree,
                                            int max_terms = 3) {
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    CanonicalElement e = CanonicalElement::zero(weyl());
    for (int t = nterms(rng); t > 0; --t) {
        const std::uint32_t a = deg(rng);
        std::uniform_int_distribution<std::uint32_t> rest(0, max_degree - a);
        e += wmono(a, rest(rng), random_coefficient(rng));
    }
    return e;
}

inline Symbol random_symbol(std::mt19937_64& rng, std::uint32_t max_degree, int max_terms = 3) {
    std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Symbol f = Symbol::zero(reg());
    for (int t = nterms(rng); t > 0; --t) {
        const std::uint32_t a = deg(rng);
        std::uniform_int_distribution<std::uint32_t> rest(0, max_degree - a);
        f.add_term({a, rest(rng)}, random_coefficient(rng));
    }
    return f;
}

}  // namespace testutil
