#include "moyal/winf.hpp"

namespace moyal {

GaussianRational a_coeff(long n, long m, long k, long l, long r, long j) {
    if (n < 0 || m < 0 || k < 0 || l < 0) throw Error("a_coeff: negative generator index");
    const long d1 = n + r - j, d2 = m - r, d3 = k - r, d4 = l + r - j;
    if (d1 < 0 || d2 < 0 || d3 < 0 || d4 < 0) return GaussianRational(0);
    Integer num = factorial(unsigned(n)) * factorial(unsigned(m)) * factorial(unsigned(k)) *
                  factorial(unsigned(l));
    Integer den = factorial(unsigned(d1)) * factorial(unsigned(d2)) * factorial(unsigned(d3)) *
                  factorial(unsigned(d4));
    return GaussianRational(Rational(num, den));
}

Coefficient f_factor(const OrderParameter& s, std::uint32_t r, std::uint32_t j, bool anti) {
    if (r > j) throw Error("f_factor: r out of range");
    const Coefficient splus = s.splus();
    const Coefficient sminus = s.sminus();
    const Coefficient first = sminus.pow(r) * (-splus).pow(j - r);
    const Coefficient second = sminus.pow(j - r) * (-splus).pow(r);
    return anti ? first + second : first - second;
}

BracketExpansion bracket_closed_form(std::uint32_t n, std::uint32_t m, std::uint32_t k,
                                     std::uint32_t l, const OrderParameter& s, bool anti) {
    const auto& reg = s.registry();
    BracketExpansion expansion;
    const std::uint32_t rmax = std::min(m, k);
    const std::uint32_t jmax = std::min(n + rmax, l + rmax);
    for (std::uint32_t j = 0; j <= jmax; ++j) {
        if (j > n + k || j > m + l) break;
        Coefficient acc = Coefficient::zero(reg);
        for (std::uint32_t r = 0; r <= std::min(j, rmax); ++r) {
            const GaussianRational a = a_coeff(n, m, k, l, r, j);
            if (a.is_zero()) continue;
            acc += f_factor(s, r, j, anti).scaled(a * GaussianRational(Rational(binomial(j, r))));
        }
        if (acc.is_zero()) continue;
        acc = acc.scaled(GaussianRational::i().pow(j) *
                         GaussianRational(Rational(1, factorial(j))));
        expansion.emplace(std::make_pair(n + k - j, m + l - j), std::move(acc));
    }
    return expansion;
}

Symbol expansion_to_symbol(const BracketExpansion& e, const RegistryPtr& reg) {
    Symbol f = Symbol::zero(reg, PhaseSpaceVars::QP);
    for (const auto& [nm, c] : e) f.add_term({nm.first, nm.second}, c);
    return f;
}

BracketExpansion symbol_to_expansion(const Symbol& f) {
    BracketExpansion e;
    for (const auto& [key, c] : f.terms()) e.emplace(std::make_pair(key[0], key[1]), c);
    return e;
}

Symbol poisson_limit(std::uint32_t n, std::uint32_t m, std::uint32_t k, std::uint32_t l,
                     const RegistryPtr& reg) {
    const OrderParameter s = OrderParameter::formal(reg, "s");
    const Symbol bracket = expansion_to_symbol(bracket_closed_form(n, m, k, l, s), reg);

    // Coefficient of (i hbar)^1; the j=1 term is automatically s-free.
    Symbol limit = Symbol::zero(reg, PhaseSpaceVars::QP);
    for (const auto& [key, c] : bracket.terms()) {
        const Coefficient at_hbar1 = c.coefficient_of("hbar", 1);
        if (at_hbar1.is_zero()) continue;
        limit.add_term(key, at_hbar1.scaled(GaussianRational(Rational(0), Rational(-1))));  // 1/i
    }

    const Symbol expected =
        (n + k >= 1 && m + l >= 1)
            ? Symbol::monomial(reg, n + k - 1, m + l - 1,
                               Coefficient::constant(
                                   reg, GaussianRational(long(m) * long(k) - long(n) * long(l))))
            : Symbol::zero(reg, PhaseSpaceVars::QP);
    if (limit != expected) throw Error("poisson limit mismatch against (mk - nl) closed form");
    return limit;
}

CanonicalElement h_tower(std::uint32_t n, const SignaturePtr& sig) {
    if (n < 1) throw Error("h_tower requires n >= 1");
    const auto& reg = sig->registry();
    const CanonicalElement qh = CanonicalElement::generator(sig, "qh");
    const CanonicalElement ph = CanonicalElement::generator(sig, "ph");
    const Coefficient ihalf_hbar =
        Coefficient::parameter(reg, "hbar").scaled(GaussianRational(Rational(0), Rational(1, 2)));
    const CanonicalElement x =
        (multiply(qh, ph) + multiply(ph, qh)).scaled(GaussianRational(1, 2));
    const CanonicalElement c = CanonicalElement::scalar(sig, ihalf_hbar);

    CanonicalElement h = CanonicalElement::identity(sig);
    for (std::uint32_t j = 1; j <= n; ++j)
        h = multiply(h, x + c.scaled(GaussianRational(long(2 * j - 1))));
    return h;
}

BracketExpansion virasoro_bracket(VirasoroSide side, std::uint32_t n, std::uint32_t k,
                                  const OrderParameter& s) {
    if (side == VirasoroSide::QSide) return bracket_closed_form(n + 1, 1, k + 1, 1, s);
    return bracket_closed_form(1, n + 1, 1, k + 1, s);
}

KacMoodyKind kac_moody_kind_from_name(const std::string& name) {
    if (name == "qn_pl") return KacMoodyKind::QnPl;
    if (name == "qk_Hn") return KacMoodyKind::QkHn;
    if (name == "pk_Hn") return KacMoodyKind::PkHn;
    throw Error("unknown Kac-Moody bracket kind: " + name);
}

BracketExpansion kac_moody_bracket(KacMoodyKind kind, std::uint32_t first, std::uint32_t second,
                                   const OrderParameter& s) {
    const Coefficient splus = s.splus();
    const Coefficient sminus = s.sminus();

    // One j-sum with weight i^j b(j,a,b) [(-s+)^j - (s-)^j] (sign flipped for
    // the p-tower bracket).
    const auto weight = [&](std::uint32_t j, std::uint32_t a, std::uint32_t b, bool flipped) {
        Coefficient w = (-splus).pow(j) - sminus.pow(j);
        if (flipped) w = -w;
        return w.scaled(b_coeff(j, a, b) * GaussianRational::i().pow(j));
    };

    BracketExpansion expansion;
    switch (kind) {
        case KacMoodyKind::QnPl: {
            const std::uint32_t n = first, l = second;
            for (std::uint32_t j = 1; j <= std::min(n, l); ++j) {
                Coefficient w = weight(j, n, l, false);
                if (!w.is_zero()) expansion.emplace(std::make_pair(n - j, l - j), std::move(w));
            }
            break;
        }
        case KacMoodyKind::QkHn: {
            const std::uint32_t k = first, n = second;
            for (std::uint32_t j = 1; j <= std::min(k, n); ++j) {
                Coefficient w = weight(j, k, n, false);
                if (!w.is_zero())
                    expansion.emplace(std::make_pair(n + k - j, n - j), std::move(w));
            }
            break;
        }
        case KacMoodyKind::PkHn: {
            const std::uint32_t k = first, n = second;
            for (std::uint32_t j = 1; j <= std::min(k, n); ++j) {
                Coefficient w = weight(j, k, n, true);
                if (!w.is_zero())
                    expansion.emplace(std::make_pair(n - j, n + k - j), std::move(w));
            }
            break;
        }
    }
    return expansion;
}

}  // namespace moyal
