#include "moyal/symbol.hpp"

#include <algorithm>

namespace moyal {

const char* var_name(PhaseSpaceVars vars, std::size_t index) {
    if (vars == PhaseSpaceVars::QP) return index == 0 ? "q" : "p";
    return index == 0 ? "xi" : "eta";
}

Symbol Symbol::constant(RegistryPtr reg, Coefficient c, PhaseSpaceVars vars) {
    Symbol s(std::move(reg), vars);
    if (!c.is_zero()) s.terms_.emplace(Key{0, 0}, std::move(c));
    return s;
}

Symbol Symbol::one(RegistryPtr reg, PhaseSpaceVars vars) {
    Coefficient c = Coefficient::one(reg);
    return constant(std::move(reg), std::move(c), vars);
}

Symbol Symbol::monomial(RegistryPtr reg, std::uint32_t e0, std::uint32_t e1, Coefficient c,
                        PhaseSpaceVars vars) {
    Symbol s(std::move(reg), vars);
    if (!c.is_zero()) s.terms_.emplace(Key{e0, e1}, std::move(c));
    return s;
}

Symbol Symbol::power(RegistryPtr reg, std::uint32_t e0, std::uint32_t e1, PhaseSpaceVars vars) {
    Coefficient c = Coefficient::one(reg);
    return monomial(std::move(reg), e0, e1, std::move(c), vars);
}

std::uint32_t Symbol::total_degree() const {
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[0] + e[1]);
    return deg;
}

void Symbol::require_same_vars(const Symbol& o) const {
    if (vars_ != o.vars_) throw Error("phase-space variable pair mismatch");
}

void Symbol::add_term(const Key& key, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Symbol Symbol::operator-() const {
    Symbol r(reg_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Symbol& Symbol::operator+=(const Symbol& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Symbol& Symbol::operator-=(const Symbol& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Symbol operator*(const Symbol& a, const Symbol& b) {
    a.require_same_vars(b);
    Symbol r(a.reg_, a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea[0] + eb[0], ea[1] + eb[1]}, ca * cb);
    return r;
}

bool operator==(const Symbol& a, const Symbol& b) {
    a.require_same_vars(b);
    return a.terms_ == b.terms_;
}

Symbol Symbol::scaled(const Coefficient& c) const {
    Symbol r(reg_, vars_);
    for (const auto& [e, v] : terms_) r.add_term(e, v * c);
    return r;
}

Symbol Symbol::scaled(const GaussianRational& c) const {
    Symbol r(reg_, vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v.scaled(c));
    return r;
}

Symbol Symbol::derivative(std::size_t var, std::uint32_t times) const {
    Symbol r(reg_, vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < times) continue;
        Integer count = 1;
        for (std::uint32_t k = 0; k < times; ++k) count *= e[var] - k;
        Key key = e;
        key[var] -= times;
        r.add_term(key, c.scaled(GaussianRational(Rational(count))));
    }
    return r;
}

Symbol poisson(const Symbol& f, const Symbol& g) {
    f.require_same_vars(g);
    return f.derivative(1) * g.derivative(0) - f.derivative(0) * g.derivative(1);
}

Symbol star(const Symbol& f, const Symbol& g, const OrderParameter& s) {
    f.require_same_vars(g);
    if (f.vars() != PhaseSpaceVars::QP)
        throw Error("star product is defined on (q,p) symbols only");
    const auto& reg = f.registry();
    const Coefficient splus = s.splus();
    const Coefficient sminus = s.sminus();

    Symbol result = Symbol::zero(reg, f.vars());
    const std::uint32_t jmax = std::min(f.total_degree(), g.total_degree());
    for (std::uint32_t j = 0; j <= jmax; ++j) {
        for (std::uint32_t r = 0; r <= j; ++r) {
            const Symbol df = f.derivative(1, r).derivative(0, j - r);
            if (df.is_zero()) continue;
            const Symbol dg = g.derivative(0, r).derivative(1, j - r);
            if (dg.is_zero()) continue;
            const GaussianRational scalar =
                GaussianRational::i().pow(j) * GaussianRational(Rational(binomial(j, r), factorial(j)));
            const Coefficient weight =
                (sminus.pow(r) * (-splus).pow(j - r)).scaled(scalar);
            result += (df * dg).scaled(weight);
        }
    }
    return result;
}

namespace {

// n!m!k!l! / ((n+r-j)!(m-r)!(k-r)!(l+r-j)!), zero when any argument is
// negative. Shared shape with the structure-constant coefficient; kept local
// so this route stays independent of the closed-form bracket module.
Rational star_term_count(long n, long m, long k, long l, long r, long j) {
    const long d1 = n + r - j, d2 = m - r, d3 = k - r, d4 = l + r - j;
    if (d1 < 0 || d2 < 0 || d3 < 0 || d4 < 0) return 0;
    Integer num = factorial(unsigned(n)) * factorial(unsigned(m)) * factorial(unsigned(k)) *
                  factorial(unsigned(l));
    Integer den = factorial(unsigned(d1)) * factorial(unsigned(d2)) * factorial(unsigned(d3)) *
                  factorial(unsigned(d4));
    return Rational(num, den);
}

}  // namespace

Symbol star_closed_form(const Symbol& f, const Symbol& g, const OrderParameter& s) {
    f.require_same_vars(g);
    if (f.vars() != PhaseSpaceVars::QP)
        throw Error("star product is defined on (q,p) symbols only");
    const auto& reg = f.registry();
    const Coefficient splus = s.splus();
    const Coefficient sminus = s.sminus();

    Symbol result = Symbol::zero(reg, f.vars());
    for (const auto& [ef, cf] : f.terms()) {
        for (const auto& [eg, cg] : g.terms()) {
            const long n = ef[0], m = ef[1], k = eg[0], l = eg[1];
            const Coefficient cfg = cf * cg;
            const long jtop = n + m + k + l;
            for (long j = 0; j <= jtop; ++j) {
                Coefficient acc = Coefficient::zero(reg);
                for (long r = 0; r <= j; ++r) {
                    const Rational count = star_term_count(n, m, k, l, r, j);
                    if (count == 0) continue;
                    const GaussianRational scalar(count * Rational(binomial(j, r), factorial(unsigned(j))));
                    acc += (sminus.pow(unsigned(r)) * (-splus).pow(unsigned(j - r))).scaled(scalar);
                }
                if (acc.is_zero()) continue;
                acc = acc.scaled(GaussianRational::i().pow(unsigned(j)));
                if (n + k < j || m + l < j) continue;
                result.add_term({std::uint32_t(n + k - j), std::uint32_t(m + l - j)}, cfg * acc);
            }
        }
    }
    return result;
}

Symbol moyal_bracket(const Symbol& f, const Symbol& g, const OrderParameter& s) {
    return star(f, g, s) - star(g, f, s);
}

Symbol moyal_anti_bracket(const Symbol& f, const Symbol& g, const OrderParameter& s) {
    return star(f, g, s) + star(g, f, s);
}

Symbol hvf_apply(std::uint32_t n, std::uint32_t m, const Symbol& f) {
    return poisson(Symbol::power(f.registry(), n, m, f.vars()), f);
}

long grade_degree(std::uint32_t n, std::uint32_t m) { return long(n) - long(m); }

std::vector<GradedPart> grade_decompose(const std::vector<Symbol>& gens) {
    std::vector<GradedPart> parts;
    for (const Symbol& g : gens) {
        if (g.terms().size() != 1) throw Error("grade_decompose expects monomials");
        const auto& e = g.terms().begin()->first;
        const long deg = grade_degree(e[0], e[1]);
        auto it = std::find_if(parts.begin(), parts.end(),
                               [&](const GradedPart& p) { return p.degree == deg; });
        if (it == parts.end()) {
            parts.push_back({deg, {g}});
        } else {
            it->generators.push_back(g);
        }
    }
    return parts;
}

}  // namespace moyal
