#pragma once

#include <array>

#include "moyal/order_parameter.hpp"

namespace moyal {

enum class PhaseSpaceVars { QP, XiEta };

const char* var_name(PhaseSpaceVars vars, std::size_t index);  // "q","p" / "xi","eta"

/// Commutative polynomial on phase space: terms map (first-var power,
/// second-var power) -> nonzero Coefficient. Canonical, so equality is
/// structural.
class Symbol {
public:
    using Key = std::array<std::uint32_t, 2>;

    explicit Symbol(RegistryPtr reg, PhaseSpaceVars vars = PhaseSpaceVars::QP)
        : reg_(std::move(reg)), vars_(vars) {}

    static Symbol zero(RegistryPtr reg, PhaseSpaceVars vars = PhaseSpaceVars::QP) {
        return Symbol(std::move(reg), vars);
    }
    static Symbol constant(RegistryPtr reg, Coefficient c, PhaseSpaceVars vars = PhaseSpaceVars::QP);
    static Symbol one(RegistryPtr reg, PhaseSpaceVars vars = PhaseSpaceVars::QP);
    static Symbol monomial(RegistryPtr reg, std::uint32_t e0, std::uint32_t e1, Coefficient c,
                           PhaseSpaceVars vars = PhaseSpaceVars::QP);
    /// q^n p^m with coefficient one (or xi^n eta^m).
    static Symbol power(RegistryPtr reg, std::uint32_t e0, std::uint32_t e1,
                        PhaseSpaceVars vars = PhaseSpaceVars::QP);

    const RegistryPtr& registry() const { return reg_; }
    PhaseSpaceVars vars() const { return vars_; }
    const std::map<Key, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::uint32_t total_degree() const;

    Symbol operator-() const;
    Symbol& operator+=(const Symbol& o);
    Symbol& operator-=(const Symbol& o);
    friend Symbol operator+(Symbol a, const Symbol& b) { return a += b; }
    friend Symbol operator-(Symbol a, const Symbol& b) { return a -= b; }
    friend Symbol operator*(const Symbol& a, const Symbol& b);
    friend bool operator==(const Symbol& a, const Symbol& b);
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }

    Symbol scaled(const Coefficient& c) const;
    Symbol scaled(const GaussianRational& c) const;

    /// d/d(var index) applied `times` times.
    Symbol derivative(std::size_t var, std::uint32_t times = 1) const;

    void add_term(const Key& key, const Coefficient& c);
    void require_same_vars(const Symbol& o) const;

private:
    RegistryPtr reg_;
    PhaseSpaceVars vars_;
    std::map<Key, Coefficient> terms_;
};

/// Poisson bracket, sign convention {f,g} = d_p f d_q g - d_q f d_p g
/// (so {q,p} = -1 and {q^n p^m, q^k p^l} = (mk - nl) q^(n+k-1) p^(m+l-1)).
Symbol poisson(const Symbol& f, const Symbol& g);

/// s-parametrized star product on (q,p) symbols:
///   f (*) g = sum_j (i^j/j!) sum_r C(j,r) (s-)^r (-s+)^(j-r)
///             (d_p^r d_q^(j-r) f) (d_q^r d_p^(j-r) g),
/// the terminating expansion of the bidifferential exponential.
Symbol star(const Symbol& f, const Symbol& g, const OrderParameter& s);

/// Independent closed-form route for monomial factors,
///   q^n p^m (*) q^k p^l = sum_j (i^j/j!) [sum_r C(j,r) (s-)^r (-s+)^(j-r)
///                         a(n,m,k,l,r,j)] q^(n+k-j) p^(m+l-j),
/// extended bilinearly; the bidifferential implementation is tested against
/// this one.
Symbol star_closed_form(const Symbol& f, const Symbol& g, const OrderParameter& s);

/// s-Moyal bracket: star(f,g,s) - star(g,f,s).
Symbol moyal_bracket(const Symbol& f, const Symbol& g, const OrderParameter& s);

/// Anti-bracket: star(f,g,s) + star(g,f,s).
Symbol moyal_anti_bracket(const Symbol& f, const Symbol& g, const OrderParameter& s);

/// Action of the Hamiltonian vector field of q^n p^m, equal to
/// poisson(q^n p^m, f).
Symbol hvf_apply(std::uint32_t n, std::uint32_t m, const Symbol& f);

/// deg(q^n p^m) = n - m.
long grade_degree(std::uint32_t n, std::uint32_t m);

struct GradedPart {
    long degree;
    std::vector<Symbol> generators;
};

/// Partition monomials by degree n - m; parts keep first-appearance order.
std::vector<GradedPart> grade_decompose(const std::vector<Symbol>& gens);

}  // namespace moyal
