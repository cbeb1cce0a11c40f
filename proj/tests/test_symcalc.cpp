#include "doctest.h"
#include "helpers.hpp"

using namespace moyal;
using namespace testutil;

namespace {

Symbol smono(std::uint32_t n, std::uint32_t m, Coefficient c) {
    return Symbol::monomial(reg(), n, m, std::move(c));
}

Coefficient splus_of(const OrderParameter& s) { return s.splus(); }

}  // namespace

TEST_CASE("poisson bracket uses the mk - nl convention") {
    CHECK(poisson(sym(1, 0), sym(0, 1)) == smono(0, 0, c_num(-1)));
    CHECK(poisson(sym(2, 0), sym(0, 2)) == smono(1, 1, c_num(-4)));
    std::mt19937_64 rng(5);
    const Symbol f = random_symbol(rng, 4);
    CHECK(poisson(f, f).is_zero());

    // Closed form (mk - nl) q^(n+k-1) p^(m+l-1) across a grid.
    for (std::uint32_t n = 0; n <= 3; ++n)
        for (std::uint32_t m = 0; m <= 3; ++m)
            for (std::uint32_t k = 0; k <= 3; ++k)
                for (std::uint32_t l = 0; l <= 3; ++l) {
                    const long w = long(m) * k - long(n) * l;
                    Symbol expect = Symbol::zero(reg());
                    if (w != 0) expect = smono(n + k - 1, m + l - 1, c_num(w));
                    CHECK(poisson(sym(n, m), sym(k, l)) == expect);
                }
}

TEST_CASE("poisson satisfies Leibniz") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Symbol f = random_symbol(rng, 3);
        const Symbol g = random_symbol(rng, 3);
        const Symbol h = random_symbol(rng, 3);
        CHECK(poisson(f, g * h) == poisson(f, g) * h + g * poisson(f, h));
    }
}

TEST_CASE("star product first-order examples") {
    const OrderParameter s = s_formal();
    const Coefficient isplus = splus_of(s).scaled(GaussianRational::i());
    const Coefficient isminus = s.sminus().scaled(GaussianRational::i());

    CHECK(star(sym(1, 0), sym(0, 1), s) == smono(1, 1, c_one()) + smono(0, 0, -isplus));
    CHECK(star(sym(0, 1), sym(1, 0), s) == smono(1, 1, c_one()) + smono(0, 0, isminus));

    std::mt19937_64 rng(31);
    const Symbol f = random_symbol(rng, 4);
    const Symbol one = Symbol::one(reg());
    CHECK(star(f, one, s) == f);
    CHECK(star(one, f, s) == f);
}

TEST_CASE("q^2 star p^2 at s = 0") {
    const Symbol got = star(sym(2, 0), sym(0, 2), s_num(0));
    const Symbol expect = smono(2, 2, c_one()) +
                          smono(1, 1, c_ihbar().scaled(GaussianRational(-2))) +
                          smono(0, 0, (c_hbar() * c_hbar()).scaled(GaussianRational(-1, 2)));
    CHECK(got == expect);
}

TEST_CASE("moyal bracket examples") {
    const OrderParameter s = s_formal();
    CHECK(moyal_bracket(sym(1, 0), sym(0, 1), s) == smono(0, 0, -c_ihbar()));

    // {q^2, p^2} = -4 i hbar q p - 2 hbar^2 s
    const Symbol expect = smono(1, 1, c_ihbar().scaled(GaussianRational(-4))) +
                          smono(0, 0, (c_hbar() * c_hbar() * c_s()).scaled(GaussianRational(-2)));
    CHECK(moyal_bracket(sym(2, 0), sym(0, 2), s) == expect);

    std::mt19937_64 rng(37);
    const Symbol h = random_symbol(rng, 5);
    CHECK(moyal_bracket(h, h, s).is_zero());
}

TEST_CASE("bidifferential star agrees with the monomial closed form") {
    const OrderParameter s = s_formal();
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (std::uint32_t m = 0; m <= 4; ++m)
            for (std::uint32_t k = 0; k <= 4; ++k)
                for (std::uint32_t l = 0; l <= 4; ++l)
                    CHECK(star(sym(n, m), sym(k, l), s) ==
                          star_closed_form(sym(n, m), sym(k, l), s));

    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const Symbol f = random_symbol(rng, 4);
        const Symbol g = random_symbol(rng, 4);
        CHECK(star(f, g, s) == star_closed_form(f, g, s));
    }
}

TEST_CASE("star is associative for monomials of total degree <= 6, formal s") {
    const OrderParameter s = s_formal();
    const std::uint32_t bound = 6;
    for (std::uint32_t d1 = 0; d1 <= bound; ++d1)
        for (std::uint32_t a = 0; a <= d1; ++a)
            for (std::uint32_t d2 = 0; d1 + d2 <= bound; ++d2)
                for (std::uint32_t c = 0; c <= d2; ++c)
                    for (std::uint32_t d3 = 0; d1 + d2 + d3 <= bound; ++d3)
                        for (std::uint32_t e = 0; e <= d3; ++e) {
                            const Symbol f = sym(a, d1 - a);
                            const Symbol g = sym(c, d2 - c);
                            const Symbol h = sym(e, d3 - e);
                            CHECK(star(star(f, g, s), h, s) == star(f, star(g, h, s), s));
                        }
}

TEST_CASE("moyal satisfies the Jacobi identity, total degree <= 10, formal s") {
    const OrderParameter s = s_formal();
    const std::uint32_t bound = 10;
    std::size_t checked = 0;
    for (std::uint32_t d1 = 0; d1 <= bound; ++d1)
        for (std::uint32_t a = 0; a <= d1; ++a)
            for (std::uint32_t d2 = 0; d1 + d2 <= bound; ++d2)
                for (std::uint32_t c = 0; c <= d2; ++c)
                    for (std::uint32_t d3 = 0; d1 + d2 + d3 <= bound; ++d3)
                        for (std::uint32_t e = 0; e <= d3; ++e) {
                            const Symbol f = sym(a, d1 - a);
                            const Symbol g = sym(c, d2 - c);
                            const Symbol h = sym(e, d3 - e);
                            const Symbol jac =
                                moyal_bracket(f, moyal_bracket(g, h, s), s) +
                                moyal_bracket(g, moyal_bracket(h, f, s), s) +
                                moyal_bracket(h, moyal_bracket(f, g, s), s);
                            ++checked;
                            CHECK(jac.is_zero());
                        }
    CHECK(checked > 5000);
}

TEST_CASE("classical limit: hbar-linear part of moyal is i times poisson") {
    const OrderParameter s = s_formal();
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (std::uint32_t m = 0; m <= 4; ++m)
            for (std::uint32_t k = 0; k <= 4; ++k)
                for (std::uint32_t l = 0; l <= 4; ++l) {
                    const Symbol mb = moyal_bracket(sym(n, m), sym(k, l), s);
                    Symbol linear = Symbol::zero(reg());
                    for (const auto& [key, c] : mb.terms()) {
                        const Coefficient at1 = c.coefficient_of("hbar", 1);
                        CHECK(at1.degree_in("s") == 0);
                        linear.add_term(key, at1);
                    }
                    CHECK(linear ==
                          poisson(sym(n, m), sym(k, l)).scaled(GaussianRational::i()));
                }
}

TEST_CASE("hamiltonian vector fields") {
    CHECK(hvf_apply(1, 1, sym(1, 0)) == sym(1, 0));
    // v_20 = -2 q d_p, so v_20(p) = -2q.
    CHECK(hvf_apply(2, 0, sym(0, 1)) == smono(1, 0, c_num(-2)));
    CHECK(hvf_apply(3, 2, Symbol::one(reg())).is_zero());

    // Closure through the Poisson bracket (operator form checked in the
    // differential-operator tests).
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        const Symbol f = random_symbol(rng, 4);
        const Symbol lhs = hvf_apply(2, 1, hvf_apply(1, 2, f)) -
                           hvf_apply(1, 2, hvf_apply(2, 1, f));
        const Symbol pb = poisson(sym(2, 1), sym(1, 2));
        Symbol rhs = Symbol::zero(reg());
        for (const auto& [key, c] : pb.terms())
            rhs += hvf_apply(key[0], key[1], f).scaled(c);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("degree grading") {
    const std::vector<Symbol> gens = {sym(2, 0), sym(1, 1), sym(0, 2)};
    const auto parts = grade_decompose(gens);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].degree == 2);
    CHECK(parts[1].degree == 0);
    CHECK(parts[2].degree == -2);

    CHECK(grade_decompose({sym(3, 1)}).at(0).degree == 2);
    CHECK(grade_decompose({}).empty());

    // Zero-degree part collects exactly the H^n = q^n p^n generators.
    std::vector<Symbol> tower;
    for (std::uint32_t n = 0; n <= 5; ++n) tower.push_back(sym(n, n));
    const auto zero_parts = grade_decompose(tower);
    REQUIRE(zero_parts.size() == 1);
    CHECK(zero_parts[0].degree == 0);
    CHECK(zero_parts[0].generators.size() == 6);
}

TEST_CASE("moyal respects the degree grading") {
    const OrderParameter s = s_formal();
    for (std::uint32_t n = 0; n <= 3; ++n)
        for (std::uint32_t m = 0; m <= 3; ++m)
            for (std::uint32_t k = 0; k <= 3; ++k)
                for (std::uint32_t l = 0; l <= 3; ++l) {
                    const long expect = grade_degree(n, m) + grade_degree(k, l);
                    for (const auto& [key, c] : moyal_bracket(sym(n, m), sym(k, l), s).terms())
                        CHECK(grade_degree(key[0], key[1]) == expect);
                }
}

TEST_CASE("star and moyal reject mismatched variable pairs") {
    const Symbol xi = Symbol::power(reg(), 1, 0, PhaseSpaceVars::XiEta);
    CHECK_THROWS_AS(star(sym(1, 0), xi, s_formal()), Error);
    CHECK_THROWS_AS(star(xi, xi, s_formal()), Error);  // not defined on (xi,eta)
    CHECK_THROWS_AS(poisson(sym(1, 0), xi), Error);
}
