#include "doctest.h"
#include "helpers.hpp"

using namespace moyal;
using namespace testutil;

TEST_CASE("b_coeff") {
    CHECK(b_coeff(1, 1, 1) == GaussianRational(1));
    CHECK(b_coeff(0, 7, 3) == GaussianRational(1));
    CHECK(b_coeff(2, 3, 2) == GaussianRational(6));
    CHECK_THROWS_AS(b_coeff(3, 2, 5), Error);
}

TEST_CASE("ordered products at the principal orderings") {
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (std::uint32_t m = 0; m <= 4; ++m) {
            CHECK(ordered_product(n, m, s_num(1), weyl()) == wmono(n, m, c_one()));
            CHECK(ordered_product(n, m, s_num(-1), weyl()) == multiply(ph(m), qh(n)));
        }

    // t_11(0) = (qh ph + ph qh)/2 = qh ph - i hbar / 2
    CHECK(ordered_product(1, 1, s_num(0), weyl()) ==
          wmono(1, 1, c_one()) + wmono(0, 0, c_ihbar().scaled(GaussianRational(-1, 2))));

    // Single-variable monomials are order-independent.
    for (std::uint32_t n = 0; n <= 5; ++n) {
        CHECK(ordered_product(n, 0, s_formal(), weyl()) == wmono(n, 0, c_one()));
        CHECK(ordered_product(0, n, s_formal(), weyl()) == wmono(0, n, c_one()));
    }
}

TEST_CASE("the two binomial splits of the ordered product agree (n,m <= 5, formal s)") {
    const CanonicalElement q = qh(), p = ph();
    for (std::uint32_t n = 0; n <= 5; ++n)
        for (std::uint32_t m = 0; m <= 5; ++m)
            CHECK(ordered_pair_product(q, p, n, m, s_formal()) ==
                  ordered_pair_product_alt(q, p, n, m, s_formal()));
}

TEST_CASE("order conversion examples") {
    // qh ph in the symmetric basis: t_11(1) = t_11(0) + (i hbar/2).
    const auto e1 = convert_order(1, 1, s_num(1), s_num(0));
    REQUIRE(e1.size() == 2);
    CHECK(e1.at({1, 1}) == c_one());
    CHECK(e1.at({0, 0}) == c_ihbar().scaled(GaussianRational(1, 2)));

    // ph qh = qh ph - i hbar.
    const auto e2 = convert_order(1, 1, s_num(-1), s_num(1));
    CHECK(e2.at({1, 1}) == c_one());
    CHECK(e2.at({0, 0}) == -c_ihbar());

    // No deformation at equal parameters.
    const auto e3 = convert_order(4, 2, s_formal(), s_formal());
    REQUIRE(e3.size() == 1);
    CHECK(e3.at({4, 2}) == c_one());
}

TEST_CASE("order conversion reconstructs the ordered product") {
    const OrderParameter s = s_formal();
    const OrderParameter sp = OrderParameter::formal(reg(), "sp");
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (std::uint32_t m = 0; m <= 4; ++m) {
            CanonicalElement rebuilt = CanonicalElement::zero(weyl());
            for (const auto& [nm, c] : convert_order(n, m, s, sp))
                rebuilt += ordered_product(nm.first, nm.second, sp, weyl()).scaled(c);
            CHECK(rebuilt == ordered_product(n, m, s, weyl()));
        }
}

TEST_CASE("round-trip conversion s -> sp -> s is the identity") {
    const OrderParameter s = s_formal();
    const OrderParameter sp = OrderParameter::formal(reg(), "sp");
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (std::uint32_t m = 0; m <= 4; ++m) {
            // Compose the two conversions and compare against the identity.
            std::map<std::pair<std::uint32_t, std::uint32_t>, Coefficient> composed;
            for (const auto& [mid, c1] : convert_order(n, m, s, sp)) {
                for (const auto& [fin, c2] : convert_order(mid.first, mid.second, sp, s)) {
                    auto [it, inserted] = composed.try_emplace(fin, c1 * c2);
                    if (!inserted) it->second += c1 * c2;
                }
            }
            for (const auto& [fin, c] : composed) {
                if (fin == std::make_pair(n, m))
                    CHECK(c == c_one());
                else
                    CHECK(c.is_zero());
            }
        }
}

TEST_CASE("quantize examples") {
    CHECK(quantize(sym(1, 1), s_num(0), weyl()) ==
          wmono(1, 1, c_one()) + wmono(0, 0, c_ihbar().scaled(GaussianRational(-1, 2))));
    CHECK(quantize(sym(2, 0), s_formal(), weyl()) == wmono(2, 0, c_one()));
    CHECK(quantize(Symbol::one(reg()), s_formal(), weyl()) == wone());
}

TEST_CASE("dequantize examples") {
    CHECK(dequantize(wmono(1, 1, c_one()), s_num(1)) == sym(1, 1));
    CHECK(dequantize(wmono(1, 1, c_one()), s_num(0)) ==
          sym(1, 1) + Symbol::monomial(reg(), 0, 0, c_ihbar().scaled(GaussianRational(1, 2))));
    CHECK(dequantize(wone(), s_formal()) == Symbol::one(reg()));
}

TEST_CASE("quantize and dequantize are exact two-sided inverses") {
    const OrderParameter s = s_formal();
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const Symbol f = random_symbol(rng, 5);
        CHECK(dequantize(quantize(f, s, weyl()), s) == f);
        const CanonicalElement a = random_weyl_element(rng, 5);
        CHECK(quantize(dequantize(a, s), s, weyl()) == a);
    }
    // And at the principal numeric orderings.
    for (const long v : {1L, 0L, -1L}) {
        const OrderParameter sv = s_num(v);
        const Symbol f = sym(3, 2) + sym(1, 1).scaled(c_ihbar());
        CHECK(dequantize(quantize(f, sv, weyl()), sv) == f);
    }
}

TEST_CASE("star homomorphism oracle, total degree <= 8, formal s") {
    const OrderParameter s = s_formal();
    std::size_t pairs = 0;
    for (std::uint32_t d1 = 0; d1 <= 8; ++d1)
        for (std::uint32_t a = 0; a <= d1; ++a)
            for (std::uint32_t d2 = 0; d1 + d2 <= 8; ++d2)
                for (std::uint32_t c = 0; c <= d2; ++c) {
                    const Symbol f = sym(a, d1 - a);
                    const Symbol g = sym(c, d2 - c);
                    const CanonicalElement qf = quantize(f, s, weyl());
                    const CanonicalElement qg = quantize(g, s, weyl());
                    // The symbol map reverses factor order on products.
                    CHECK(dequantize(multiply(qf, qg), s) == star(g, f, s));
                    ++pairs;
                }
    CHECK(pairs == 495);
}

TEST_CASE("commutator and anticommutator correspondences") {
    const OrderParameter s = s_formal();
    for (std::uint32_t d1 = 0; d1 <= 5; ++d1)
        for (std::uint32_t a = 0; a <= d1; ++a)
            for (std::uint32_t d2 = 0; d1 + d2 <= 5; ++d2)
                for (std::uint32_t c = 0; c <= d2; ++c) {
                    const Symbol f = sym(a, d1 - a);
                    const Symbol g = sym(c, d2 - c);
                    const CanonicalElement qf = quantize(f, s, weyl());
                    const CanonicalElement qg = quantize(g, s, weyl());
                    CHECK(dequantize(commutator(qf, qg), s) == -moyal_bracket(f, g, s));
                    CHECK(dequantize(anticommutator(qf, qg), s) ==
                          moyal_anti_bracket(f, g, s));
                }
}

TEST_CASE("hermiticity: adjoint of t_nm(s) is t_nm(-s)") {
    const OrderParameter s = s_formal();
    for (std::uint32_t n = 0; n <= 5; ++n)
        for (std::uint32_t m = 0; m <= 5; ++m)
            CHECK(ordered_product(n, m, s, weyl()).adjoint() ==
                  ordered_product(n, m, s.negated(), weyl()));
}

TEST_CASE("hermitize") {
    // (1/2) t_11(1) + (1/2) t_11(-1) = (qh ph + ph qh)/2.
    CHECK(hermitize(1, 1, s_num(1), GaussianRational(1, 2), weyl()) ==
          (multiply(qh(), ph()) + multiply(ph(), qh())).scaled(GaussianRational(1, 2)));
    // Single-variable monomials are already hermitian.
    CHECK(hermitize(2, 0, s_num(1, 2), GaussianRational(1), weyl()) ==
          wmono(2, 0, c_num(2)));
    // At s = 0 both halves coincide with the symmetric product.
    CHECK(hermitize(1, 1, s_num(0), GaussianRational(1, 2), weyl()) ==
          ordered_product(1, 1, s_num(0), weyl()));

    // Self-adjointness for complex s and alpha.
    const OrderParameter si = OrderParameter::numeric(
        reg(), GaussianRational(Rational(1, 3), Rational(1, 2)));
    const GaussianRational alpha(Rational(2), Rational(-1, 4));
    for (std::uint32_t n = 0; n <= 3; ++n)
        for (std::uint32_t m = 0; m <= 3; ++m) {
            const CanonicalElement h = hermitize(n, m, si, alpha, weyl());
            CHECK(h.adjoint() == h);
        }
    CHECK_THROWS_AS(hermitize(1, 1, s_formal(), GaussianRational(1), weyl()), Error);
}
