#include "doctest.h"
#include "helpers.hpp"
#include "moyal/metaplectic.hpp"
#include "moyal/structure_table.hpp"

using namespace moyal;
using namespace testutil;

TEST_CASE("a_coeff") {
    CHECK(a_coeff(1, 0, 0, 1, 0, 1) == GaussianRational(1));
    CHECK(a_coeff(2, 0, 0, 2, 0, 1) == GaussianRational(4));
    CHECK(a_coeff(3, 2, 1, 4, 0, 0) == GaussianRational(1));
    // Negative factorial arguments vanish by convention.
    CHECK(a_coeff(1, 0, 0, 1, 1, 1) == GaussianRational(0));
    CHECK(a_coeff(0, 0, 0, 0, 0, 3) == GaussianRational(0));
}

TEST_CASE("ordering factor") {
    const OrderParameter s = s_formal();
    CHECK(f_factor(s, 0, 0, false).is_zero());
    CHECK(f_factor(s, 0, 1, false) == -c_hbar());

    // s = 1: f_1rj = (-hbar)^j (delta_r0 - delta_rj).
    const OrderParameter one = s_num(1);
    for (std::uint32_t j = 1; j <= 5; ++j) {
        const Coefficient expect = c_hbar().pow(j).scaled(GaussianRational(-1).pow(j));
        CHECK(f_factor(one, 0, j, false) == expect);
        CHECK(f_factor(one, j, j, false) == -expect);
        for (std::uint32_t r = 1; r < j; ++r) CHECK(f_factor(one, r, j, false).is_zero());
    }
    // s = -1 mirror: hbar^j (delta_jr - delta_r0).
    const OrderParameter minus_one = s_num(-1);
    for (std::uint32_t j = 1; j <= 5; ++j) {
        CHECK(f_factor(minus_one, j, j, false) == c_hbar().pow(j));
        CHECK(f_factor(minus_one, 0, j, false) == -c_hbar().pow(j));
    }
    // s = 0: (hbar/2)^j (-1)^r ((-1)^j - 1).
    const OrderParameter zero = s_num(0);
    for (std::uint32_t j = 0; j <= 5; ++j)
        for (std::uint32_t r = 0; r <= j; ++r) {
            Coefficient expect = Coefficient::zero(reg());
            if (j % 2 == 1)
                expect = c_hbar().pow(j).scaled(
                    pow_rational(Rational(1, 2), j) * Rational(-2) *
                    (r % 2 == 0 ? Rational(1) : Rational(-1)));
            CHECK(f_factor(zero, r, j, false) == expect);
        }

    CHECK_THROWS_AS(f_factor(s, 3, 2, false), Error);
}

TEST_CASE("closed-form bracket examples") {
    const OrderParameter s = s_formal();
    const auto e1 = bracket_closed_form(1, 0, 0, 1, s);
    REQUIRE(e1.size() == 1);
    CHECK(e1.at({0, 0}) == -c_ihbar());

    const auto e2 = bracket_closed_form(2, 0, 0, 2, s);
    REQUIRE(e2.size() == 2);
    CHECK(e2.at({1, 1}) == c_ihbar().scaled(GaussianRational(-4)));
    CHECK(e2.at({0, 0}) == (c_hbar().pow(2) * c_s()).scaled(GaussianRational(-2)));

    CHECK(bracket_closed_form(3, 2, 3, 2, s).empty());
}

TEST_CASE("closed form matches the bidifferential engine") {
    const OrderParameter s = s_formal();
    for (std::uint32_t n = 0; n <= 4; ++n)
        for (std::uint32_t m = 0; m <= 4; ++m)
            for (std::uint32_t k = 0; k <= 4; ++k)
                for (std::uint32_t l = 0; l <= 4; ++l) {
                    CHECK(expansion_to_symbol(bracket_closed_form(n, m, k, l, s), reg()) ==
                          moyal_bracket(sym(n, m), sym(k, l), s));
                    CHECK(expansion_to_symbol(bracket_closed_form(n, m, k, l, s, true), reg()) ==
                          moyal_anti_bracket(sym(n, m), sym(k, l), s));
                }
}

TEST_CASE("poisson limit") {
    CHECK(poisson_limit(1, 0, 0, 1, reg()) ==
          Symbol::monomial(reg(), 0, 0, c_num(-1)));
    CHECK(poisson_limit(1, 1, 1, 1, reg()).is_zero());
    CHECK(poisson_limit(2, 1, 1, 2, reg()) ==
          Symbol::monomial(reg(), 2, 2, c_num(-3)));
}

TEST_CASE("abelian tower product form") {
    CHECK(h_tower(1, weyl()) == multiply(qh(), ph()));
    CHECK(h_tower(2, weyl()) == multiply(qh(2), ph(2)));
    for (std::uint32_t n = 1; n <= 8; ++n)
        CHECK(h_tower(n, weyl()) == multiply(qh(n), ph(n)));
    for (std::uint32_t n = 1; n <= 6; ++n)
        for (std::uint32_t k = 1; k <= 6; ++k)
            CHECK(commutator(h_tower(n, weyl()), h_tower(k, weyl())).is_zero());
    CHECK_THROWS_AS(h_tower(0, weyl()), Error);
}

TEST_CASE("virasoro brackets") {
    const OrderParameter s = s_formal();
    const auto q12 = virasoro_bracket(VirasoroSide::QSide, 1, 2, s);
    REQUIRE(q12.size() == 1);
    CHECK(q12.at({4, 1}) == c_ihbar());

    CHECK(virasoro_bracket(VirasoroSide::QSide, 3, 3, s).empty());

    const auto p12 = virasoro_bracket(VirasoroSide::PSide, 1, 2, s);
    REQUIRE(p12.size() == 1);
    CHECK(p12.at({1, 4}) == -c_ihbar());
}

TEST_CASE("kac-moody cross brackets") {
    const OrderParameter s = s_formal();
    const auto qp = kac_moody_bracket(KacMoodyKind::QnPl, 1, 1, s);
    REQUIRE(qp.size() == 1);
    CHECK(qp.at({0, 0}) == -c_ihbar());

    CHECK(moyal_bracket(sym(3, 0), sym(5, 0), s).is_zero());

    const auto qh1 = kac_moody_bracket(KacMoodyKind::QkHn, 1, 1, s);
    REQUIRE(qh1.size() == 1);
    CHECK(qh1.at({1, 0}) == -c_ihbar());
}

TEST_CASE("metaplectic matrices") {
    const MetaplecticMatrix j0 = metaplectic_matrix(MetaplecticGenerator::J, 0.0);
    CHECK(max_abs_diff(j0.entries, identity3()) == 0.0);

    const double b1 = 0.8;
    const MetaplecticMatrix mb1 = metaplectic_matrix(MetaplecticGenerator::B1, b1);
    CHECK(mb1.entries[0][0] == doctest::Approx(std::exp(b1 / 2)).epsilon(1e-14));
    CHECK(mb1.entries[1][1] == doctest::Approx(std::exp(-b1 / 2)).epsilon(1e-14));
    CHECK(mb1.entries[0][1] == 0.0);
    CHECK(std::abs(mb1.determinant() - 1.0) < 1e-14);

    // Group law and exponential reconstruction spot checks.
    for (const auto g : {MetaplecticGenerator::J, MetaplecticGenerator::B2,
                         MetaplecticGenerator::N1}) {
        const MetaplecticMatrix ma = metaplectic_matrix(g, 0.7);
        const MetaplecticMatrix mb = metaplectic_matrix(g, -1.9);
        const MetaplecticMatrix mab = metaplectic_matrix(g, -1.2);
        CHECK(max_abs_diff(matmul3(ma.entries, mb.entries), mab.entries) < 1e-13);
    }
}

TEST_CASE("structure table determinism and content") {
    const OrderParameter s = s_formal();
    const StructureTable t1 = build_structure_table(2, s, false, 1);
    const StructureTable t8 = build_structure_table(2, s, false, 8);
    CHECK(table_to_json(t1) == table_to_json(t8));
    CHECK(table_to_csv(t1) == table_to_csv(t8));

    // Row (1,0,0,1) carries -i hbar.
    const auto& entry = t1.entries.at({1, 0, 0, 1});
    REQUIRE(entry.size() == 1);
    CHECK(entry.at({0, 0}) == -c_ihbar());

    // Antisymmetry under (n,m) <-> (k,l).
    for (const auto& [key, expansion] : t1.entries) {
        const auto& mirror = t1.entries.at({key[2], key[3], key[0], key[1]});
        for (const auto& [nm, c] : expansion) CHECK(mirror.at(nm) == -c);
    }

    const StructureTable t0 = build_structure_table(0, s, false, 1);
    REQUIRE(t0.entries.size() == 1);
    CHECK(t0.entries.at({0, 0, 0, 0}).empty());
}
