#include "doctest.h"
#include "helpers.hpp"

using namespace moyal;
using namespace testutil;

TEST_CASE("gaussian rationals are canonical") {
    GaussianRational a(Rational(2, 4), Rational(-6, 4));
    CHECK(a.re() == Rational(1, 2));
    CHECK(a.im() == Rational(-3, 2));
    CHECK(GaussianRational(Rational(3, 6)) == GaussianRational(1, 2));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(a * a.inverse() == GaussianRational(1));
}

TEST_CASE("coefficient ring arithmetic basics") {
    CHECK(c_hbar() * c_hbar() == Coefficient::parameter(reg(), "hbar", 2));

    // (1+s)/2 * hbar + (1-s)/2 * hbar = hbar
    const Coefficient half(c_num(1, 2));
    const Coefficient lhs = (c_one() + c_s()) * half * c_hbar() + (c_one() - c_s()) * half * c_hbar();
    CHECK(lhs == c_hbar());

    CHECK(c_i() * c_i() == c_num(-1));
}

TEST_CASE("conjugation flips i and fixes formal parameters") {
    CHECK(c_ihbar().conjugate() == -c_ihbar());
    CHECK((c_hbar() * c_s()).conjugate() == c_hbar() * c_s());
    const Coefficient mixed = c_num(3, 2) + c_num(1, 2).scaled(GaussianRational::i());
    CHECK(mixed.conjugate() == c_num(3, 2) - c_num(1, 2).scaled(GaussianRational::i()));
    CHECK(mixed.conjugate().conjugate() == mixed);
}

TEST_CASE("substitution evaluates exactly and leaves unbound parameters") {
    const std::map<std::string, GaussianRational> s0 = {{"s", GaussianRational(0)}};
    CHECK((c_s() * c_hbar()).substitute(s0).is_zero());

    const std::map<std::string, GaussianRational> s1 = {{"s", GaussianRational(1)}};
    CHECK((c_one() + c_s()).substitute(s1) == c_num(2));

    // s+ = hbar(1+s)/2 vanishes at s = -1.
    const Coefficient splus = (c_hbar() * (c_one() + c_s())).scaled(GaussianRational(1, 2));
    CHECK(splus.substitute({{"s", GaussianRational(-1)}}).is_zero());
    CHECK(splus.substitute({{"s", GaussianRational(1)}}) == c_hbar());

    CHECK_THROWS_AS(c_s().substitute({{"bogus", GaussianRational(1)}}), Error);
}

TEST_CASE("registry mismatch is rejected") {
    const auto other = std::make_shared<const ParameterRegistry>(
        std::vector<std::string>{"hbar", "s"});
    CHECK_THROWS_AS(c_one() + Coefficient::one(other), Error);
}

TEST_CASE("ring axioms on randomized coefficients") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const Coefficient a = random_coefficient(rng);
        const Coefficient b = random_coefficient(rng);
        const Coefficient c = random_coefficient(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("substitution and conjugation are ring homomorphisms") {
    std::mt19937_64 rng(11);
    const std::map<std::string, GaussianRational> bind = {
        {"s", GaussianRational(1, 3)}, {"hbar", GaussianRational(2)}};
    for (int trial = 0; trial < 200; ++trial) {
        const Coefficient a = random_coefficient(rng);
        const Coefficient b = random_coefficient(rng);
        CHECK((a * b).substitute(bind) == a.substitute(bind) * b.substitute(bind));
        CHECK((a + b).substitute(bind) == a.substitute(bind) + b.substitute(bind));
        CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
        CHECK(a.conjugate().conjugate() == a);
    }
}

TEST_CASE("zero pruning keeps equality structural") {
    Coefficient a = c_hbar() + c_s();
    a -= c_s();
    CHECK(a == c_hbar());
    CHECK(a.terms().size() == 1);
    Coefficient z = a - a;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}
