#include "moyal/verify.hpp"

#include <random>
#include <sstream>

#include "moyal/diffop.hpp"
#include "moyal/io.hpp"
#include "moyal/metaplectic.hpp"
#include "moyal/structure_table.hpp"
#include "moyal/winf.hpp"

namespace moyal {

namespace {

std::string idx(std::initializer_list<long> values) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (long v : values) {
        if (!first) os << ",";
        first = false;
        os << v;
    }
    os << ")";
    return os.str();
}

void check(SuiteReport& report, const std::string& name, bool pass, const std::string& detail = "") {
    report.checks.push_back({name, pass, pass ? "" : detail});
}

/// All monomials q^a p^b with a + b <= bound.
std::vector<std::pair<std::uint32_t, std::uint32_t>> monomials_up_to(std::uint32_t bound) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t d = 0; d <= bound; ++d)
        for (std::uint32_t a = 0; a <= d; ++a) out.emplace_back(a, d - a);
    return out;
}

SuiteReport suite_jacobi(const VerifyOptions& opt) {
    SuiteReport report{"jacobi", {}};
    const auto& reg = opt.s.registry();
    const std::uint32_t bound = opt.nmax < 0 ? 6 : std::uint32_t(opt.nmax);

    std::size_t checked = 0;
    bool all = true;
    std::string first_fail;
    const auto monos = monomials_up_to(bound);
    for (const auto& [a, b] : monos) {
        const Symbol f = Symbol::power(reg, a, b);
        for (const auto& [c, d] : monos) {
            if (a + b + c + d > bound) continue;
            const Symbol g = Symbol::power(reg, c, d);
            for (const auto& [e, h] : monos) {
                if (a + b + c + d + e + h > bound) continue;
                const Symbol w = Symbol::power(reg, e, h);
                const Symbol lhs = moyal_bracket(f, moyal_bracket(g, w, opt.s), opt.s) +
                                   moyal_bracket(g, moyal_bracket(w, f, opt.s), opt.s) +
                                   moyal_bracket(w, moyal_bracket(f, g, opt.s), opt.s);
                ++checked;
                if (!lhs.is_zero()) {
                    all = false;
                    if (first_fail.empty())
                        first_fail = idx({a, b, c, d, e, h});
                }
            }
        }
    }
    check(report, "moyal Jacobi identity on " + std::to_string(checked) +
                      " monomial triples (total degree <= " + std::to_string(bound) + ")",
          all, "first violated at generators " + first_fail);
    return report;
}

SuiteReport suite_homomorphism(const VerifyOptions& opt) {
    SuiteReport report{"homomorphism", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr sig = weyl_signature(reg);
    const std::uint32_t bound = opt.nmax < 0 ? 4 : std::uint32_t(opt.nmax);

    bool prod_ok = true, comm_ok = true, anti_ok = true;
    std::string prod_fail, comm_fail, anti_fail;
    std::size_t pairs = 0;
    const auto monos = monomials_up_to(bound);
    for (const auto& [a, b] : monos) {
        const Symbol f = Symbol::power(reg, a, b);
        const CanonicalElement qf = quantize(f, opt.s, sig);
        for (const auto& [c, d] : monos) {
            if (a + b + c + d > bound) continue;
            const Symbol g = Symbol::power(reg, c, d);
            const CanonicalElement qg = quantize(g, opt.s, sig);
            ++pairs;

            // Products map to the star product with the factor order
            // reversed by the symbol map (see README on conventions).
            if (dequantize(multiply(qf, qg), opt.s) != star(g, f, opt.s)) {
                prod_ok = false;
                if (prod_fail.empty()) prod_fail = idx({a, b, c, d});
            }
            const Symbol mb = moyal_bracket(f, g, opt.s);
            Symbol lhs = dequantize(commutator(qf, qg), opt.s);
            if (kCommutatorBracketSign < 0) lhs = -lhs;
            if (lhs != mb) {
                comm_ok = false;
                if (comm_fail.empty()) comm_fail = idx({a, b, c, d});
            }
            if (dequantize(anticommutator(qf, qg), opt.s) != moyal_anti_bracket(f, g, opt.s)) {
                anti_ok = false;
                if (anti_fail.empty()) anti_fail = idx({a, b, c, d});
            }
        }
    }
    const std::string range = std::to_string(pairs) + " monomial pairs (total degree <= " +
                              std::to_string(bound) + ")";
    check(report, "operator product realizes the star product on " + range, prod_ok,
          "first violated at " + prod_fail);
    check(report, "commutator realizes the Moyal bracket (sign " +
                      std::to_string(kCommutatorBracketSign) + ") on " + range,
          comm_ok, "first violated at " + comm_fail);
    check(report, "anticommutator realizes the anti-bracket on " + range, anti_ok,
          "first violated at " + anti_fail);
    return report;
}

/// The ten commutator relations of the inhomogeneous symplectic algebra,
/// with an optional global sign flip (the quantum family realizes the
/// mirror-signed table).
template <typename Gen, typename Comm, typename Scale, typename Eq>
void check_isp2_table(SuiteReport& report, const std::string& family, const Gen& gen,
                      const Comm& comm, const Scale& scale, const Eq& eq, int sign) {
    const GaussianRational i = GaussianRational::i();
    const GaussianRational half_i = i * GaussianRational(1, 2);
    const auto test = [&](const std::string& text, const std::string& a, const std::string& b,
                          const std::string& target, const GaussianRational& factor) {
        const auto lhs = comm(gen(a), gen(b));
        const auto rhs = scale(gen(target), sign < 0 ? -factor : factor);
        check(report, family + ": [" + a + "," + b + "] = " + text, eq(lhs, rhs));
    };
    // [N1,N2] handled separately (zero classically, i hbar centrally).
    test("iJ", "B1", "B2", "J", i);
    test("-iB2", "J", "B1", "B2", -i);
    test("iB1", "J", "B2", "B1", i);
    test("-(i/2)N1", "N1", "B1", "N1", -half_i);
    test("(i/2)N1", "N2", "J", "N1", half_i);
    test("(i/2)N1", "N2", "B2", "N1", half_i);
    test("-(i/2)N2", "N1", "J", "N2", -half_i);
    test("(i/2)N2", "N2", "B1", "N2", half_i);
    test("(i/2)N2", "N1", "B2", "N2", half_i);
}

SuiteReport suite_isp2(const VerifyOptions& opt) {
    SuiteReport report{"isp2", {}};
    const auto& reg = opt.s.registry();

    for (const auto& [name, which] :
         {std::pair<std::string, Isp2Realization>{"xi_eta", Isp2Realization::XiEta},
          {"xi_eta_s", Isp2Realization::XiEtaS},
          {"delta", Isp2Realization::Delta},
          {"delta_s", Isp2Realization::DeltaS}}) {
        auto gens = isp2_realization(which, opt.s);
        check(report, name + ": [N1,N2] = 0",
              commutator(gens.at("N1"), gens.at("N2")).is_zero());
        check_isp2_table(
            report, name, [&](const std::string& g) { return gens.at(g); },
            [](const DiffOp& a, const DiffOp& b) { return commutator(a, b); },
            [](const DiffOp& a, const GaussianRational& c) { return a.scaled(c); },
            [](const DiffOp& a, const DiffOp& b) { return a == b; }, +1);
    }

    // Weyl-algebra central extension: mirrored signs plus [N1,N2] = i hbar.
    const SignaturePtr sig = weyl_signature(reg);
    auto qgens = quantum_isp2(sig);
    const Coefficient ihbar = Coefficient::parameter(reg, "hbar").scaled(GaussianRational::i());
    check(report, "quantum: [N1,N2] = i*hbar",
          commutator(qgens.at("N1"), qgens.at("N2")) ==
              HbarScaled{CanonicalElement::scalar(sig, ihbar), 0});
    check_isp2_table(
        report, "quantum", [&](const std::string& g) { return qgens.at(g); },
        [](const HbarScaled& a, const HbarScaled& b) { return commutator(a, b); },
        [](const HbarScaled& a, const GaussianRational& c) { return a.scaled(c); },
        [](const HbarScaled& a, const HbarScaled& b) { return a == b; }, -1);
    return report;
}

SuiteReport suite_bopp(const VerifyOptions& opt) {
    SuiteReport report{"bopp", {}};
    const auto& reg = opt.s.registry();
    const Coefficient ihbar = Coefficient::parameter(reg, "hbar").scaled(GaussianRational::i());

    for (const auto& [label, basis] : {std::pair<std::string, BoppBasis>{"D", BoppBasis::D},
                                       {"Delta", BoppBasis::Delta}}) {
        const SignaturePtr sig =
            basis == BoppBasis::D ? diffop_signature_xieta(reg) : diffop_signature_qp(reg);
        const DiffOp ql = bopp(BoppKind::QL, basis, opt.s, sig);
        const DiffOp qr = bopp(BoppKind::QR, basis, opt.s, sig);
        const DiffOp pl = bopp(BoppKind::PL, basis, opt.s, sig);
        const DiffOp pr = bopp(BoppKind::PR, basis, opt.s, sig);
        const CanonicalElement minus_ihbar = CanonicalElement::scalar(sig, -ihbar);
        const CanonicalElement plus_ihbar = CanonicalElement::scalar(sig, ihbar);

        check(report, label + ": [QL,PL] = -i*hbar", commutator(ql, pl) == minus_ihbar);
        check(report, label + ": [QR,PR] = i*hbar", commutator(qr, pr) == plus_ihbar);
        check(report, label + ": [QL,QR] = 0", commutator(ql, qr).is_zero());
        check(report, label + ": [QL,PR] = 0", commutator(ql, pr).is_zero());
        check(report, label + ": [PL,QR] = 0", commutator(pl, qr).is_zero());
        check(report, label + ": [PL,PR] = 0", commutator(pl, pr).is_zero());
    }

    // Standard-order specialization: at s=1 the left parity-basis operators
    // reduce to plain multiplications.
    const SignaturePtr qp = diffop_signature_qp(reg);
    const OrderParameter one = OrderParameter::numeric(reg, GaussianRational(1));
    check(report, "Delta: QL at s=1 is multiplication by q",
          bopp(BoppKind::QL, BoppBasis::Delta, one, qp) == CanonicalElement::generator(qp, "q"));
    check(report, "Delta: PR at s=1 is multiplication by p",
          bopp(BoppKind::PR, BoppBasis::Delta, one, qp) == CanonicalElement::generator(qp, "p"));
    return report;
}

SuiteReport suite_gamma_closure(const VerifyOptions& opt) {
    SuiteReport report{"gamma-closure", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr dsig = diffop_signature_qp(reg);
    const SignaturePtr wsig = weyl_signature(reg);
    const std::uint32_t bound = opt.nmax < 0 ? 6 : std::uint32_t(opt.nmax);
    const OrderParameter minus_s = opt.s.negated();

    // Gamma of a polynomial: linear extension over its monomials.
    const auto gamma_of = [&](const Symbol& f) {
        DiffOp acc = CanonicalElement::zero(dsig);
        for (const auto& [e, c] : f.terms())
            acc += gamma_op(e[0], e[1], opt.s, minus_s, dsig).scaled(c);
        return acc;
    };

    bool op_ok = true, act_ok = true, central_ok = true;
    std::string op_fail, act_fail, central_fail;
    std::size_t pair_count = 0;
    const auto monos = monomials_up_to(bound);
    const auto tests = monomials_up_to(4);
    for (const auto& [a, b] : monos) {
        for (const auto& [c, d] : monos) {
            if (a + b + c + d > bound) continue;
            ++pair_count;
            const Symbol f = Symbol::power(reg, a, b);
            const Symbol g = Symbol::power(reg, c, d);
            const DiffOp ga = gamma_op(a, b, opt.s, minus_s, dsig);
            const DiffOp gb = gamma_op(c, d, opt.s, minus_s, dsig);
            const DiffOp lhs = commutator(ga, gb);
            const DiffOp rhs = gamma_of(moyal_bracket(f, g, opt.s));
            if (lhs != rhs) {
                op_ok = false;
                if (op_fail.empty()) op_fail = idx({a, b, c, d});
            }
            for (const auto& [e, h] : tests) {
                const Symbol w = Symbol::power(reg, e, h);
                if (apply(lhs, w) != apply(rhs, w)) {
                    act_ok = false;
                    if (act_fail.empty()) act_fail = idx({a, b, c, d, e, h});
                }
            }
            // Central-extension sign: the operator bracket action equals the
            // bracket of the dequantized Weyl commutator up to the oracle
            // sign.
            const CanonicalElement cf = quantize(f, opt.s, wsig);
            const CanonicalElement cg = quantize(g, opt.s, wsig);
            Symbol deq = dequantize(commutator(cf, cg), opt.s);
            if (kCommutatorBracketSign < 0) deq = -deq;
            for (const auto& [e, h] : tests) {
                if (e + h > 2) continue;
                const Symbol w = Symbol::power(reg, e, h);
                if (apply(lhs, w) != moyal_bracket(deq, w, opt.s)) {
                    central_ok = false;
                    if (central_fail.empty()) central_fail = idx({a, b, c, d, e, h});
                }
            }
        }
    }
    const std::string range = std::to_string(pair_count) + " generator pairs (total degree <= " +
                              std::to_string(bound) + ")";
    check(report, "[Gamma_f, Gamma_g] = Gamma of the Moyal bracket (operators), " + range, op_ok,
          "first violated at " + op_fail);
    check(report, "closure verified on test monomials of degree <= 4", act_ok,
          "first violated at " + act_fail);
    check(report, "bracket action matches signed dequantized Weyl commutator", central_ok,
          "first violated at " + central_fail);
    return report;
}

SuiteReport suite_virasoro(const VerifyOptions& opt) {
    SuiteReport report{"virasoro", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr sig = weyl_signature(reg);
    const Coefficient ihbar = Coefficient::parameter(reg, "hbar").scaled(GaussianRational::i());
    const std::uint32_t bound = opt.nmax < 0 ? 6 : std::uint32_t(opt.nmax);

    bool q_ok = true, p_ok = true, sfree_ok = true, weyl_ok = true;
    std::string q_fail, p_fail, sfree_fail, weyl_fail;
    for (std::uint32_t n = 0; n <= bound; ++n) {
        for (std::uint32_t k = 0; k <= bound; ++k) {
            // q-side: w_n = q^(n+1) p; expect i hbar (k-n) w_(n+k).
            {
                const BracketExpansion got = virasoro_bracket(VirasoroSide::QSide, n, k, opt.s);
                Symbol expect = Symbol::zero(reg);
                expect.add_term({n + k + 1, 1},
                                ihbar.scaled(GaussianRational(long(k) - long(n))));
                if (expansion_to_symbol(got, reg) != expect) {
                    q_ok = false;
                    if (q_fail.empty()) q_fail = idx({n, k});
                }
                for (const auto& [nm, c] : got)
                    if (c.degree_in("s") != 0 || c.degree_in("sp") != 0) {
                        sfree_ok = false;
                        if (sfree_fail.empty()) sfree_fail = idx({n, k});
                    }
            }
            // p-side mirror: w_n = q p^(n+1); expect i hbar (n-k) w_(n+k).
            {
                const BracketExpansion got = virasoro_bracket(VirasoroSide::PSide, n, k, opt.s);
                Symbol expect = Symbol::zero(reg);
                expect.add_term({1, n + k + 1},
                                ihbar.scaled(GaussianRational(long(n) - long(k))));
                if (expansion_to_symbol(got, reg) != expect) {
                    p_ok = false;
                    if (p_fail.empty()) p_fail = idx({n, k});
                }
            }
            // Ordered-product route with the oracle sign:
            // [w_n(s), w_k(s)] = -i hbar (k-n) w_(n+k)(s).
            {
                const CanonicalElement wn = ordered_product(n + 1, 1, opt.s, sig);
                const CanonicalElement wk = ordered_product(k + 1, 1, opt.s, sig);
                const CanonicalElement expect =
                    ordered_product(n + k + 1, 1, opt.s, sig)
                        .scaled(ihbar.scaled(GaussianRational(long(n) - long(k))));
                if (commutator(wn, wk) != expect) {
                    weyl_ok = false;
                    if (weyl_fail.empty()) weyl_fail = idx({n, k});
                }
            }
        }
    }
    const std::string range = "modes <= " + std::to_string(bound);
    check(report, "q-side bracket = i*hbar*(k-n) w_(n+k), " + range, q_ok,
          "first violated at " + q_fail);
    check(report, "p-side bracket = i*hbar*(n-k) w_(n+k), " + range, p_ok,
          "first violated at " + p_fail);
    check(report, "structure constants are independent of the ordering parameter", sfree_ok,
          "first violated at " + sfree_fail);
    check(report, "ordered-product commutators carry the oracle sign, " + range, weyl_ok,
          "first violated at " + weyl_fail);
    return report;
}

SuiteReport suite_kac_moody(const VerifyOptions& opt) {
    SuiteReport report{"kac-moody", {}};
    const auto& reg = opt.s.registry();
    const std::uint32_t bound = opt.nmax < 0 ? 6 : std::uint32_t(opt.nmax);

    const auto run = [&](KacMoodyKind kind, const std::string& label, auto make_pair) {
        bool ok = true;
        std::string fail;
        for (std::uint32_t a = 0; a <= bound; ++a) {
            for (std::uint32_t b = 0; b <= bound; ++b) {
                const auto [f, g] = make_pair(a, b);
                const Symbol expect = moyal_bracket(f, g, opt.s);
                const Symbol got = expansion_to_symbol(kac_moody_bracket(kind, a, b, opt.s), reg);
                if (got != expect) {
                    ok = false;
                    if (fail.empty()) fail = idx({a, b});
                }
            }
        }
        check(report, label + " matches the Moyal bracket for indices <= " + std::to_string(bound),
              ok, "first violated at " + fail);
    };
    run(KacMoodyKind::QnPl, "{q^n, p^l}", [&](std::uint32_t n, std::uint32_t l) {
        return std::make_pair(Symbol::power(reg, n, 0), Symbol::power(reg, 0, l));
    });
    run(KacMoodyKind::QkHn, "{q^k, H^n}", [&](std::uint32_t k, std::uint32_t n) {
        return std::make_pair(Symbol::power(reg, k, 0), Symbol::power(reg, n, n));
    });
    run(KacMoodyKind::PkHn, "{p^k, H^n}", [&](std::uint32_t k, std::uint32_t n) {
        return std::make_pair(Symbol::power(reg, 0, k), Symbol::power(reg, n, n));
    });

    // The towers themselves are abelian.
    bool abelian = true;
    for (std::uint32_t a = 0; a <= bound && abelian; ++a)
        for (std::uint32_t b = 0; b <= bound && abelian; ++b)
            abelian = moyal_bracket(Symbol::power(reg, a, 0), Symbol::power(reg, b, 0), opt.s)
                          .is_zero() &&
                      moyal_bracket(Symbol::power(reg, 0, a), Symbol::power(reg, 0, b), opt.s)
                          .is_zero() &&
                      moyal_bracket(Symbol::power(reg, a, a), Symbol::power(reg, b, b), opt.s)
                          .is_zero();
    check(report, "q-, p- and H-towers are abelian", abelian);
    return report;
}

SuiteReport suite_h_tower(const VerifyOptions& opt) {
    SuiteReport report{"h-tower", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr sig = weyl_signature(reg);
    const std::uint32_t bound = opt.nmax < 0 ? 8 : std::uint32_t(opt.nmax);

    bool prod_ok = true, comm_ok = true;
    std::string prod_fail, comm_fail;
    std::vector<CanonicalElement> towers;
    towers.push_back(CanonicalElement::identity(sig));
    for (std::uint32_t n = 1; n <= bound; ++n) {
        const CanonicalElement h = h_tower(n, sig);
        towers.push_back(h);
        const CanonicalElement expect =
            multiply(CanonicalElement::generator(sig, "qh", n),
                     CanonicalElement::generator(sig, "ph", n));
        if (h != expect) {
            prod_ok = false;
            if (prod_fail.empty()) prod_fail = idx({n});
        }
    }
    for (std::uint32_t n = 1; n <= bound; ++n)
        for (std::uint32_t k = 1; k <= bound; ++k)
            if (!commutator(towers[n], towers[k]).is_zero()) {
                comm_ok = false;
                if (comm_fail.empty()) comm_fail = idx({n, k});
            }
    check(report, "product formula reproduces normal form of qh^n ph^n for n <= " +
                      std::to_string(bound),
          prod_ok, "first violated at " + prod_fail);
    check(report, "[H_n, H_k] = 0 for n,k <= " + std::to_string(bound), comm_ok,
          "first violated at " + comm_fail);
    return report;
}

SuiteReport suite_hermiticity(const VerifyOptions& opt) {
    SuiteReport report{"hermiticity", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr sig = weyl_signature(reg);
    const std::uint32_t bound = opt.nmax < 0 ? 5 : std::uint32_t(opt.nmax);

    bool adj_ok = true;
    std::string adj_fail;
    const OrderParameter minus_s = opt.s.negated();
    for (std::uint32_t n = 0; n <= bound; ++n)
        for (std::uint32_t m = 0; m <= bound; ++m)
            if (ordered_product(n, m, opt.s, sig).adjoint() !=
                ordered_product(n, m, minus_s, sig)) {
                adj_ok = false;
                if (adj_fail.empty()) adj_fail = idx({n, m});
            }
    check(report,
          "adjoint of t_nm(s) is t_nm(-s) for n,m <= " + std::to_string(bound) + " (real s)",
          adj_ok, "first violated at " + adj_fail);

    bool herm_ok = true;
    std::string herm_fail;
    const std::vector<GaussianRational> svalues = {
        GaussianRational(0), GaussianRational(1), GaussianRational(-1), GaussianRational(1, 2),
        GaussianRational(Rational(0), Rational(1, 2))};
    const std::vector<GaussianRational> alphas = {
        GaussianRational(1, 2), GaussianRational(1),
        GaussianRational(Rational(1, 3), Rational(2))};
    for (const auto& sval : svalues) {
        const OrderParameter snum = OrderParameter::numeric(reg, sval);
        for (const auto& alpha : alphas) {
            for (std::uint32_t n = 0; n <= 3; ++n) {
                for (std::uint32_t m = 0; m <= 3; ++m) {
                    const CanonicalElement h = hermitize(n, m, snum, alpha, sig);
                    if (h.adjoint() != h) {
                        herm_ok = false;
                        if (herm_fail.empty()) herm_fail = idx({n, m});
                    }
                }
            }
        }
    }
    check(report, "hermitize outputs are self-adjoint (numeric s incl. complex, n,m <= 3)",
          herm_ok, "first violated at " + herm_fail);
    return report;
}

SuiteReport suite_metaplectic(const VerifyOptions& opt) {
    SuiteReport report{"metaplectic", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr sig = weyl_signature(reg);
    constexpr double kTol = 1e-12;

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const std::vector<MetaplecticGenerator> gens = {
        MetaplecticGenerator::J, MetaplecticGenerator::B1, MetaplecticGenerator::B2,
        MetaplecticGenerator::N1, MetaplecticGenerator::N2};

    for (const auto g : gens) {
        const std::string name = metaplectic_generator_name(g);
        bool group_ok = true, exp_ok = true, det_ok = true;
        double worst_group = 0.0, worst_exp = 0.0;

        // Double-valued representation matrices evaluated at hbar = 1.
        Matrix3 generator{};
        const auto exact = metaplectic_generator_matrix(g, reg);
        const std::map<std::string, GaussianRational> at_one = {{"hbar", GaussianRational(1)}};
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                const GaussianRational v = exact[r][c].substitute(at_one).constant_value();
                generator[r][c] = double(Rational(v.re()).convert_to<double>());
            }

        for (int trial = 0; trial < 100; ++trial) {
            const double a = dist(rng), b = dist(rng);
            const MetaplecticMatrix ma = metaplectic_matrix(g, a);
            const MetaplecticMatrix mb = metaplectic_matrix(g, b);
            const MetaplecticMatrix mab = metaplectic_matrix(g, a + b);
            worst_group = std::max(worst_group, max_abs_diff(matmul3(ma.entries, mb.entries),
                                                             mab.entries));
            Matrix3 scaled = generator;
            for (auto& row : scaled)
                for (double& v : row) v *= a;
            worst_exp = std::max(worst_exp, max_abs_diff(expm3(scaled), ma.entries));
            det_ok = det_ok && std::abs(ma.determinant() - 1.0) < kTol &&
                     ma.entries[2][0] == 0.0 && ma.entries[2][1] == 0.0 && ma.entries[2][2] == 1.0;
        }
        group_ok = worst_group < kTol;
        exp_ok = worst_exp < kTol;
        check(report, name + ": one-parameter group law over 100 random parameters", group_ok,
              "max deviation " + std::to_string(worst_group));
        check(report, name + ": matrix exponential reconstructs the group element", exp_ok,
              "max deviation " + std::to_string(worst_exp));
        check(report, name + ": determinant 1, affine bottom row", det_ok);
    }

    // Exact first-order consistency in the Weyl algebra:
    // [i*G, chi_r] = sum_c M'(0)[r][c] chi_c with chi = (qh, ph, I).
    auto qgens = quantum_isp2(sig);
    const std::vector<HbarScaled> chi = {
        {CanonicalElement::generator(sig, "qh"), 0},
        {CanonicalElement::generator(sig, "ph"), 0},
        {CanonicalElement::identity(sig), 0}};
    for (const auto g : gens) {
        const std::string name = metaplectic_generator_name(g);
        const auto exact = metaplectic_generator_matrix(g, reg);
        bool ok = true;
        for (int r = 0; r < 3; ++r) {
            const HbarScaled lhs =
                commutator(qgens.at(name).scaled(GaussianRational::i()), chi[std::size_t(r)]);
            CanonicalElement rhs = CanonicalElement::zero(sig);
            for (int c = 0; c < 3; ++c) rhs += chi[std::size_t(c)].numerator.scaled(exact[r][c]);
            ok = ok && lhs == HbarScaled{rhs, 0};
        }
        check(report, name + ": first-order Weyl-algebra action matches the generator matrix", ok);
    }
    return report;
}

SuiteReport suite_table1(const VerifyOptions& opt) {
    SuiteReport report{"table1", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr wsig = weyl_signature(reg);
    const SignaturePtr qsig = diffop_signature_qp(reg);
    const SignaturePtr xsig = diffop_signature_xieta(reg);
    const OrderParameter zero = OrderParameter::numeric(reg, GaussianRational(0));

    const Coefficient one = Coefficient::one(reg);
    const Coefficient hbar = Coefficient::parameter(reg, "hbar");
    const Coefficient ihbar = hbar.scaled(GaussianRational::i());
    const Coefficient shbar2 = hbar.pow(2) * opt.s.coeff();
    const GaussianRational i = GaussianRational::i();

    const auto weyl_mono = [&](std::uint32_t a, std::uint32_t b, Coefficient c) {
        return CanonicalElement::monomial(wsig, ExponentVec{a, b}, std::move(c));
    };
    const auto dmono = [&](const SignaturePtr& sg, std::uint32_t a, std::uint32_t b,
                           std::uint32_t c, std::uint32_t d, Coefficient w) {
        return CanonicalElement::monomial(sg, ExponentVec{a, b, c, d}, std::move(w));
    };

    struct Row {
        std::uint32_t n, m;
        CanonicalElement t0;
        DiffOp t_col;
        DiffOp gamma_col;
    };
    const std::vector<Row> rows = {
        {0, 0, weyl_mono(0, 0, one), CanonicalElement::zero(xsig), CanonicalElement::zero(qsig)},
        {1, 0, weyl_mono(1, 0, one), dmono(xsig, 0, 0, 1, 0, -hbar),
         dmono(qsig, 0, 0, 0, 1, ihbar.scaled(GaussianRational(-1)))},
        {0, 1, weyl_mono(0, 1, one), dmono(xsig, 1, 0, 0, 0, hbar),
         dmono(qsig, 0, 1, 0, 0, ihbar)},
        {1, 1, weyl_mono(1, 1, one) + weyl_mono(0, 0, ihbar.scaled(GaussianRational(-1, 2))),
         dmono(xsig, 1, 1, 0, 0, -ihbar) + dmono(xsig, 0, 0, 1, 1, ihbar),
         dmono(qsig, 1, 1, 0, 0, ihbar) + dmono(qsig, 0, 0, 1, 1, -ihbar)},
        {2, 0, weyl_mono(2, 0, one),
         dmono(xsig, 0, 1, 1, 0, ihbar.scaled(GaussianRational(2))) +
             dmono(xsig, 0, 0, 2, 0, -shbar2),
         dmono(qsig, 1, 0, 0, 1, ihbar.scaled(GaussianRational(-2))) +
             dmono(qsig, 0, 0, 0, 2, shbar2)},
        {0, 2, weyl_mono(0, 2, one),
         dmono(xsig, 1, 0, 0, 1, ihbar.scaled(GaussianRational(-2))) +
             dmono(xsig, 2, 0, 0, 0, shbar2),
         dmono(qsig, 0, 1, 1, 0, ihbar.scaled(GaussianRational(2))) +
             dmono(qsig, 0, 2, 0, 0, -shbar2)},
    };
    (void)i;

    for (const auto& row : rows) {
        const std::string nm = idx({row.n, row.m});
        check(report, "t" + nm + " at order 0",
              ordered_product(row.n, row.m, zero, wsig) == row.t0);
        check(report, "T" + nm + " displacement-basis column",
              t_op(row.n, row.m, zero, opt.s, xsig) == row.t_col);
        check(report, "Gamma" + nm + " parity-basis column",
              gamma_op(row.n, row.m, zero, opt.s, qsig) == row.gamma_col);
    }
    return report;
}

SuiteReport suite_closed_form(const VerifyOptions& opt) {
    SuiteReport report{"closed-form", {}};
    const auto& reg = opt.s.registry();
    const SignaturePtr sig = weyl_signature(reg);
    const std::uint32_t bound = opt.nmax < 0 ? 6 : std::uint32_t(opt.nmax);

    // Cache quantized monomials; the commutator route reuses them heavily.
    std::vector<std::vector<CanonicalElement>> t(bound + 1);
    for (std::uint32_t n = 0; n <= bound; ++n)
        for (std::uint32_t m = 0; m <= bound; ++m)
            t[n].push_back(ordered_product(n, m, opt.s, sig));

    bool engine_ok = true, weyl_ok = true, antisym_ok = true, anti_ok = true;
    std::string engine_fail, weyl_fail, antisym_fail, anti_fail;
    for (std::uint32_t n = 0; n <= bound; ++n) {
        for (std::uint32_t m = 0; m <= bound; ++m) {
            const Symbol f = Symbol::power(reg, n, m);
            for (std::uint32_t k = 0; k <= bound; ++k) {
                for (std::uint32_t l = 0; l <= bound; ++l) {
                    const Symbol g = Symbol::power(reg, k, l);
                    const BracketExpansion closed = bracket_closed_form(n, m, k, l, opt.s);
                    const Symbol closed_sym = expansion_to_symbol(closed, reg);

                    if (closed_sym != moyal_bracket(f, g, opt.s)) {
                        engine_ok = false;
                        if (engine_fail.empty()) engine_fail = idx({n, m, k, l});
                    }
                    Symbol deq = dequantize(commutator(t[n][m], t[k][l]), opt.s);
                    if (kCommutatorBracketSign < 0) deq = -deq;
                    if (deq != closed_sym) {
                        weyl_ok = false;
                        if (weyl_fail.empty()) weyl_fail = idx({n, m, k, l});
                    }
                    const Symbol swapped =
                        expansion_to_symbol(bracket_closed_form(k, l, n, m, opt.s), reg);
                    if (swapped != -closed_sym) {
                        antisym_ok = false;
                        if (antisym_fail.empty()) antisym_fail = idx({n, m, k, l});
                    }
                    if (n + m + k + l <= bound) {
                        const Symbol anti = expansion_to_symbol(
                            bracket_closed_form(n, m, k, l, opt.s, true), reg);
                        if (anti != dequantize(anticommutator(t[n][m], t[k][l]), opt.s)) {
                            anti_ok = false;
                            if (anti_fail.empty()) anti_fail = idx({n, m, k, l});
                        }
                    }
                }
            }
        }
    }
    const std::string range = "indices <= " + std::to_string(bound);
    check(report, "closed form equals the bidifferential Moyal bracket, " + range, engine_ok,
          "first violated at " + engine_fail);
    check(report, "closed form equals the signed dequantized commutator, " + range, weyl_ok,
          "first violated at " + weyl_fail);
    check(report, "antisymmetry under (n,m) <-> (k,l), " + range, antisym_ok,
          "first violated at " + antisym_fail);
    check(report, "anti-bracket closed form equals the dequantized anticommutator", anti_ok,
          "first violated at " + anti_fail);

    // Specializations at s = 1, 0, -1 emerge under substitution.
    if (!opt.s.is_numeric()) {
        bool special_ok = true;
        std::string special_fail;
        for (const long sval : {1L, 0L, -1L}) {
            const OrderParameter snum = OrderParameter::numeric(reg, GaussianRational(sval));
            const std::map<std::string, GaussianRational> binding = {
                {"s", GaussianRational(sval)}};
            for (std::uint32_t n = 0; n <= std::min<std::uint32_t>(bound, 4); ++n)
                for (std::uint32_t m = 0; m <= std::min<std::uint32_t>(bound, 4); ++m)
                    for (std::uint32_t k = 0; k <= std::min<std::uint32_t>(bound, 4); ++k)
                        for (std::uint32_t l = 0; l <= std::min<std::uint32_t>(bound, 4); ++l) {
                            const BracketExpansion formal =
                                bracket_closed_form(n, m, k, l, opt.s);
                            const BracketExpansion direct =
                                bracket_closed_form(n, m, k, l, snum);
                            Symbol substituted = Symbol::zero(reg);
                            for (const auto& [nm2, c] : formal)
                                substituted.add_term({nm2.first, nm2.second},
                                                     c.substitute(binding));
                            if (substituted != expansion_to_symbol(direct, reg)) {
                                special_ok = false;
                                if (special_fail.empty())
                                    special_fail = "s=" + std::to_string(sval) + " at " +
                                                   idx({n, m, k, l});
                            }
                        }
        }
        check(report, "boxed specializations s = 1, 0, -1 emerge under substitution", special_ok,
              "first violated at " + special_fail);

        // s = 0 keeps only odd-j terms.
        bool odd_ok = true;
        std::string odd_fail;
        const OrderParameter szero = OrderParameter::numeric(reg, GaussianRational(0));
        for (std::uint32_t n = 0; n <= bound; ++n)
            for (std::uint32_t m = 0; m <= bound; ++m)
                for (std::uint32_t k = 0; k <= bound; ++k)
                    for (std::uint32_t l = 0; l <= bound; ++l)
                        for (const auto& [nm2, c] : bracket_closed_form(n, m, k, l, szero)) {
                            const std::uint32_t j = n + k - nm2.first;
                            if (j % 2 == 0 && !c.is_zero()) {
                                odd_ok = false;
                                if (odd_fail.empty()) odd_fail = idx({n, m, k, l});
                            }
                        }
        check(report, "s = 0 bracket contains only odd transfer orders", odd_ok,
              "first violated at " + odd_fail);
    }
    return report;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "jacobi",    "homomorphism", "isp2",        "bopp",
        "gamma-closure", "virasoro", "kac-moody",   "h-tower",
        "hermiticity",   "metaplectic", "table1",   "closed-form"};
    return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
    if (name == "jacobi") return suite_jacobi(options);
    if (name == "homomorphism") return suite_homomorphism(options);
    if (name == "isp2") return suite_isp2(options);
    if (name == "bopp") return suite_bopp(options);
    if (name == "gamma-closure") return suite_gamma_closure(options);
    if (name == "virasoro") return suite_virasoro(options);
    if (name == "kac-moody") return suite_kac_moody(options);
    if (name == "h-tower") return suite_h_tower(options);
    if (name == "hermiticity") return suite_hermiticity(options);
    if (name == "metaplectic") return suite_metaplectic(options);
    if (name == "table1") return suite_table1(options);
    if (name == "closed-form") return suite_closed_form(options);
    throw Error("unknown verify suite: " + name);
}

}  // namespace moyal
